#include <benchmark/benchmark.h>

#include "ise/network.hpp"
#include "ise/trainer.hpp"

namespace {

struct Setup {
  ise::LabeledCorpus corpus;
  ise::SenseRegistry registry;
  ise::BipartiteNetwork wc, wi;
  std::vector<std::string> tokens;
};

Setup make_setup(int vocab, int identities) {
  Setup s;
  ise::Rng rng(11);
  s.corpus.identity_kind = ise::IdentityKind::topic;
  s.corpus.num_identities = identities;
  for (int d = 0; d < 200; ++d) {
    ise::Document doc;
    for (int i = 0; i < 40; ++i) {
      doc.words.push_back(static_cast<int>(rng.uniform_int(vocab)));
      doc.identities.push_back(static_cast<int>(rng.uniform_int(identities)));
    }
    s.corpus.docs.push_back(std::move(doc));
  }
  s.registry = ise::SenseRegistry::build(s.corpus, vocab);
  s.wc = ise::build_word_context_network(s.corpus, s.registry, 5);
  s.wi = ise::build_word_identity_network(s.corpus, s.registry);
  for (int i = 0; i < vocab; ++i) s.tokens.push_back("w" + std::to_string(i));
  return s;
}

void BM_SgdUpdate(benchmark::State& state) {
  auto s = make_setup(500, 4);
  ise::EmbeddingModel model(s.registry, s.tokens, 4, static_cast<int>(state.range(0)));
  ise::Rng rng(21);
  for (auto& v : model.sense_table()) v = rng.uniform() - 0.5;
  for (auto& v : model.context_table()) v = rng.uniform() - 0.5;

  ise::EdgeSample sample;
  sample.kind = ise::AnchorKind::context;
  sample.positive = 0;
  sample.anchor = 1;
  sample.negatives = {1, 2, 3, 4, 5};
  for (auto _ : state) {
    ise::sgd_update(model, sample, 1e-6);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SgdUpdate)->Arg(50)->Arg(100)->Arg(300);

// end-to-end iterations/second of the alternating trainer
void BM_Train(benchmark::State& state) {
  auto s = make_setup(500, 4);
  for (auto _ : state) {
    ise::TrainerConfig config;
    config.dim = 100;
    config.samples = state.range(0);
    config.seed = 3;
    auto model = ise::train(s.wc, s.wi, s.registry, s.tokens, config);
    benchmark::DoNotOptimize(model.num_senses());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Train)->Unit(benchmark::kMillisecond)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
