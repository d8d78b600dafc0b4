#include <benchmark/benchmark.h>

#include "ise/topics.hpp"

namespace {

ise::LabeledCorpus gibbs_corpus(int docs, int len, int vocab) {
  ise::Rng rng(31);
  ise::LabeledCorpus corpus;
  for (int d = 0; d < docs; ++d) {
    ise::Document doc;
    for (int i = 0; i < len; ++i)
      doc.words.push_back(static_cast<int>(rng.uniform_int(vocab)));
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

// tokens resampled per second, one full sweep per iteration
void BM_GibbsSweep(benchmark::State& state) {
  const int vocab = 2000;
  auto corpus = gibbs_corpus(500, 60, vocab);
  ise::TopicModel model(corpus, vocab, static_cast<int>(state.range(0)), 0.5, 0.01, 9);
  for (auto _ : state) {
    model.sweep();
  }
  state.SetItemsProcessed(state.iterations() * 500 * 60);
}
BENCHMARK(BM_GibbsSweep)->Arg(20)->Arg(80)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
