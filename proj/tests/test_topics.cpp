#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "ise/topics.hpp"
#include "support/synth.hpp"

namespace {

// two documents with disjoint vocabularies {0,1} and {2,3}
ise::LabeledCorpus disjoint_corpus() {
  ise::LabeledCorpus corpus;
  ise::Document d0, d1;
  d0.words = {0, 1, 0, 1, 0, 1, 0, 1};
  d1.words = {2, 3, 2, 3, 2, 3, 2, 3};
  corpus.docs = {d0, d1};
  return corpus;
}

void check_count_conservation(const ise::TopicModel& model, const ise::LabeledCorpus& corpus,
                              int vocab_size) {
  std::vector<std::int64_t> t(static_cast<size_t>(vocab_size), 0);
  for (const auto& doc : corpus.docs)
    for (int w : doc.words) t[static_cast<size_t>(w)]++;
  for (int w = 0; w < vocab_size; ++w) {
    std::int64_t row = 0;
    for (int k = 0; k < model.num_topics(); ++k) row += model.word_topic_count(w, k);
    REQUIRE(row == t[static_cast<size_t>(w)]);
  }
  for (int k = 0; k < model.num_topics(); ++k) {
    std::int64_t col = 0;
    for (int w = 0; w < vocab_size; ++w) col += model.word_topic_count(w, k);
    REQUIRE(col == model.topic_count(k));
  }
}

}  // namespace

TEST_SUITE("topics") {

TEST_CASE("K=1 forces identity 0 everywhere") {
  auto corpus = synth::random_corpus(5, 3, 8, 10, 1, 7);
  corpus.identity_kind = ise::IdentityKind::none;
  auto labeled = ise::label_topics(corpus, 10, 1, -1.0, 0.01, 10, 42);
  CHECK(labeled.num_identities == 1);
  CHECK(labeled.identity_kind == ise::IdentityKind::topic);
  for (const auto& doc : labeled.docs) {
    REQUIRE(doc.identities.size() == doc.words.size());
    for (int id : doc.identities) CHECK(id == 0);
  }
}

TEST_CASE("conditional: K=1 and uniform-state symmetry") {
  ise::LabeledCorpus corpus;
  ise::Document d;
  d.words = {0, 1, 0, 1};
  corpus.docs = {d};

  ise::TopicModel single(corpus, 2, 1, 0.5, 0.01, 3);
  auto p = single.conditional(0, 0);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == doctest::Approx(1.0));

  // With the queried token excluded, a single-token corpus leaves every count
  // equal (zero) across topics: the conditional must be exactly uniform.
  ise::LabeledCorpus lone;
  ise::Document only;
  only.words = {0};
  lone.docs = {only};
  for (int k : {2, 5}) {
    ise::TopicModel model(lone, 1, k, 0.5, 0.01, 4);
    auto probs = model.conditional(0, 0);
    for (double v : probs) CHECK(v == doctest::Approx(1.0 / k).epsilon(1e-13));
  }
}

TEST_CASE("conditional matches closed-form ratios and sums to 1") {
  auto corpus = synth::random_corpus(6, 5, 15, 12, 1, 21);
  const int V = 12, K = 4;
  const double alpha = 0.7, beta = 0.05;
  ise::TopicModel model(corpus, V, K, alpha, beta, 5);
  model.run(3);

  for (int d = 0; d < model.num_docs(); ++d) {
    const auto& doc = corpus.docs[static_cast<size_t>(d)];
    for (size_t i = 0; i < doc.words.size(); ++i) {
      auto probs = model.conditional(d, static_cast<int>(i));
      double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

      // independent evaluation of the collapsed conditional
      int w = doc.words[i];
      int z = model.assignments()[static_cast<size_t>(d)][i];
      std::vector<double> expected(K);
      double total = 0.0;
      for (int k = 0; k < K; ++k) {
        double nwk = model.word_topic_count(w, k) - (k == z ? 1 : 0);
        double nk = static_cast<double>(model.topic_count(k)) - (k == z ? 1 : 0);
        double ndk = model.doc_topic_count(d, k) - (k == z ? 1 : 0);
        expected[static_cast<size_t>(k)] = (nwk + beta) / (nk + V * beta) * (ndk + alpha);
        total += expected[static_cast<size_t>(k)];
      }
      for (int k = 0; k < K; ++k)
        CHECK(probs[static_cast<size_t>(k)] ==
              doctest::Approx(expected[static_cast<size_t>(k)] / total).epsilon(1e-12));
    }
  }
}

TEST_CASE("count conservation holds after every sweep") {
  auto corpus = synth::random_corpus(10, 40, 60, 25, 1, 77);  // ~500 tokens
  ise::TopicModel model(corpus, 25, 5, 0.5, 0.01, 11);
  check_count_conservation(model, corpus, 25);
  for (int s = 0; s < 10; ++s) {
    model.sweep();
    check_count_conservation(model, corpus, 25);
  }
}

TEST_CASE("disjoint-vocabulary documents separate into distinct topics") {
  auto corpus = disjoint_corpus();
  int good = 0;
  const int runs = 100;
  for (int run = 0; run < runs; ++run) {
    ise::TopicModel model(corpus, 4, 2, 0.5, 0.01, 1000 + static_cast<std::uint64_t>(run));
    model.run(200);
    const auto& a = model.assignments();
    bool pure0 = std::all_of(a[0].begin(), a[0].end(), [&](int z) { return z == a[0][0]; });
    bool pure1 = std::all_of(a[1].begin(), a[1].end(), [&](int z) { return z == a[1][0]; });
    if (pure0 && pure1 && a[0][0] != a[1][0]) good++;
  }
  CHECK(good >= 95);
}

TEST_CASE("parameter validation") {
  auto corpus = synth::random_corpus(2, 2, 4, 5, 1, 3);
  CHECK_THROWS_AS(ise::label_topics(corpus, 5, 0, -1, 0.01, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(ise::label_topics(corpus, 5, 2, -1, 0.01, 0, 1), std::invalid_argument);
  ise::LabeledCorpus empty;
  CHECK_THROWS_AS(ise::label_topics(empty, 5, 2, -1, 0.01, 10, 1), std::invalid_argument);
}

}  // TEST_SUITE
