// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion; exits nonzero if any criterion fails.
//
// Criterion 5 needs the MR movie-review corpus (7,108 train / 3,554 test
// lines, "label<TAB>text") at $ISE_MR_DIR or <source>/data/mr/{train,test}.tsv.
// Without the dataset that criterion reports FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ise/classify.hpp"
#include "ise/corpus.hpp"
#include "ise/eval.hpp"
#include "ise/identity.hpp"
#include "ise/model.hpp"
#include "ise/network.hpp"
#include "ise/rng.hpp"
#include "ise/sentiment.hpp"
#include "ise/topics.hpp"
#include "ise/trainer.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"
#include "support/temp.hpp"

namespace {

struct Outcome {
  bool pass = false;
  std::string details;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format(double v, int precision = 3) {
  std::ostringstream ss;
  ss.precision(precision);
  ss << std::fixed << v;
  return ss.str();
}

// ---------------------------------------------------------------------------
// 1. Gradient correctness: analytic vs central finite differences.
// ---------------------------------------------------------------------------

Outcome criterion_gradients() {
  ise::Rng rng(20240801);
  int instances = 0;
  double worst = 0.0;

  for (int dim : {2, 10, 50}) {
    for (int negatives : {1, 5}) {
      auto corpus = synth::random_corpus(6, 8, 20, 15, 3, 1000 + dim + negatives);
      auto registry = ise::SenseRegistry::build(corpus, 15);
      ise::EmbeddingModel model(registry, synth::numbered_tokens(15), 3, dim);
      for (auto& v : model.sense_table()) v = rng.uniform() * 2.0 - 1.0;
      for (auto& v : model.context_table()) v = rng.uniform() * 2.0 - 1.0;
      for (auto& v : model.identity_table()) v = rng.uniform() * 2.0 - 1.0;

      for (int trial = 0; trial < 20; ++trial) {
        ise::EdgeSample s;
        s.kind = trial % 2 ? ise::AnchorKind::context : ise::AnchorKind::identity;
        s.positive = static_cast<int>(rng.uniform_int(registry.size()));
        s.anchor = s.kind == ise::AnchorKind::context
                       ? static_cast<int>(rng.uniform_int(15))
                       : static_cast<int>(rng.uniform_int(3));
        for (int k = 0; k < negatives; ++k)
          s.negatives.push_back(static_cast<int>(rng.uniform_int(registry.size())));

        auto grads = ise::edge_gradients(model, s);
        const double h = 1e-5;
        auto check_coordinate = [&](double* entry, double analytic) {
          double saved = *entry;
          *entry = saved + h;
          double up = ise::edge_loss(model, s);
          *entry = saved - h;
          double down = ise::edge_loss(model, s);
          *entry = saved;
          double numeric = (up - down) / (2.0 * h);
          double rel = std::abs(numeric - analytic) /
                       std::max({std::abs(numeric), std::abs(analytic), 1e-6});
          worst = std::max(worst, rel);
        };

        for (const auto& [row, grad] : grads.sense_rows)
          for (int j = 0; j < dim; ++j)
            check_coordinate(&model.sense_table()[static_cast<size_t>(row) * dim + j],
                             grad[static_cast<size_t>(j)]);
        auto& anchor_table = s.kind == ise::AnchorKind::context ? model.context_table()
                                                                : model.identity_table();
        for (int j = 0; j < dim; ++j)
          check_coordinate(&anchor_table[static_cast<size_t>(s.anchor) * dim + j],
                           grads.anchor[static_cast<size_t>(j)]);
        instances++;
      }
    }
  }

  Outcome out;
  out.pass = instances >= 100 && worst < 1e-4;
  out.details = std::to_string(instances) + " instances, worst rel err " + format(worst, 8);
  return out;
}

// ---------------------------------------------------------------------------
// 2. Sampler fidelity: chi-square goodness of fit with 1e6 draws.
// ---------------------------------------------------------------------------

Outcome run_chi_square(const std::vector<double>& weights, std::uint64_t seed, double& pvalue) {
  ise::AliasTable table{weights};
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<double> probs(weights.size());
  for (size_t i = 0; i < weights.size(); ++i) probs[i] = weights[i] / total;

  const std::int64_t draws = 1000000;
  std::vector<std::int64_t> observed(weights.size(), 0);
  ise::Rng rng(seed);
  for (std::int64_t i = 0; i < draws; ++i) observed[static_cast<size_t>(table.sample(rng))]++;

  double stat = oracle::chi_square_stat(observed, probs, draws);
  pvalue = oracle::chi_square_pvalue(stat, static_cast<double>(weights.size() - 1));
  Outcome out;
  out.pass = pvalue > 0.001;
  return out;
}

Outcome criterion_samplers() {
  // edge weights of a real word-context network
  auto corpus = synth::random_corpus(30, 20, 60, 40, 3, 42);
  auto registry = ise::SenseRegistry::build(corpus, 40);
  auto net = ise::build_word_context_network(corpus, registry, 5);
  std::vector<double> edge_weights;
  for (const auto& e : net.edges) edge_weights.push_back(e.weight);

  double p_edges = 0.0, p_noise = 0.0;
  Outcome edges = run_chi_square(edge_weights, 7001, p_edges);

  // noise distribution freq^0.75 over sense rows
  std::vector<double> noise_mass;
  for (std::int64_t f : registry.frequencies())
    noise_mass.push_back(std::pow(static_cast<double>(f), 0.75));
  Outcome noise = run_chi_square(noise_mass, 7002, p_noise);

  Outcome out;
  out.pass = edges.pass && noise.pass;
  out.details = "edge table p=" + format(p_edges) + " (" +
                std::to_string(edge_weights.size()) + " edges), noise table p=" +
                format(p_noise) + " (" + std::to_string(noise_mass.size()) + " senses)";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Network builders match brute-force enumeration.
// ---------------------------------------------------------------------------

Outcome criterion_network_oracle() {
  int corpora = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int window = std::vector<int>{1, 2, 5}[seed % 3];
    // <= 500 tokens per corpus
    auto corpus = synth::random_corpus(8, 10, 50, 30, 3, 5000 + seed);
    auto registry = ise::SenseRegistry::build(corpus, 30);

    auto wc = ise::build_word_context_network(corpus, registry, window);
    auto expected_wc = oracle::word_context_edges(corpus, window);
    if (wc.edges.size() != expected_wc.size()) {
      return {false, "edge count mismatch on corpus " + std::to_string(seed)};
    }
    for (const auto& e : wc.edges) {
      const auto& s = registry.sense(e.source);
      auto it = expected_wc.find({s.word, s.identity, e.target});
      if (it == expected_wc.end() || it->second != e.weight)
        return {false, "wc edge mismatch on corpus " + std::to_string(seed)};
    }

    auto wi = ise::build_word_identity_network(corpus, registry);
    auto expected_wi = oracle::word_identity_edges(corpus);
    if (wi.edges.size() != expected_wi.size())
      return {false, "wi edge count mismatch on corpus " + std::to_string(seed)};
    for (const auto& e : wi.edges) {
      const auto& s = registry.sense(e.source);
      auto it = expected_wi.find({s.word, s.identity, e.target});
      if (it == expected_wi.end() || it->second != e.weight)
        return {false, "wi edge mismatch on corpus " + std::to_string(seed)};
    }
    corpora++;
  }
  return {true, std::to_string(corpora) + " corpora, windows {1,2,5}, exact match"};
}

// ---------------------------------------------------------------------------
// 4. Planted-identity recovery.
// ---------------------------------------------------------------------------

Outcome criterion_planted() {
  auto planted = synth::make_planted_corpus(2000, 500, 200, 20, 0.2, 31337);
  const int vocab = planted.vocab_size();

  auto registry = ise::SenseRegistry::build(planted.train, vocab);
  auto wc = ise::build_word_context_network(planted.train, registry, 5);
  auto wi = ise::build_word_identity_network(planted.train, registry);

  ise::TrainerConfig config;
  config.dim = 20;
  config.samples = 2000000;
  config.negatives = 5;
  config.seed = 99;
  config.workers = 1;
  auto model = ise::train(wc, wi, registry, synth::numbered_tokens(vocab), config);

  // token accuracy on ambiguous words in held-out documents
  std::int64_t ambiguous_tokens = 0, correct = 0;
  for (const auto& doc : planted.heldout.docs) {
    for (size_t i = 0; i < doc.words.size(); ++i) {
      if (!planted.is_ambiguous(doc.words[i])) continue;
      if (model.registry().senses_of(doc.words[i]).empty()) continue;
      ambiguous_tokens++;
      if (ise::infer_identity(model, doc.words, i) == doc.label) correct++;
    }
  }
  double accuracy = static_cast<double>(correct) / static_cast<double>(ambiguous_tokens);

  // neighborhood purity: for every ambiguous sense, >= 80% of its top-10
  // neighbors belong to the planted identity's vocabulary
  int senses_checked = 0, senses_pure = 0;
  double worst_purity = 1.0;
  for (int w = 2 * planted.topical; w < vocab; ++w) {
    for (const auto& sense : model.registry().senses_of(w)) {
      auto neighbors = ise::nearest_neighbors(model, sense.row, 10);
      int in_identity = 0;
      for (const auto& nb : neighbors) {
        int planted_id = planted.topical_identity(nb.sense.word);
        bool ok = planted_id >= 0 ? planted_id == sense.identity
                                  : nb.sense.identity == sense.identity;
        if (ok) in_identity++;
      }
      double purity = in_identity / 10.0;
      worst_purity = std::min(worst_purity, purity);
      senses_checked++;
      if (purity >= 0.8) senses_pure++;
    }
  }

  Outcome out;
  out.pass = accuracy >= 0.90 && senses_pure == senses_checked && model.all_finite();
  out.details = "ambiguous-token accuracy " + format(accuracy) + " (" +
                std::to_string(ambiguous_tokens) + " tokens), neighbor purity >= 0.8 for " +
                std::to_string(senses_pure) + "/" + std::to_string(senses_checked) +
                " senses (worst " + format(worst_purity, 2) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// 5. MR sentiment classification.
// ---------------------------------------------------------------------------

struct MrPipelineResult {
  double micro_f1 = 0.0;
};

MrPipelineResult run_mr_pipeline(const ise::LoadedCorpus& loaded, const std::string& test_path,
                                 bool baseline) {
  ise::LabeledCorpus labeled;
  if (baseline) {
    labeled = ise::label_none(loaded.corpus);
  } else {
    auto lexicon = ise::select_sentiment_words(loaded.corpus, loaded.vocab.size(), 10.0);
    labeled = ise::label_sentiment(loaded.corpus, lexicon);
  }

  auto registry = ise::SenseRegistry::build(labeled, loaded.vocab.size());
  auto wc = ise::build_word_context_network(labeled, registry, 5);
  auto wi = ise::build_word_identity_network(labeled, registry);

  ise::TrainerConfig config;
  config.dim = 100;
  config.samples = 10000000;
  config.negatives = 5;
  config.seed = 1;
  config.workers = 1;
  auto model = ise::train(wc, wi, registry, loaded.vocab.tokens(), config);

  std::vector<std::vector<double>> train_x;
  std::vector<int> train_y;
  for (const auto& doc : labeled.docs) {
    train_x.push_back(ise::document_embedding(model, doc));
    train_y.push_back(doc.label);
  }

  std::unordered_map<std::string, int> label_index;
  for (size_t i = 0; i < labeled.label_names.size(); ++i)
    label_index.emplace(labeled.label_names[i], i);

  std::ifstream in(test_path);
  std::vector<std::vector<double>> test_x;
  std::vector<int> test_y;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    auto it = label_index.find(line.substr(0, tab));
    if (it == label_index.end()) continue;
    ise::Document doc;
    for (const auto& tok : ise::tokenize(line.substr(tab + 1))) {
      int id = model.word_id(tok);
      if (id < 0 || model.registry().senses_of(id).empty()) continue;
      doc.words.push_back(id);
    }
    doc.identities.resize(doc.words.size(), 0);
    for (size_t i = 0; i < doc.words.size(); ++i)
      doc.identities[i] = ise::infer_identity(model, doc.words, i);
    test_x.push_back(ise::document_embedding(model, doc));
    test_y.push_back(it->second);
  }

  auto clf = ise::LogisticClassifier::train(train_x, train_y, 1.0);
  auto report = ise::classification_report(clf.predict(test_x), test_y);
  return {report.micro_f1 * 100.0};
}

Outcome criterion_mr() {
  namespace fs = std::filesystem;
  std::string dir;
  if (const char* env = std::getenv("ISE_MR_DIR")) dir = env;
  if (dir.empty()) dir = std::string(ISE_SOURCE_DIR) + "/data/mr";
  std::string train_path = dir + "/train.tsv";
  std::string test_path = dir + "/test.tsv";
  if (!fs::exists(train_path) || !fs::exists(test_path)) {
    return {false,
            "MR dataset not found at " + dir +
                " (expected train.tsv/test.tsv, label<TAB>text, 7108/3554 lines); "
                "set ISE_MR_DIR to run this criterion"};
  }

  auto count_lines = [](const std::string& path) {
    std::ifstream in(path);
    std::string line;
    long n = 0;
    while (std::getline(in, line)) {
      if (!line.empty()) n++;
    }
    return n;
  };
  long train_lines = count_lines(train_path);
  long test_lines = count_lines(test_path);
  if (train_lines != 7108 || test_lines != 3554) {
    return {false, "MR split mismatch: found " + std::to_string(train_lines) + "/" +
                       std::to_string(test_lines) + " lines, expected 7108/3554"};
  }

  auto loaded = ise::load_corpus(train_path, /*labeled=*/true, {}, 5);
  auto ise_result = run_mr_pipeline(loaded, test_path, /*baseline=*/false);
  auto baseline = run_mr_pipeline(loaded, test_path, /*baseline=*/true);

  bool near_paper = std::abs(ise_result.micro_f1 - 73.5) <= 3.0;
  bool beats_baseline = ise_result.micro_f1 - baseline.micro_f1 >= 1.0;
  Outcome out;
  out.pass = near_paper && beats_baseline;
  out.details = "ISE micro-F1 " + format(ise_result.micro_f1, 2) + " (target 73.5 +- 3.0), " +
                "baseline " + format(baseline.micro_f1, 2) + " (margin " +
                format(ise_result.micro_f1 - baseline.micro_f1, 2) + ", need >= 1.0)";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Topic-count stability.
// ---------------------------------------------------------------------------

struct StabilityPoint {
  double ise_micro = 0.0;
  double lda_micro = 0.0;
};

StabilityPoint stability_for_k(const synth::SubtopicCorpus& data, int k) {
  const double alpha = 50.0 / k, beta = 0.01;
  const int sweeps = 150;
  ise::TopicModel topic_model(data.train, data.vocab, k, alpha, beta, 4000 + k);
  topic_model.run(sweeps);

  ise::LabeledCorpus labeled = data.train;
  labeled.identity_kind = ise::IdentityKind::topic;
  labeled.num_identities = k;
  for (size_t d = 0; d < labeled.docs.size(); ++d)
    labeled.docs[d].identities = topic_model.assignments()[d];

  auto registry = ise::SenseRegistry::build(labeled, data.vocab);
  auto wc = ise::build_word_context_network(labeled, registry, 5);
  auto wi = ise::build_word_identity_network(labeled, registry);

  ise::TrainerConfig config;
  config.dim = 50;
  config.samples = 20000000;
  config.negatives = 5;
  config.seed = 17;
  config.workers = 1;
  auto model = ise::train(wc, wi, registry, synth::numbered_tokens(data.vocab), config);

  std::vector<std::vector<double>> train_x, test_x, lda_train_x, lda_test_x;
  std::vector<int> train_y, test_y;
  for (size_t d = 0; d < labeled.docs.size(); ++d) {
    train_x.push_back(ise::document_embedding(model, labeled.docs[d]));
    lda_train_x.push_back(topic_model.document_proportions(static_cast<int>(d)));
    train_y.push_back(labeled.docs[d].label);
  }
  for (const auto& doc : data.test.docs) {
    ise::Document inferred;
    for (int w : doc.words) {
      if (model.registry().senses_of(w).empty()) continue;
      inferred.words.push_back(w);
    }
    inferred.identities.resize(inferred.words.size(), 0);
    for (size_t i = 0; i < inferred.words.size(); ++i)
      inferred.identities[i] = ise::infer_identity(model, inferred.words, i);
    test_x.push_back(ise::document_embedding(model, inferred));
    lda_test_x.push_back(topic_model.infer_proportions(doc.words, 30, 4100 + k));
    test_y.push_back(doc.label);
  }

  StabilityPoint point;
  auto ise_clf = ise::LogisticClassifier::train(train_x, train_y, 1.0);
  point.ise_micro = ise::classification_report(ise_clf.predict(test_x), test_y).micro_f1 * 100.0;
  auto lda_clf = ise::LogisticClassifier::train(lda_train_x, train_y, 1.0);
  point.lda_micro =
      ise::classification_report(lda_clf.predict(lda_test_x), test_y).micro_f1 * 100.0;
  return point;
}

Outcome criterion_stability() {
  auto data = synth::make_subtopic_corpus(4, 12, 30, 200, 2000, 600, 0.6, 2025);
  std::vector<int> ks = {20, 40, 80};
  std::vector<StabilityPoint> points;
  for (int k : ks) points.push_back(stability_for_k(data, k));

  auto minmax_ise = std::minmax_element(points.begin(), points.end(),
                                        [](auto& a, auto& b) { return a.ise_micro < b.ise_micro; });
  auto minmax_lda = std::minmax_element(points.begin(), points.end(),
                                        [](auto& a, auto& b) { return a.lda_micro < b.lda_micro; });
  double ise_range = minmax_ise.second->ise_micro - minmax_ise.first->ise_micro;
  double lda_range = minmax_lda.second->lda_micro - minmax_lda.first->lda_micro;

  Outcome out;
  out.pass = ise_range <= 3.0 && lda_range > 3.0;
  std::string detail = "ISE micro-F1 {";
  for (size_t i = 0; i < points.size(); ++i)
    detail += (i ? ", " : "") + format(points[i].ise_micro, 1);
  detail += "} range " + format(ise_range, 2) + " (<= 3.0); LDA {";
  for (size_t i = 0; i < points.size(); ++i)
    detail += (i ? ", " : "") + format(points[i].lda_micro, 1);
  detail += "} range " + format(lda_range, 2) + " (> 3.0)";
  out.details = detail;
  return out;
}

// ---------------------------------------------------------------------------
// 7. Softmax diagnostic normalization.
// ---------------------------------------------------------------------------

Outcome criterion_softmax() {
  double worst = 0.0;
  for (int num_senses : {10, 500, 10000}) {
    std::vector<ise::SenseId> senses(static_cast<size_t>(num_senses));
    std::vector<std::int64_t> freq(static_cast<size_t>(num_senses), 1);
    for (int r = 0; r < num_senses; ++r) senses[static_cast<size_t>(r)] = {r, 0, r};
    auto registry = ise::SenseRegistry::from_senses(std::move(senses), std::move(freq),
                                                    num_senses, 1);
    ise::EmbeddingModel model(registry, synth::numbered_tokens(num_senses), 1, 16);
    ise::Rng rng(600 + num_senses);
    for (auto& v : model.sense_table()) v = rng.uniform() * 8.0 - 4.0;
    for (auto& v : model.context_table()) v = rng.uniform() * 8.0 - 4.0;
    for (auto& v : model.identity_table()) v = rng.uniform() * 8.0 - 4.0;

    for (int anchor = 0; anchor < 5; ++anchor) {
      auto probs = ise::evaluate_softmax(model, anchor, ise::AnchorKind::context);
      double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    auto id_probs = ise::evaluate_softmax(model, 0, ise::AnchorKind::identity);
    worst = std::max(worst,
                     std::abs(std::accumulate(id_probs.begin(), id_probs.end(), 0.0) - 1.0));
  }
  return {worst < 1e-10, "worst |sum-1| = " + format(worst, 14) + " up to 10^4 senses"};
}

// ---------------------------------------------------------------------------
// 8. End-to-end determinism via the CLI.
// ---------------------------------------------------------------------------

int run_tool(const std::string& args) {
  std::string cmd = std::string(ISE_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome criterion_determinism() {
  testutil::TempDir dir;

  // small labeled corpus rendered as text
  auto planted = synth::make_planted_corpus(60, 0, 30, 6, 0.25, 777);
  std::ostringstream corpus_text;
  for (const auto& doc : planted.train.docs) {
    corpus_text << planted.train.label_names[static_cast<size_t>(doc.label)] << '\t';
    for (size_t i = 0; i < doc.words.size(); ++i)
      corpus_text << (i ? " " : "") << "w" << doc.words[i];
    corpus_text << '\n';
  }
  testutil::write_file(dir.file("corpus.txt"), corpus_text.str());
  testutil::write_file(dir.file("test.txt"), corpus_text.str());

  auto run_pipeline = [&](const std::string& tag) -> bool {
    std::string p = dir.file(tag);
    if (run_tool("label-topics --input " + dir.file("corpus.txt") +
                 " --labeled --topics 3 --iters 40 --seed 5 --min-count 1 --output " + p))
      return false;
    if (run_tool("build-net --corpus " + p + " --window 5 --output " + p)) return false;
    if (run_tool("train --corpus " + p + " --net " + p +
                 " --dim 16 --samples 20000 --seed 5 --workers 1 --output " + p + ".model"))
      return false;
    std::string report = dir.file(tag + ".report");
    std::string cmd = std::string(ISE_TOOL_PATH) + " eval-classify --model " + p +
                      ".model --train " + p + " --test " + dir.file("test.txt") + " >" + report +
                      " 2>/dev/null";
    if (std::system(cmd.c_str())) return false;
    if (run_tool("infer-identity --model " + p + ".model --input " + dir.file("test.txt") +
                 " --labeled --output " + p + ".inferred"))
      return false;
    return true;
  };

  if (!run_pipeline("a") || !run_pipeline("b"))
    return {false, "pipeline stage failed"};

  std::vector<std::string> artifacts = {".labeled", ".vocab",         ".meta",
                                        ".wc.tsv",  ".wi.tsv",        ".model/model.bin",
                                        ".model/senses.txt",          ".model/context.txt",
                                        ".model/identity.txt",        ".report", ".inferred"};
  for (const auto& suffix : artifacts) {
    auto a = testutil::read_file(dir.file("a") + suffix);
    auto b = testutil::read_file(dir.file("b") + suffix);
    if (a.empty() || a != b) return {false, "artifact differs or is empty: " + suffix};
  }
  return {true, std::to_string(artifacts.size()) + " artifacts byte-identical across two runs"};
}

// ---------------------------------------------------------------------------
// 9. Metric oracles.
// ---------------------------------------------------------------------------

Outcome criterion_metric_oracles() {
  ise::Rng rng(90909);
  int spearman_checked = 0, report_checked = 0;

  for (int trial = 0; trial < 1000; ++trial) {
    size_t n = 2 + rng.uniform_int(40);
    std::vector<double> xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
      xs[i] = static_cast<double>(rng.uniform_int(10));  // duplicates force tie handling
      ys[i] = static_cast<double>(rng.uniform_int(10));
    }
    bool const_x = std::all_of(xs.begin(), xs.end(), [&](double v) { return v == xs[0]; });
    bool const_y = std::all_of(ys.begin(), ys.end(), [&](double v) { return v == ys[0]; });
    if (!const_x && !const_y) {
      double got = ise::spearman(xs, ys);
      double expected = oracle::spearman_bruteforce(xs, ys);
      if (std::abs(got - expected) > 1e-12)
        return {false, "spearman mismatch on trial " + std::to_string(trial)};
      spearman_checked++;
    }

    size_t m = 1 + rng.uniform_int(60);
    int classes = 2 + static_cast<int>(rng.uniform_int(5));
    std::vector<int> gold(m), pred(m);
    for (size_t i = 0; i < m; ++i) {
      gold[i] = static_cast<int>(rng.uniform_int(classes));
      pred[i] = static_cast<int>(rng.uniform_int(classes));
    }
    auto report = ise::classification_report(pred, gold);
    auto brute = oracle::metrics_bruteforce(pred, gold);
    if (std::abs(report.micro_f1 - brute.micro_f1) > 1e-12 ||
        std::abs(report.macro_f1 - brute.macro_f1) > 1e-12)
      return {false, "report mismatch on trial " + std::to_string(trial)};
    report_checked++;
  }
  return {true, std::to_string(spearman_checked) + " spearman + " +
                    std::to_string(report_checked) + " report instances match exactly"};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {1, "gradient correctness", criterion_gradients},
      {2, "sampler fidelity", criterion_samplers},
      {3, "network oracle equivalence", criterion_network_oracle},
      {4, "planted-identity recovery", criterion_planted},
      {5, "MR sentiment classification", criterion_mr},
      {6, "topic-count stability", criterion_stability},
      {7, "softmax diagnostic", criterion_softmax},
      {8, "end-to-end determinism", criterion_determinism},
      {9, "metric oracles", criterion_metric_oracles},
  };

  // optional criterion ids on the command line restrict the run
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.id) == selected.end())
      continue;
    auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) failures++;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
              << criterion.name << " - " << outcome.details << " ("
              << format(seconds_since(start), 1) << "s)" << std::endl;
  }

  if (failures) {
    std::cout << failures << " of " << criteria.size() << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed" << std::endl;
  return 0;
}
