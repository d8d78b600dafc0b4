// Command-line pipeline for identity-sensitive word embeddings:
//   label-* -> build-net -> train -> infer-identity / nearest / eval-*
// Stages communicate through files, so any stage can resume from the
// previous stage's artifacts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ise/classify.hpp"
#include "ise/corpus.hpp"
#include "ise/errors.hpp"
#include "ise/eval.hpp"
#include "ise/identity.hpp"
#include "ise/model.hpp"
#include "ise/network.hpp"
#include "ise/rng.hpp"
#include "ise/sentiment.hpp"
#include "ise/topics.hpp"
#include "ise/trainer.hpp"

namespace {

struct CorpusArtifacts {
  ise::Vocabulary vocab;
  ise::LabeledCorpus corpus;
};

void write_corpus_artifacts(const std::string& prefix, const ise::LabeledCorpus& corpus,
                            const ise::Vocabulary& vocab) {
  ise::save_labeled_corpus(corpus, vocab, prefix + ".labeled");
  ise::save_vocabulary(vocab, prefix + ".vocab");
  ise::save_corpus_meta(corpus, prefix + ".meta");
}

CorpusArtifacts read_corpus_artifacts(const std::string& prefix) {
  CorpusArtifacts art;
  art.vocab = ise::load_vocabulary(prefix + ".vocab");
  ise::LabeledCorpus meta = ise::load_corpus_meta(prefix + ".meta");
  art.corpus = ise::load_labeled_corpus(prefix + ".labeled", art.vocab, meta.identity_kind,
                                        meta.num_identities, meta.label_names);
  return art;
}

std::unordered_set<std::string> maybe_stopwords(const std::string& path) {
  if (path.empty()) return {};
  return ise::load_stopwords(path);
}

// Tokenizes one raw document against a trained model's vocabulary and infers
// per-token identities. Tokens without a sense row are dropped.
ise::Document infer_document(const ise::EmbeddingModel& model,
                             const std::vector<std::string>& tokens, std::int64_t& dropped) {
  ise::Document doc;
  for (const auto& tok : tokens) {
    int id = model.word_id(tok);
    if (id < 0 || model.registry().senses_of(id).empty()) {
      dropped++;
      continue;
    }
    doc.words.push_back(id);
  }
  doc.identities.resize(doc.words.size(), 0);
  for (size_t i = 0; i < doc.words.size(); ++i)
    doc.identities[i] = ise::infer_identity(model, doc.words, i);
  return doc;
}

struct LabelCommon {
  std::string input;
  std::string output;
  std::string stopword_file;
  int min_count = 5;
};

void add_label_common(CLI::App* cmd, LabelCommon& opts) {
  cmd->add_option("--input", opts.input, "Corpus file, one document per line")->required();
  cmd->add_option("--output", opts.output, "Output artifact prefix")->required();
  cmd->add_option("--stopwords", opts.stopword_file, "Stopword file, one token per line")
      ->capture_default_str();
  cmd->add_option("--min-count", opts.min_count, "Drop words occurring fewer times")
      ->capture_default_str();
}

int run_cli(int argc, char** argv) {
  CLI::App app{"ise: identity-sensitive word embeddings over heterogeneous networks"};
  app.require_subcommand(1);

  // ---- label-topics ----
  auto* topics_cmd = app.add_subcommand(
      "label-topics", "Assign topic identities with collapsed Gibbs LDA");
  LabelCommon topics_common;
  add_label_common(topics_cmd, topics_common);
  bool topics_labeled = false;
  int num_topics = 0;
  double alpha = -1.0, beta = 0.01;
  int iters = 200;
  std::uint64_t topics_seed = 1;
  topics_cmd->add_flag("--labeled", topics_labeled, "Input lines are label<TAB>text");
  topics_cmd->add_option("--topics", num_topics, "Number of topics K")->required();
  topics_cmd->add_option("--alpha", alpha, "Document-topic prior (negative = 50/K)")
      ->capture_default_str();
  topics_cmd->add_option("--beta", beta, "Topic-word prior")->capture_default_str();
  topics_cmd->add_option("--iters", iters, "Gibbs sweeps")->capture_default_str();
  topics_cmd->add_option("--seed", topics_seed, "Random seed")->capture_default_str();
  topics_cmd->callback([&] {
    auto loaded = ise::load_corpus(topics_common.input, topics_labeled,
                                   maybe_stopwords(topics_common.stopword_file),
                                   topics_common.min_count);
    auto labeled = ise::label_topics(loaded.corpus, loaded.vocab.size(), num_topics, alpha, beta,
                                     iters, ise::split_seed(topics_seed, "label-topics"));
    write_corpus_artifacts(topics_common.output, labeled, loaded.vocab);
    std::cout << "docs=" << labeled.docs.size() << " vocab=" << loaded.vocab.size()
              << " identities=" << labeled.num_identities << "\n";
  });

  // ---- label-sentiment ----
  auto* senti_cmd = app.add_subcommand(
      "label-sentiment", "Assign sentiment identities via ratio feature selection");
  LabelCommon senti_common;
  add_label_common(senti_cmd, senti_common);
  double threshold = 10.0;
  senti_cmd->add_option("--threshold", threshold, "Selection ratio cutoff")
      ->capture_default_str();
  senti_cmd->callback([&] {
    auto loaded = ise::load_corpus(senti_common.input, /*labeled=*/true,
                                   maybe_stopwords(senti_common.stopword_file),
                                   senti_common.min_count);
    auto lexicon = ise::select_sentiment_words(loaded.corpus, loaded.vocab.size(), threshold);
    auto labeled = ise::label_sentiment(loaded.corpus, lexicon);
    write_corpus_artifacts(senti_common.output, labeled, loaded.vocab);
    std::cout << "docs=" << labeled.docs.size() << " vocab=" << loaded.vocab.size()
              << " selected_words=" << lexicon.selected.size() << "\n";
  });

  // ---- label-category ----
  auto* cat_cmd =
      app.add_subcommand("label-category", "Assign each token its document's class id");
  LabelCommon cat_common;
  add_label_common(cat_cmd, cat_common);
  cat_cmd->callback([&] {
    auto loaded = ise::load_corpus(cat_common.input, /*labeled=*/true,
                                   maybe_stopwords(cat_common.stopword_file),
                                   cat_common.min_count);
    auto labeled = ise::label_category(loaded.corpus);
    write_corpus_artifacts(cat_common.output, labeled, loaded.vocab);
    std::cout << "docs=" << labeled.docs.size() << " vocab=" << loaded.vocab.size()
              << " identities=" << labeled.num_identities << "\n";
  });

  // ---- build-net ----
  auto* net_cmd = app.add_subcommand(
      "build-net", "Build the word-context and word-identity networks");
  std::string net_corpus, net_output;
  int window = 5;
  net_cmd->add_option("--corpus", net_corpus, "Labeled corpus artifact prefix")->required();
  net_cmd->add_option("--output", net_output, "Network file prefix")->required();
  net_cmd->add_option("--window", window, "Context half-window size")->capture_default_str();
  net_cmd->callback([&] {
    auto art = read_corpus_artifacts(net_corpus);
    auto registry = ise::SenseRegistry::build(art.corpus, art.vocab.size());
    auto wc = ise::build_word_context_network(art.corpus, registry, window);
    auto wi = ise::build_word_identity_network(art.corpus, registry);
    ise::save_network(wc, registry, art.vocab, net_output + ".wc.tsv");
    ise::save_network(wi, registry, art.vocab, net_output + ".wi.tsv");
    std::cout << "senses=" << registry.size() << " wc_edges=" << wc.edges.size()
              << " wi_edges=" << wi.edges.size() << "\n";
  });

  // ---- train ----
  auto* train_cmd = app.add_subcommand(
      "train", "Train embeddings by alternating edge sampling over the two networks");
  std::string train_corpus, train_net, train_output;
  ise::TrainerConfig config;
  train_cmd->add_option("--corpus", train_corpus, "Labeled corpus artifact prefix")->required();
  train_cmd->add_option("--net", train_net, "Network file prefix from build-net")->required();
  train_cmd->add_option("--output", train_output, "Model output directory")->required();
  train_cmd->add_option("--dim", config.dim, "Embedding dimension")->capture_default_str();
  train_cmd->add_option("--negatives", config.negatives, "Negative samples per edge")
      ->capture_default_str();
  train_cmd
      ->add_option("--samples", config.samples,
                   "Training iterations T; each iteration draws one edge from each "
                   "network, so the total edge-sample count is 2T")
      ->capture_default_str();
  train_cmd->add_option("--rho0", config.rho0, "Initial learning rate")->capture_default_str();
  train_cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  train_cmd->add_option("--workers", config.workers, "Trainer threads")->capture_default_str();
  train_cmd->callback([&] {
    auto art = read_corpus_artifacts(train_corpus);
    auto registry = ise::SenseRegistry::build(art.corpus, art.vocab.size());
    auto wc = ise::load_network(train_net + ".wc.tsv", registry, art.vocab, "word");
    auto wi = ise::load_network(train_net + ".wi.tsv", registry, art.vocab, "identity");
    ise::TrainStats stats;
    auto model = ise::train(wc, wi, registry, art.vocab.tokens(), config, &stats);
    ise::save_model(model, train_output);
    std::cout << "senses=" << model.num_senses() << " dim=" << model.dim()
              << " wc_updates=" << stats.wc_updates.load()
              << " wi_updates=" << stats.wi_updates.load() << "\n";
  });

  // ---- infer-identity ----
  auto* infer_cmd = app.add_subcommand(
      "infer-identity", "Label tokens of unseen documents using the trained model");
  std::string infer_model, infer_input, infer_output, infer_stopwords;
  bool infer_labeled = false;
  infer_cmd->add_option("--model", infer_model, "Model directory")->required();
  infer_cmd->add_option("--input", infer_input, "Raw corpus file")->required();
  infer_cmd->add_option("--output", infer_output, "Labeled corpus output file")->required();
  infer_cmd->add_flag("--labeled", infer_labeled, "Input lines are label<TAB>text");
  infer_cmd->add_option("--stopwords", infer_stopwords, "Stopword file, one token per line")
      ->capture_default_str();
  infer_cmd->callback([&] {
    auto model = ise::load_model(infer_model);
    auto stop = maybe_stopwords(infer_stopwords);
    std::ifstream in(infer_input);
    if (!in) throw ise::IoError("cannot open corpus file: " + infer_input);
    std::ofstream out(infer_output);
    if (!out) throw ise::IoError("cannot write labeled corpus: " + infer_output);

    std::int64_t dropped = 0;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
      line_no++;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::string text = line;
      if (infer_labeled) {
        auto tab = line.find('\t');
        if (tab == std::string::npos)
          throw ise::FormatError(infer_input, line_no, "labeled line has no TAB separator");
        out << line.substr(0, tab) << '\t';
        text = line.substr(tab + 1);
      }
      auto doc = infer_document(model, ise::tokenize(text, stop), dropped);
      for (size_t i = 0; i < doc.words.size(); ++i) {
        if (i) out << ' ';
        out << model.tokens()[static_cast<size_t>(doc.words[i])] << '#' << doc.identities[i];
      }
      out << '\n';
    }
    std::cout << "dropped_tokens=" << dropped << "\n";
  });

  // ---- nearest ----
  auto* nn_cmd = app.add_subcommand("nearest", "Nearest sense neighbors by cosine");
  std::string nn_model, nn_query;
  int nn_k = 10;
  bool nn_exclude_same = false;
  nn_cmd->add_option("--model", nn_model, "Model directory")->required();
  nn_cmd->add_option("--query", nn_query, "Query: word or word#identityId")->required();
  nn_cmd->add_option("--k", nn_k, "Number of neighbors")->capture_default_str();
  nn_cmd->add_flag("--exclude-same-word", nn_exclude_same,
                   "Exclude other senses of the query word");
  nn_cmd->callback([&] {
    auto model = ise::load_model(nn_model);
    std::vector<int> query_rows;
    auto hash = nn_query.rfind('#');
    if (hash != std::string::npos && hash + 1 < nn_query.size()) {
      int word = model.word_id(nn_query.substr(0, hash));
      if (word < 0) throw std::out_of_range("nearest: unknown word: " + nn_query);
      int row = model.registry().row_of(word, std::stoi(nn_query.substr(hash + 1)));
      if (row < 0) throw std::out_of_range("nearest: unknown sense: " + nn_query);
      query_rows.push_back(row);
    } else {
      int word = model.word_id(nn_query);
      if (word < 0) throw std::out_of_range("nearest: unknown word: " + nn_query);
      for (const auto& s : model.registry().senses_of(word)) query_rows.push_back(s.row);
      if (query_rows.empty()) throw std::out_of_range("nearest: word has no senses: " + nn_query);
    }
    for (int row : query_rows) {
      const auto& q = model.registry().sense(row);
      for (const auto& nb : ise::nearest_neighbors(model, row, nn_k, nn_exclude_same)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", nb.similarity);
        std::cout << model.tokens()[static_cast<size_t>(q.word)] << '#' << q.identity << '\t'
                  << model.tokens()[static_cast<size_t>(nb.sense.word)] << '#'
                  << nb.sense.identity << '\t' << buf << "\n";
      }
    }
  });

  // ---- eval-classify ----
  auto* cls_cmd = app.add_subcommand(
      "eval-classify", "Text classification with averaged sense embeddings");
  std::string cls_model, cls_train, cls_test, cls_stopwords;
  double l2 = 1.0;
  cls_cmd->add_option("--model", cls_model, "Model directory")->required();
  cls_cmd->add_option("--train", cls_train, "Training corpus artifact prefix (labeled)")
      ->required();
  cls_cmd->add_option("--test", cls_test, "Test corpus file (label<TAB>text lines)")->required();
  cls_cmd->add_option("--l2", l2, "L2 regularization")->capture_default_str();
  cls_cmd->add_option("--stopwords", cls_stopwords, "Stopword file for test tokenization")
      ->capture_default_str();
  cls_cmd->callback([&] {
    auto model = ise::load_model(cls_model);
    auto art = read_corpus_artifacts(cls_train);
    if (art.corpus.label_names.empty())
      throw std::invalid_argument("eval-classify: training corpus has no labels");

    std::vector<std::vector<double>> train_x;
    std::vector<int> train_y;
    for (const auto& doc : art.corpus.docs) {
      if (!doc.has_label())
        throw std::invalid_argument("eval-classify: unlabeled training document");
      train_x.push_back(ise::document_embedding(model, doc));
      train_y.push_back(doc.label);
    }

    std::unordered_map<std::string, int> label_index;
    for (size_t i = 0; i < art.corpus.label_names.size(); ++i)
      label_index.emplace(art.corpus.label_names[i], i);

    auto stop = maybe_stopwords(cls_stopwords);
    std::ifstream in(cls_test);
    if (!in) throw ise::IoError("cannot open test corpus: " + cls_test);
    std::vector<std::vector<double>> test_x;
    std::vector<int> test_y;
    std::int64_t dropped = 0;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
      line_no++;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw ise::FormatError(cls_test, line_no, "labeled line has no TAB separator");
      auto it = label_index.find(line.substr(0, tab));
      if (it == label_index.end())
        throw ise::FormatError(cls_test, line_no, "label not present in training corpus");
      auto doc = infer_document(model, ise::tokenize(line.substr(tab + 1), stop), dropped);
      test_x.push_back(ise::document_embedding(model, doc));
      test_y.push_back(it->second);
    }
    if (test_x.empty()) throw std::invalid_argument("eval-classify: empty test corpus");

    auto clf = ise::LogisticClassifier::train(train_x, train_y, l2);
    auto report = ise::classification_report(clf.predict(test_x), test_y);
    std::cout << ise::render_report(report, art.corpus.label_names);
    std::cout << "dropped_tokens=" << dropped << "\n";
  });

  // ---- eval-similarity ----
  auto* sim_cmd = app.add_subcommand(
      "eval-similarity", "Contextual word similarity against human scores");
  std::string sim_model, sim_pairs;
  sim_cmd->add_option("--model", sim_model, "Model directory")->required();
  sim_cmd->add_option("--pairs", sim_pairs, "Similarity dataset (TSV with <b> markers)")
      ->required();
  sim_cmd->callback([&] {
    auto model = ise::load_model(sim_model);
    auto pairs = ise::load_similarity_pairs(sim_pairs);
    std::vector<double> predicted, human;
    std::int64_t skipped = 0;
    for (const auto& pair : pairs) {
      auto sim = ise::contextual_similarity(model, pair);
      if (!sim) {
        skipped++;
        continue;
      }
      predicted.push_back(*sim);
      human.push_back(pair.human_score);
    }
    if (predicted.size() < 2)
      throw std::invalid_argument("eval-similarity: fewer than two usable pairs");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", ise::spearman(predicted, human));
    std::cout << "spearman=" << buf << "\npairs_used=" << predicted.size()
              << "\npairs_skipped=" << skipped << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ise::IoError& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return 3;
  } catch (const ise::FormatError& e) {
    std::cerr << "error: format: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-param: " << e.what() << "\n";
    return 5;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: invalid-param: " << e.what() << "\n";
    return 5;
  } catch (const std::domain_error& e) {
    std::cerr << "error: invalid-param: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
}
