#include "ise/network.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ise/errors.hpp"

namespace ise {

double BipartiteNetwork::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

namespace {

BipartiteNetwork finalize(std::map<std::pair<int, int>, double>&& counts, size_t num_sources,
                          size_t num_targets, std::string source_kind, std::string target_kind) {
  BipartiteNetwork net;
  net.source_kind = std::move(source_kind);
  net.target_kind = std::move(target_kind);
  net.source_degrees.assign(num_sources, 0.0);
  net.target_degrees.assign(num_targets, 0.0);
  net.edges.reserve(counts.size());
  for (const auto& [pair, weight] : counts) {
    net.edges.push_back({pair.first, pair.second, weight});
    net.source_degrees[static_cast<size_t>(pair.first)] += weight;
    net.target_degrees[static_cast<size_t>(pair.second)] += weight;
  }
  return net;
}

}  // namespace

BipartiteNetwork build_word_context_network(const LabeledCorpus& corpus,
                                            const SenseRegistry& registry, int window) {
  if (!corpus.fully_labeled())
    throw std::invalid_argument("build_word_context_network: corpus is not identity-labeled");
  if (window < 1) throw std::invalid_argument("build_word_context_network: window must be >= 1");

  std::map<std::pair<int, int>, double> counts;
  for (const auto& doc : corpus.docs) {
    const int n = static_cast<int>(doc.words.size());
    for (int p = 0; p < n; ++p) {
      int row = registry.row_of(doc.words[static_cast<size_t>(p)],
                                doc.identities[static_cast<size_t>(p)]);
      if (row < 0)
        throw std::invalid_argument("build_word_context_network: sense missing from registry");
      int lo = std::max(0, p - window);
      int hi = std::min(n - 1, p + window);
      for (int q = lo; q <= hi; ++q) {
        if (q == p) continue;
        counts[{row, doc.words[static_cast<size_t>(q)]}] += 1.0;
      }
    }
  }
  return finalize(std::move(counts), static_cast<size_t>(registry.size()),
                  static_cast<size_t>(registry.num_words()), "sense", "word");
}

BipartiteNetwork build_word_identity_network(const LabeledCorpus& corpus,
                                             const SenseRegistry& registry) {
  if (!corpus.fully_labeled())
    throw std::invalid_argument("build_word_identity_network: corpus is not identity-labeled");

  std::map<std::pair<int, int>, double> counts;
  for (const auto& doc : corpus.docs) {
    for (size_t i = 0; i < doc.words.size(); ++i) {
      int row = registry.row_of(doc.words[i], doc.identities[i]);
      if (row < 0)
        throw std::invalid_argument("build_word_identity_network: sense missing from registry");
      counts[{row, doc.identities[i]}] += 1.0;
    }
  }
  return finalize(std::move(counts), static_cast<size_t>(registry.size()),
                  static_cast<size_t>(corpus.num_identities), "sense", "identity");
}

namespace {

std::string format_weight(double w) {
  // Counts stay integers; anything else keeps full precision.
  if (w == std::floor(w) && std::abs(w) < 1e15) {
    return std::to_string(static_cast<long long>(w));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace

void save_network(const BipartiteNetwork& net, const SenseRegistry& registry,
                  const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write network: " + path);
  for (const auto& e : net.edges) {
    const SenseId& s = registry.sense(e.source);
    out << vocab.token(s.word) << '#' << s.identity << '\t';
    if (net.target_kind == "identity") {
      out << e.target;
    } else {
      out << vocab.token(e.target);
    }
    out << '\t' << format_weight(e.weight) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

BipartiteNetwork load_network(const std::string& path, const SenseRegistry& registry,
                              const Vocabulary& vocab, const std::string& target_kind) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open network: " + path);

  size_t num_targets = target_kind == "identity" ? static_cast<size_t>(registry.num_identities())
                                                 : static_cast<size_t>(vocab.size());
  BipartiteNetwork net;
  net.source_kind = "sense";
  net.target_kind = target_kind;
  net.source_degrees.assign(static_cast<size_t>(registry.size()), 0.0);
  net.target_degrees.assign(num_targets, 0.0);

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string source, target, weight_str;
    if (!std::getline(ss, source, '\t') || !std::getline(ss, target, '\t') ||
        !std::getline(ss, weight_str))
      throw FormatError(path, line_no, "expected source<TAB>target<TAB>weight");

    auto hash = source.rfind('#');
    if (hash == std::string::npos)
      throw FormatError(path, line_no, "sense node without #identity: " + source);
    int word = vocab.lookup(source.substr(0, hash));
    if (word < 0) throw FormatError(path, line_no, "unknown word: " + source);
    int identity = std::stoi(source.substr(hash + 1));
    int row = registry.row_of(word, identity);
    if (row < 0) throw FormatError(path, line_no, "sense not in registry: " + source);

    int target_id;
    if (target_kind == "identity") {
      target_id = std::stoi(target);
      if (target_id < 0 || target_id >= static_cast<int>(num_targets))
        throw FormatError(path, line_no, "identity out of range: " + target);
    } else {
      target_id = vocab.lookup(target);
      if (target_id < 0) throw FormatError(path, line_no, "unknown context word: " + target);
    }

    double weight = std::stod(weight_str);
    if (!(weight > 0)) throw FormatError(path, line_no, "non-positive weight");
    net.edges.push_back({row, target_id, weight});
    net.source_degrees[static_cast<size_t>(row)] += weight;
    net.target_degrees[static_cast<size_t>(target_id)] += weight;
  }
  return net;
}

}  // namespace ise
