#include "ise/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ise/errors.hpp"
#include "ise/identity.hpp"

namespace ise {

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosine: dimension mismatch");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (size_t j = 0; j < u.size(); ++j) {
    dot += u[j] * v[j];
    nu += u[j] * u[j];
    nv += v[j] * v[j];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

std::vector<double> document_embedding(const EmbeddingModel& model, const Document& doc) {
  std::vector<double> mean(static_cast<size_t>(model.dim()), 0.0);
  if (!doc.labeled_identities() && !doc.words.empty())
    throw std::invalid_argument("document_embedding: document has no identities");
  int count = 0;
  for (size_t i = 0; i < doc.words.size(); ++i) {
    int row = model.registry().row_of(doc.words[i], doc.identities[i]);
    if (row < 0) continue;
    auto vec = model.sense(row);
    for (int j = 0; j < model.dim(); ++j) mean[static_cast<size_t>(j)] += vec[static_cast<size_t>(j)];
    count++;
  }
  if (count > 0) {
    for (auto& v : mean) v /= count;
  }
  return mean;
}

std::vector<Neighbor> nearest_neighbors(const EmbeddingModel& model, int query_row, int k,
                                        bool exclude_same_word) {
  if (query_row < 0 || query_row >= model.num_senses())
    throw std::out_of_range("nearest_neighbors: unknown query row");
  if (k < 0) throw std::invalid_argument("nearest_neighbors: k must be >= 0");

  const int query_word = model.registry().sense(query_row).word;
  auto query_vec = model.sense(query_row);

  std::vector<Neighbor> all;
  all.reserve(static_cast<size_t>(model.num_senses()));
  for (int r = 0; r < model.num_senses(); ++r) {
    if (r == query_row) continue;
    const SenseId& s = model.registry().sense(r);
    if (exclude_same_word && s.word == query_word) continue;
    all.push_back({s, cosine(query_vec, model.sense(r))});
  }

  auto better = [](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.sense.row < b.sense.row;
  };
  size_t keep = std::min(static_cast<size_t>(k), all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                    better);
  all.resize(keep);
  return all;
}

namespace {

// Splits "... <b>word</b> ..." into clean tokens and the marked token index.
std::pair<std::vector<std::string>, size_t> parse_marked_context(const std::string& raw,
                                                                 const std::string& path,
                                                                 long line_no) {
  auto open = raw.find("<b>");
  auto close = raw.find("</b>");
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw FormatError(path, line_no, "context lacks <b>...</b> target marker");

  size_t target = tokenize(raw.substr(0, open)).size();
  std::string clean = raw;
  auto strip = [&clean](const std::string& marker) {
    for (auto at = clean.find(marker); at != std::string::npos; at = clean.find(marker))
      clean.replace(at, marker.size(), " ");
  };
  strip("<b>");
  strip("</b>");
  auto tokens = tokenize(clean);
  if (target >= tokens.size())
    throw FormatError(path, line_no, "target marker points past the last token");
  return {std::move(tokens), target};
}

}  // namespace

std::vector<SimilarityPair> load_similarity_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open similarity dataset: " + path);

  std::vector<SimilarityPair> pairs;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string w1, c1, w2, c2, score;
    if (!std::getline(ss, w1, '\t') || !std::getline(ss, c1, '\t') ||
        !std::getline(ss, w2, '\t') || !std::getline(ss, c2, '\t') || !std::getline(ss, score))
      throw FormatError(path, line_no, "expected word1<TAB>ctx1<TAB>word2<TAB>ctx2<TAB>score");

    SimilarityPair pair;
    auto w1_toks = tokenize(w1);
    auto w2_toks = tokenize(w2);
    if (w1_toks.size() != 1 || w2_toks.size() != 1)
      throw FormatError(path, line_no, "word column is not a single token");
    pair.word1 = w1_toks[0];
    pair.word2 = w2_toks[0];
    std::tie(pair.context1, pair.target1) = parse_marked_context(c1, path, line_no);
    std::tie(pair.context2, pair.target2) = parse_marked_context(c2, path, line_no);
    if (pair.context1[pair.target1] != pair.word1 || pair.context2[pair.target2] != pair.word2)
      throw FormatError(path, line_no, "marked token does not match the pair word");
    try {
      pair.human_score = std::stod(score);
    } catch (const std::exception&) {
      throw FormatError(path, line_no, "bad score: " + score);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

namespace {

// Maps a marked context onto model word ids, tracking where the target lands
// after out-of-vocabulary tokens are dropped.
std::pair<std::vector<int>, int> context_word_ids(const EmbeddingModel& model,
                                                  const std::vector<std::string>& tokens,
                                                  size_t target) {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  int target_pos = -1;
  for (size_t i = 0; i < tokens.size(); ++i) {
    int id = model.word_id(tokens[i]);
    if (id < 0) continue;
    if (i == target) target_pos = static_cast<int>(ids.size());
    ids.push_back(id);
  }
  return {std::move(ids), target_pos};
}

}  // namespace

std::optional<double> contextual_similarity(const EmbeddingModel& model,
                                            const SimilarityPair& pair) {
  auto [ids1, pos1] = context_word_ids(model, pair.context1, pair.target1);
  auto [ids2, pos2] = context_word_ids(model, pair.context2, pair.target2);
  if (pos1 < 0 || pos2 < 0) return std::nullopt;

  int row1 = model.registry().row_of(ids1[static_cast<size_t>(pos1)],
                                     infer_identity(model, ids1, static_cast<size_t>(pos1)));
  int row2 = model.registry().row_of(ids2[static_cast<size_t>(pos2)],
                                     infer_identity(model, ids2, static_cast<size_t>(pos2)));
  return cosine(model.sense(row1), model.sense(row2));
}

namespace {

// Average ranks with ties resolved to the mean rank of the tied run.
std::vector<double> average_ranks(std::span<const double> xs) {
  const size_t n = xs.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return xs[a] < xs[b]; });

  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) j++;
    double mean_rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("spearman: need at least two points");

  auto rx = average_ranks(xs);
  auto ry = average_ranks(ys);
  const double n = static_cast<double>(xs.size());
  double mean = (n + 1.0) / 2.0;

  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double dx = rx[i] - mean;
    double dy = ry[i] - mean;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0)
    throw std::domain_error("spearman: undefined for a constant sequence");
  return cov / std::sqrt(var_x * var_y);
}

}  // namespace ise
