#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ise/corpus.hpp"
#include "ise/model.hpp"

namespace ise {

// dot(u,v) / (|u||v|); 0 if either norm is 0. Throws on dimension mismatch.
double cosine(std::span<const double> u, std::span<const double> v);

// Mean of the sense vectors of the in-vocabulary (word, identity) tokens;
// zero vector if none resolve to a sense row.
std::vector<double> document_embedding(const EmbeddingModel& model, const Document& doc);

struct Neighbor {
  SenseId sense;
  double similarity;
};

// Top-k sense rows by cosine against the query row. The query row is always
// excluded; other senses of the same word only when exclude_same_word is set.
// Descending similarity, ties by row id.
std::vector<Neighbor> nearest_neighbors(const EmbeddingModel& model, int query_row, int k,
                                        bool exclude_same_word = false);

struct SimilarityPair {
  std::string word1, word2;
  std::vector<std::string> context1, context2;
  size_t target1 = 0, target2 = 0;  // marked positions inside the contexts
  double human_score = 0.0;
};

// TSV "word1<TAB>context1<TAB>word2<TAB>context2<TAB>score" with the target
// occurrence wrapped as "<b>word</b>" inside each context.
std::vector<SimilarityPair> load_similarity_pairs(const std::string& path);

// Infers each word's identity from its own context, then returns the cosine
// of the two selected sense vectors. nullopt when either word is out of
// vocabulary (the pair is skipped by callers).
std::optional<double> contextual_similarity(const EmbeddingModel& model,
                                            const SimilarityPair& pair);

// Pearson correlation of average ranks (ties get the mean rank). Throws on
// length mismatch, fewer than two points, or a constant sequence.
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace ise
