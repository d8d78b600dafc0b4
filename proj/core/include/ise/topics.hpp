#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ise/corpus.hpp"
#include "ise/rng.hpp"

namespace ise {

// Collapsed Gibbs sampler for LDA, used to assign topic identities to tokens.
// Count matrices satisfy, at every point between sweeps:
//   sum_k n_wk[w][k] == t(w)   and   sum_w n_wk[w][k] == n_k[k].
class TopicModel {
 public:
  TopicModel(const LabeledCorpus& corpus, int vocab_size, int num_topics,
             double alpha, double beta, std::uint64_t seed);

  void run(int sweeps);
  void sweep();

  // Full conditional over topics for the token at (doc, position), with that
  // token's own counts excluded. Normalized to sum 1.
  std::vector<double> conditional(int doc, int position) const;

  // Fold-in inference for an unseen document: word-topic counts stay frozen,
  // only the local document-topic counts are resampled. Returns smoothed
  // topic proportions (n_dk + alpha) / (len + K*alpha).
  std::vector<double> infer_proportions(std::span<const int> words, int sweeps,
                                        std::uint64_t seed) const;

  // Smoothed document-topic proportions for a training document.
  std::vector<double> document_proportions(int doc) const;

  int num_topics() const { return num_topics_; }
  int num_docs() const { return static_cast<int>(docs_.size()); }
  const std::vector<std::vector<int>>& assignments() const { return assignments_; }
  int word_topic_count(int word, int topic) const {
    return n_wk_[static_cast<size_t>(word) * num_topics_ + topic];
  }
  int doc_topic_count(int doc, int topic) const {
    return n_dk_[static_cast<size_t>(doc) * num_topics_ + topic];
  }
  std::int64_t topic_count(int topic) const { return n_k_[static_cast<size_t>(topic)]; }

 private:
  // Unnormalized conditional weights, excluding the token's current
  // assignment. Single formula path shared by sweep() and conditional().
  void weights_excluding(int doc, int position, std::span<double> out) const;

  std::vector<std::vector<int>> docs_;
  std::vector<std::vector<int>> assignments_;
  std::vector<int> n_wk_;          // [V x K]
  std::vector<int> n_dk_;          // [D x K]
  std::vector<std::int64_t> n_k_;  // [K]
  int vocab_size_;
  int num_topics_;
  double alpha_;
  double beta_;
  Rng rng_;
};

// Runs the Gibbs sampler and stamps the final-sweep hard assignments onto the
// corpus as topic identities. alpha < 0 selects the 50/K default.
LabeledCorpus label_topics(const LabeledCorpus& corpus, int vocab_size, int num_topics,
                           double alpha, double beta, int sweeps, std::uint64_t seed);

}  // namespace ise
