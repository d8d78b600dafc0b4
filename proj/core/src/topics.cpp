#include "ise/topics.hpp"

#include <numeric>
#include <stdexcept>

namespace ise {

TopicModel::TopicModel(const LabeledCorpus& corpus, int vocab_size, int num_topics,
                       double alpha, double beta, std::uint64_t seed)
    : vocab_size_(vocab_size),
      num_topics_(num_topics),
      alpha_(alpha),
      beta_(beta),
      rng_(seed) {
  if (num_topics < 1) throw std::invalid_argument("TopicModel: K must be >= 1");
  if (corpus.total_tokens() == 0) throw std::invalid_argument("TopicModel: empty corpus");

  docs_.reserve(corpus.docs.size());
  for (const auto& d : corpus.docs) docs_.push_back(d.words);

  n_wk_.assign(static_cast<size_t>(vocab_size_) * num_topics_, 0);
  n_dk_.assign(docs_.size() * static_cast<size_t>(num_topics_), 0);
  n_k_.assign(static_cast<size_t>(num_topics_), 0);

  assignments_.resize(docs_.size());
  for (size_t d = 0; d < docs_.size(); ++d) {
    assignments_[d].resize(docs_[d].size());
    for (size_t i = 0; i < docs_[d].size(); ++i) {
      int z = static_cast<int>(rng_.uniform_int(static_cast<std::uint64_t>(num_topics_)));
      assignments_[d][i] = z;
      n_wk_[static_cast<size_t>(docs_[d][i]) * num_topics_ + z]++;
      n_dk_[d * static_cast<size_t>(num_topics_) + z]++;
      n_k_[static_cast<size_t>(z)]++;
    }
  }
}

void TopicModel::weights_excluding(int doc, int position, std::span<double> out) const {
  const size_t d = static_cast<size_t>(doc);
  const int w = docs_[d][static_cast<size_t>(position)];
  const int z = assignments_[d][static_cast<size_t>(position)];
  const double v_beta = vocab_size_ * beta_;
  const int* wk = &n_wk_[static_cast<size_t>(w) * num_topics_];
  const int* dk = &n_dk_[d * static_cast<size_t>(num_topics_)];
  for (int k = 0; k < num_topics_; ++k) {
    const int self = (k == z) ? 1 : 0;
    out[static_cast<size_t>(k)] = (wk[k] - self + beta_) /
                                  (static_cast<double>(n_k_[static_cast<size_t>(k)]) - self + v_beta) *
                                  (dk[k] - self + alpha_);
  }
}

std::vector<double> TopicModel::conditional(int doc, int position) const {
  std::vector<double> probs(static_cast<size_t>(num_topics_));
  weights_excluding(doc, position, probs);
  double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (auto& p : probs) p /= total;
  return probs;
}

void TopicModel::sweep() {
  std::vector<double> weights(static_cast<size_t>(num_topics_));
  for (size_t d = 0; d < docs_.size(); ++d) {
    for (size_t i = 0; i < docs_[d].size(); ++i) {
      weights_excluding(static_cast<int>(d), static_cast<int>(i), weights);
      double total = std::accumulate(weights.begin(), weights.end(), 0.0);
      double u = rng_.uniform() * total;
      int z_new = num_topics_ - 1;
      double acc = 0.0;
      for (int k = 0; k < num_topics_; ++k) {
        acc += weights[static_cast<size_t>(k)];
        if (u < acc) {
          z_new = k;
          break;
        }
      }
      const int w = docs_[d][i];
      const int z_old = assignments_[d][i];
      if (z_new != z_old) {
        n_wk_[static_cast<size_t>(w) * num_topics_ + z_old]--;
        n_dk_[d * static_cast<size_t>(num_topics_) + z_old]--;
        n_k_[static_cast<size_t>(z_old)]--;
        n_wk_[static_cast<size_t>(w) * num_topics_ + z_new]++;
        n_dk_[d * static_cast<size_t>(num_topics_) + z_new]++;
        n_k_[static_cast<size_t>(z_new)]++;
        assignments_[d][i] = z_new;
      }
    }
  }
}

void TopicModel::run(int sweeps) {
  for (int s = 0; s < sweeps; ++s) sweep();
}

std::vector<double> TopicModel::document_proportions(int doc) const {
  const size_t d = static_cast<size_t>(doc);
  std::vector<double> theta(static_cast<size_t>(num_topics_));
  double len = static_cast<double>(docs_[d].size());
  for (int k = 0; k < num_topics_; ++k)
    theta[static_cast<size_t>(k)] =
        (n_dk_[d * static_cast<size_t>(num_topics_) + k] + alpha_) / (len + num_topics_ * alpha_);
  return theta;
}

std::vector<double> TopicModel::infer_proportions(std::span<const int> words, int sweeps,
                                                  std::uint64_t seed) const {
  std::vector<double> theta(static_cast<size_t>(num_topics_), 0.0);
  const double v_beta = vocab_size_ * beta_;
  std::vector<int> local_dk(static_cast<size_t>(num_topics_), 0);
  std::vector<int> z(words.size());
  Rng rng(seed);
  for (size_t i = 0; i < words.size(); ++i) {
    z[i] = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(num_topics_)));
    local_dk[static_cast<size_t>(z[i])]++;
  }
  std::vector<double> weights(static_cast<size_t>(num_topics_));
  for (int s = 0; s < sweeps; ++s) {
    for (size_t i = 0; i < words.size(); ++i) {
      const int w = words[i];
      local_dk[static_cast<size_t>(z[i])]--;
      const int* wk = &n_wk_[static_cast<size_t>(w) * num_topics_];
      double total = 0.0;
      for (int k = 0; k < num_topics_; ++k) {
        weights[static_cast<size_t>(k)] =
            (wk[k] + beta_) / (static_cast<double>(n_k_[static_cast<size_t>(k)]) + v_beta) *
            (local_dk[static_cast<size_t>(k)] + alpha_);
        total += weights[static_cast<size_t>(k)];
      }
      double u = rng.uniform() * total;
      int z_new = num_topics_ - 1;
      double acc = 0.0;
      for (int k = 0; k < num_topics_; ++k) {
        acc += weights[static_cast<size_t>(k)];
        if (u < acc) {
          z_new = k;
          break;
        }
      }
      z[i] = z_new;
      local_dk[static_cast<size_t>(z_new)]++;
    }
  }
  double len = static_cast<double>(words.size());
  for (int k = 0; k < num_topics_; ++k)
    theta[static_cast<size_t>(k)] =
        (local_dk[static_cast<size_t>(k)] + alpha_) / (len + num_topics_ * alpha_);
  return theta;
}

LabeledCorpus label_topics(const LabeledCorpus& corpus, int vocab_size, int num_topics,
                           double alpha, double beta, int sweeps, std::uint64_t seed) {
  if (num_topics < 1) throw std::invalid_argument("label_topics: K must be >= 1");
  if (sweeps < 1) throw std::invalid_argument("label_topics: iters must be >= 1");
  if (alpha < 0) alpha = 50.0 / num_topics;

  TopicModel model(corpus, vocab_size, num_topics, alpha, beta, seed);
  if (num_topics > 1) model.run(sweeps);  // K=1 forces every assignment to 0

  LabeledCorpus labeled = corpus;
  labeled.identity_kind = IdentityKind::topic;
  labeled.num_identities = num_topics;
  for (size_t d = 0; d < labeled.docs.size(); ++d)
    labeled.docs[d].identities = model.assignments()[d];
  return labeled;
}

}  // namespace ise
