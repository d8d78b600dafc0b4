#pragma once

#include <span>
#include <vector>

#include "ise/rng.hpp"

namespace ise {

// Walker/Vose alias table: O(n) construction, O(1) draws from an arbitrary
// discrete distribution given by non-negative weights.
class AliasTable {
 public:
  // Throws std::invalid_argument on an empty vector, a negative weight, or
  // all-zero weights.
  explicit AliasTable(std::span<const double> weights);

  int sample(Rng& rng) const {
    size_t slot = static_cast<size_t>(rng.uniform() * static_cast<double>(prob_.size()));
    if (slot >= prob_.size()) slot = prob_.size() - 1;
    return rng.uniform() < prob_[slot] ? static_cast<int>(slot) : alias_[slot];
  }

  size_t size() const { return prob_.size(); }

  // Exposed so tests can reconstruct the exact outcome distribution.
  const std::vector<double>& prob() const { return prob_; }
  const std::vector<int>& alias() const { return alias_; }

 private:
  std::vector<double> prob_;
  std::vector<int> alias_;
};

// Alias table over sense rows with unnormalized mass freq^0.75 (the negative
// sampling noise distribution).
AliasTable build_noise_table(std::span<const std::int64_t> sense_frequencies);

}  // namespace ise
