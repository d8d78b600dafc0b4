#include "ise/alias.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ise {

AliasTable::AliasTable(std::span<const double> weights) {
  const size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("AliasTable: empty weight vector");

  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0 || !std::isfinite(w))
      throw std::invalid_argument("AliasTable: weights must be finite and non-negative");
    sum += w;
  }
  if (sum <= 0.0) throw std::invalid_argument("AliasTable: all weights are zero");

  prob_.resize(n);
  alias_.assign(n, 0);
  std::vector<double> scaled(n);
  std::vector<int> small, large;
  small.reserve(n);
  large.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / sum;
    if (scaled[i] < 1.0) {
      small.push_back(static_cast<int>(i));
    } else {
      large.push_back(static_cast<int>(i));
    }
  }

  while (!small.empty() && !large.empty()) {
    int s = small.back();
    int l = large.back();
    small.pop_back();
    large.pop_back();
    prob_[static_cast<size_t>(s)] = scaled[static_cast<size_t>(s)];
    alias_[static_cast<size_t>(s)] = l;
    scaled[static_cast<size_t>(l)] += scaled[static_cast<size_t>(s)] - 1.0;
    if (scaled[static_cast<size_t>(l)] < 1.0) {
      small.push_back(l);
    } else {
      large.push_back(l);
    }
  }
  while (!large.empty()) {
    prob_[static_cast<size_t>(large.back())] = 1.0;
    large.pop_back();
  }
  while (!small.empty()) {
    prob_[static_cast<size_t>(small.back())] = 1.0;
    small.pop_back();
  }
}

AliasTable build_noise_table(std::span<const std::int64_t> sense_frequencies) {
  if (sense_frequencies.empty())
    throw std::invalid_argument("build_noise_table: empty sense set");
  std::vector<double> mass(sense_frequencies.size());
  for (size_t i = 0; i < sense_frequencies.size(); ++i)
    mass[i] = std::pow(static_cast<double>(sense_frequencies[i]), 0.75);
  return AliasTable(mass);
}

}  // namespace ise
