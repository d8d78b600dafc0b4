#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ise/corpus.hpp"

namespace ise {

// An observed (word, identity) pair; the unit that receives an embedding.
struct SenseId {
  int word;
  int identity;
  int row;  // dense index into the sense embedding table
};

// Registry of all sense nodes observed in a corpus. Rows are ordered by
// (word, identity), so the senses of one word occupy a contiguous range with
// ascending identity ids.
class SenseRegistry {
 public:
  SenseRegistry() = default;

  static SenseRegistry build(const LabeledCorpus& corpus, int vocab_size);

  int row_of(int word, int identity) const;  // -1 if the pair was never observed
  std::span<const SenseId> senses_of(int word) const;
  const std::vector<SenseId>& senses() const { return senses_; }
  const SenseId& sense(int row) const { return senses_[static_cast<size_t>(row)]; }

  // Token count of each sense, i.e. the weight of its word-identity edge.
  const std::vector<std::int64_t>& frequencies() const { return freq_; }

  int size() const { return static_cast<int>(senses_.size()); }
  int num_words() const { return static_cast<int>(word_offsets_.size()) - 1; }
  int num_identities() const { return num_identities_; }

  // Used by deserialization paths that reconstruct a registry directly.
  static SenseRegistry from_senses(std::vector<SenseId> senses, std::vector<std::int64_t> freq,
                                   int vocab_size, int num_identities);

 private:
  std::vector<SenseId> senses_;       // ordered by (word, identity)
  std::vector<std::int64_t> freq_;    // per row
  std::vector<int> word_offsets_;     // [V+1]; rows of word w are [off[w], off[w+1])
  int num_identities_ = 1;
};

}  // namespace ise
