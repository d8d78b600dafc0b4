#include "ise/senses.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ise {

SenseRegistry SenseRegistry::build(const LabeledCorpus& corpus, int vocab_size) {
  if (!corpus.fully_labeled())
    throw std::invalid_argument("SenseRegistry: corpus is not identity-labeled");

  std::map<std::pair<int, int>, std::int64_t> counts;
  for (const auto& doc : corpus.docs) {
    for (size_t i = 0; i < doc.words.size(); ++i) {
      counts[{doc.words[i], doc.identities[i]}]++;
    }
  }

  SenseRegistry reg;
  reg.num_identities_ = corpus.num_identities;
  reg.senses_.reserve(counts.size());
  reg.freq_.reserve(counts.size());
  for (const auto& [pair, freq] : counts) {
    int row = static_cast<int>(reg.senses_.size());
    reg.senses_.push_back({pair.first, pair.second, row});
    reg.freq_.push_back(freq);
  }

  reg.word_offsets_.assign(static_cast<size_t>(vocab_size) + 1, 0);
  for (const auto& s : reg.senses_) reg.word_offsets_[static_cast<size_t>(s.word) + 1]++;
  for (size_t w = 1; w < reg.word_offsets_.size(); ++w)
    reg.word_offsets_[w] += reg.word_offsets_[w - 1];
  return reg;
}

SenseRegistry SenseRegistry::from_senses(std::vector<SenseId> senses,
                                         std::vector<std::int64_t> freq, int vocab_size,
                                         int num_identities) {
  SenseRegistry reg;
  reg.num_identities_ = num_identities;
  reg.senses_ = std::move(senses);
  reg.freq_ = std::move(freq);
  std::sort(reg.senses_.begin(), reg.senses_.end(), [](const SenseId& a, const SenseId& b) {
    return a.row < b.row;
  });
  for (size_t r = 0; r < reg.senses_.size(); ++r) {
    if (reg.senses_[r].row != static_cast<int>(r))
      throw std::invalid_argument("SenseRegistry: rows are not dense");
    if (reg.senses_[r].word < 0 || reg.senses_[r].word >= vocab_size ||
        reg.senses_[r].identity < 0 || reg.senses_[r].identity >= num_identities)
      throw std::invalid_argument("SenseRegistry: sense indices out of range");
    if (r > 0) {
      const auto& prev = reg.senses_[r - 1];
      const auto& cur = reg.senses_[r];
      if (std::pair{prev.word, prev.identity} >= std::pair{cur.word, cur.identity})
        throw std::invalid_argument("SenseRegistry: rows are not (word, identity) ordered");
    }
  }
  reg.word_offsets_.assign(static_cast<size_t>(vocab_size) + 1, 0);
  for (const auto& s : reg.senses_) reg.word_offsets_[static_cast<size_t>(s.word) + 1]++;
  for (size_t w = 1; w < reg.word_offsets_.size(); ++w)
    reg.word_offsets_[w] += reg.word_offsets_[w - 1];
  return reg;
}

int SenseRegistry::row_of(int word, int identity) const {
  if (word < 0 || word >= num_words()) return -1;
  for (const auto& s : senses_of(word)) {
    if (s.identity == identity) return s.row;
  }
  return -1;
}

std::span<const SenseId> SenseRegistry::senses_of(int word) const {
  if (word < 0 || word >= num_words()) return {};
  size_t begin = static_cast<size_t>(word_offsets_[static_cast<size_t>(word)]);
  size_t end = static_cast<size_t>(word_offsets_[static_cast<size_t>(word) + 1]);
  return {senses_.data() + begin, end - begin};
}

}  // namespace ise
