#include "ise/identity.hpp"

#include <stdexcept>

namespace ise {

LabeledCorpus label_category(const LabeledCorpus& corpus) {
  int num_classes = static_cast<int>(corpus.label_names.size());
  for (const auto& d : corpus.docs) num_classes = std::max(num_classes, d.label + 1);
  if (num_classes < 1) throw std::invalid_argument("label_category: corpus has no labels");

  LabeledCorpus labeled = corpus;
  labeled.identity_kind = IdentityKind::category;
  labeled.num_identities = num_classes;
  for (auto& doc : labeled.docs) {
    if (!doc.has_label()) throw std::invalid_argument("label_category: unlabeled document");
    doc.identities.assign(doc.words.size(), doc.label);
  }
  return labeled;
}

LabeledCorpus label_none(const LabeledCorpus& corpus) {
  LabeledCorpus labeled = corpus;
  labeled.identity_kind = IdentityKind::none;
  labeled.num_identities = 1;
  for (auto& doc : labeled.docs) doc.identities.assign(doc.words.size(), 0);
  return labeled;
}

int infer_identity(const EmbeddingModel& model, std::span<const int> doc_words,
                   size_t target_index) {
  const int word = doc_words[target_index];
  auto senses = model.registry().senses_of(word);
  if (senses.empty())
    throw std::out_of_range("infer_identity: word has no sense row");
  if (senses.size() == 1) return senses[0].identity;

  const int dim = model.dim();
  std::vector<double> mean(static_cast<size_t>(dim), 0.0);
  int count = 0;
  for (size_t p = 0; p < doc_words.size(); ++p) {
    if (doc_words[p] == word) continue;  // every occurrence of w is excluded
    auto ctx = model.context(doc_words[p]);
    for (int j = 0; j < dim; ++j) mean[static_cast<size_t>(j)] += ctx[static_cast<size_t>(j)];
    count++;
  }

  if (count == 0) {
    // No usable context: fall back to the most frequent sense.
    const auto& freq = model.registry().frequencies();
    int best = 0;
    for (size_t i = 1; i < senses.size(); ++i) {
      if (freq[static_cast<size_t>(senses[i].row)] >
          freq[static_cast<size_t>(senses[static_cast<size_t>(best)].row)])
        best = static_cast<int>(i);
    }
    return senses[static_cast<size_t>(best)].identity;
  }

  for (auto& v : mean) v /= count;

  int best_identity = senses[0].identity;
  double best_score = 0.0;
  bool first = true;
  for (const auto& s : senses) {
    auto vec = model.sense(s.row);
    double dot = 0.0;
    for (int j = 0; j < dim; ++j)
      dot += vec[static_cast<size_t>(j)] * mean[static_cast<size_t>(j)];
    if (first || dot > best_score) {  // ties keep the lowest identity id
      best_score = dot;
      best_identity = s.identity;
      first = false;
    }
  }
  return best_identity;
}

}  // namespace ise
