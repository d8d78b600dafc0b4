#include "ise/sentiment.hpp"

#include <stdexcept>

namespace ise {

SentimentLexicon select_sentiment_words(const LabeledCorpus& corpus, int vocab_size,
                                        double threshold) {
  int num_classes = static_cast<int>(corpus.label_names.size());
  if (num_classes == 0) {
    for (const auto& d : corpus.docs) num_classes = std::max(num_classes, d.label + 1);
  }
  if (num_classes != 2)
    throw std::invalid_argument("select_sentiment_words: corpus must have exactly two classes");

  std::vector<std::int64_t> count(static_cast<size_t>(vocab_size) * 2, 0);
  std::int64_t class_tokens[2] = {0, 0};
  for (const auto& doc : corpus.docs) {
    if (!doc.has_label())
      throw std::invalid_argument("select_sentiment_words: unlabeled document");
    for (int w : doc.words) {
      count[static_cast<size_t>(w) * 2 + doc.label]++;
      class_tokens[doc.label]++;
    }
  }
  if (class_tokens[0] == 0 || class_tokens[1] == 0)
    throw std::invalid_argument("select_sentiment_words: a class has no tokens");

  SentimentLexicon lexicon;
  lexicon.threshold = threshold;
  const double denom0 = static_cast<double>(class_tokens[0] + vocab_size);
  const double denom1 = static_cast<double>(class_tokens[1] + vocab_size);
  for (int w = 0; w < vocab_size; ++w) {
    double p0 = (count[static_cast<size_t>(w) * 2] + 1) / denom0;
    double p1 = (count[static_cast<size_t>(w) * 2 + 1] + 1) / denom1;
    if (p1 / p0 >= threshold) {
      lexicon.selected.emplace(w, 1);
    } else if (p0 / p1 >= threshold) {
      lexicon.selected.emplace(w, 0);
    }
  }
  return lexicon;
}

LabeledCorpus label_sentiment(const LabeledCorpus& corpus, const SentimentLexicon& lexicon) {
  LabeledCorpus labeled = corpus;
  labeled.identity_kind = IdentityKind::sentiment;
  labeled.num_identities = kNumSentimentIdentities;
  for (auto& doc : labeled.docs) {
    if (!doc.has_label())
      throw std::invalid_argument("label_sentiment: unlabeled document");
    doc.identities.resize(doc.words.size());
    for (size_t i = 0; i < doc.words.size(); ++i) {
      // Selected words take the document's identity (not the lexicon's lean).
      doc.identities[i] =
          lexicon.selected.count(doc.words[i]) ? doc.label : kNeutralIdentity;
    }
  }
  return labeled;
}

}  // namespace ise
