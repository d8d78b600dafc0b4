#pragma once

#include <unordered_map>

#include "ise/corpus.hpp"

namespace ise {

// Sentiment identity ids. Class ids of a binary corpus map directly onto
// identity ids 0 and 1; unselected words share the neutral identity.
inline constexpr int kNeutralIdentity = 2;
inline constexpr int kNumSentimentIdentities = 3;

struct SentimentLexicon {
  std::unordered_map<int, int> selected;  // word id -> identity id (class it leans toward)
  double threshold = 10.0;
};

// Ratio feature selection with add-one smoothing:
//   p(w|c) = (count(w,c) + 1) / (N_c + |V|)
// A word is selected for class c when p(w|c) / p(w|other) >= threshold.
// Requires a corpus with exactly two document classes.
SentimentLexicon select_sentiment_words(const LabeledCorpus& corpus, int vocab_size,
                                        double threshold);

// Tokens of lexicon words take the document's class as identity; everything
// else gets the shared neutral identity.
LabeledCorpus label_sentiment(const LabeledCorpus& corpus, const SentimentLexicon& lexicon);

}  // namespace ise
