#pragma once

#include <span>

#include "ise/corpus.hpp"
#include "ise/model.hpp"

namespace ise {

// Every token takes its document's class id as identity. Throws on an
// unlabeled document.
LabeledCorpus label_category(const LabeledCorpus& corpus);

// Gives every token the single identity 0 (baseline mode: the word-context
// half degenerates to plain second-order word embedding).
LabeledCorpus label_none(const LabeledCorpus& corpus);

// Test-time identity of doc_words[target_index]:
//   argmax_k  w_k . mean(context vectors of the other words in the document)
// Other occurrences of the target word are excluded from the mean. Ties break
// toward the lowest identity id. If no other known word exists, falls back to
// the sense with the largest corpus frequency. Throws std::out_of_range when
// the target word has no sense row.
int infer_identity(const EmbeddingModel& model, std::span<const int> doc_words,
                   size_t target_index);

}  // namespace ise
