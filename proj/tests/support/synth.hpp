// Seeded synthetic corpora used by unit and acceptance tests.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ise/corpus.hpp"
#include "ise/rng.hpp"

namespace synth {

// Uniformly random identity-labeled corpus (for conservation/oracle checks).
inline ise::LabeledCorpus random_corpus(int num_docs, int min_len, int max_len, int vocab_size,
                                        int num_identities, std::uint64_t seed) {
  ise::Rng rng(seed);
  ise::LabeledCorpus corpus;
  corpus.identity_kind = ise::IdentityKind::topic;
  corpus.num_identities = num_identities;
  for (int d = 0; d < num_docs; ++d) {
    ise::Document doc;
    int len = min_len + static_cast<int>(rng.uniform_int(max_len - min_len + 1));
    for (int i = 0; i < len; ++i) {
      doc.words.push_back(static_cast<int>(rng.uniform_int(vocab_size)));
      doc.identities.push_back(static_cast<int>(rng.uniform_int(num_identities)));
    }
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

inline std::vector<std::string> numbered_tokens(int n, const std::string& prefix = "w") {
  std::vector<std::string> tokens;
  tokens.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) tokens.push_back(prefix + std::to_string(i));
  return tokens;
}

// ---- planted two-identity corpus -------------------------------------------
//
// Two identities with disjoint topical vocabularies plus a small set of shared
// ambiguous words. Every document belongs to one identity; all its tokens are
// labeled with that identity (category-style labeling). Word ids:
//   [0, topical)                       identity-0 topical words
//   [topical, 2*topical)               identity-1 topical words
//   [2*topical, 2*topical+ambiguous)   shared ambiguous words

struct PlantedCorpus {
  ise::LabeledCorpus train;
  ise::LabeledCorpus heldout;
  int topical = 0;    // per identity
  int ambiguous = 0;

  int vocab_size() const { return 2 * topical + ambiguous; }
  bool is_ambiguous(int word) const { return word >= 2 * topical; }
  // -1 for ambiguous words
  int topical_identity(int word) const {
    return is_ambiguous(word) ? -1 : (word < topical ? 0 : 1);
  }
};

inline PlantedCorpus make_planted_corpus(int train_docs, int heldout_docs, int topical,
                                         int ambiguous, double ambiguous_prob,
                                         std::uint64_t seed) {
  PlantedCorpus planted;
  planted.topical = topical;
  planted.ambiguous = ambiguous;

  ise::Rng rng(seed);
  auto generate = [&](int num_docs) {
    ise::LabeledCorpus corpus;
    corpus.identity_kind = ise::IdentityKind::category;
    corpus.num_identities = 2;
    corpus.label_names = {"id0", "id1"};
    for (int d = 0; d < num_docs; ++d) {
      int identity = d % 2;
      ise::Document doc;
      doc.label = identity;
      int len = 15 + static_cast<int>(rng.uniform_int(16));  // 15..30 tokens
      for (int i = 0; i < len; ++i) {
        int word;
        if (rng.uniform() < ambiguous_prob) {
          word = 2 * topical + static_cast<int>(rng.uniform_int(ambiguous));
        } else {
          word = identity * topical + static_cast<int>(rng.uniform_int(topical));
        }
        doc.words.push_back(word);
        doc.identities.push_back(identity);
      }
      corpus.docs.push_back(std::move(doc));
    }
    return corpus;
  };
  planted.train = generate(train_docs);
  planted.heldout = generate(heldout_docs);
  return planted;
}

// ---- multi-class corpus with latent subtopics -------------------------------
//
// Each class owns `subtopics` latent subtopics with disjoint vocabularies;
// documents draw most tokens from one subtopic and the rest from a vocabulary
// shared across all classes. LDA document-topic features degrade when K is
// far below the latent subtopic count; class labels stay recoverable from the
// subtopic words themselves.

struct SubtopicCorpus {
  ise::LabeledCorpus train;    // document labels = class ids
  ise::LabeledCorpus test;
  int vocab = 0;
  int num_classes = 0;
};

inline SubtopicCorpus make_subtopic_corpus(int num_classes, int subtopics_per_class,
                                           int words_per_subtopic, int shared_words,
                                           int train_docs, int test_docs, double shared_prob,
                                           std::uint64_t seed) {
  SubtopicCorpus out;
  out.num_classes = num_classes;
  const int subtopic_vocab = num_classes * subtopics_per_class * words_per_subtopic;
  out.vocab = subtopic_vocab + shared_words;

  ise::Rng rng(seed);
  auto generate = [&](int num_docs) {
    ise::LabeledCorpus corpus;
    for (int c = 0; c < num_classes; ++c) corpus.label_names.push_back("c" + std::to_string(c));
    for (int d = 0; d < num_docs; ++d) {
      int cls = d % num_classes;
      int subtopic = static_cast<int>(rng.uniform_int(subtopics_per_class));
      int base = (cls * subtopics_per_class + subtopic) * words_per_subtopic;
      ise::Document doc;
      doc.label = cls;
      int len = 20 + static_cast<int>(rng.uniform_int(21));  // 20..40 tokens
      for (int i = 0; i < len; ++i) {
        if (rng.uniform() < shared_prob) {
          doc.words.push_back(subtopic_vocab + static_cast<int>(rng.uniform_int(shared_words)));
        } else {
          doc.words.push_back(base + static_cast<int>(rng.uniform_int(words_per_subtopic)));
        }
      }
      corpus.docs.push_back(std::move(doc));
    }
    return corpus;
  };
  out.train = generate(train_docs);
  out.test = generate(test_docs);
  return out;
}

}  // namespace synth
