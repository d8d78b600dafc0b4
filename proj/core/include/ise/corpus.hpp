#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ise {

// Dense token <-> id map plus corpus frequencies t(w). Ids are assigned by
// descending frequency, ties broken by first appearance, so id 0 is the most
// frequent word.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Appends a token with the next id. The caller owns the ordering contract.
  int push(std::string token, std::int64_t freq);

  int lookup(const std::string& token) const;  // -1 if unknown
  const std::string& token(int id) const { return tokens_[static_cast<size_t>(id)]; }
  std::int64_t freq(int id) const { return freq_[static_cast<size_t>(id)]; }
  int size() const { return static_cast<int>(tokens_.size()); }
  std::int64_t total_tokens() const;
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::int64_t> freq_;
  std::unordered_map<std::string, int> index_;
};

enum class IdentityKind { none, topic, sentiment, category };

const char* to_string(IdentityKind kind);
IdentityKind identity_kind_from_string(const std::string& name);

struct Document {
  std::vector<int> words;       // word ids
  std::vector<int> identities;  // empty before labeling, else |identities| == |words|
  int label = -1;               // dense class id, -1 when unset

  bool has_label() const { return label >= 0; }
  bool labeled_identities() const { return identities.size() == words.size(); }
};

struct LabeledCorpus {
  std::vector<Document> docs;
  IdentityKind identity_kind = IdentityKind::none;
  int num_identities = 1;
  std::vector<std::string> label_names;  // class id -> label string

  std::int64_t total_tokens() const;
  bool fully_labeled() const;  // every doc has per-token identities
};

// Lowercases (ASCII) and splits on non-alphanumeric bytes; bytes >= 0x80 are
// kept as word characters so multi-byte UTF-8 sequences survive intact.
std::vector<std::string> tokenize(std::string_view text,
                                  const std::unordered_set<std::string>& stopwords = {});

// Drops words occurring fewer than min_count times. Throws std::invalid_argument
// if min_count < 1 or nothing survives the threshold.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs, int min_count);

struct LoadedCorpus {
  Vocabulary vocab;
  LabeledCorpus corpus;
};

// Reads a corpus file (one document per non-empty line; labeled form
// "label<TAB>text"), tokenizes, builds the vocabulary and maps documents to
// word ids, dropping out-of-vocabulary tokens. Labels become dense class ids
// in order of first appearance.
LoadedCorpus load_corpus(const std::string& path, bool labeled,
                         const std::unordered_set<std::string>& stopwords = {},
                         int min_count = 5);

std::unordered_set<std::string> load_stopwords(const std::string& path);

// Labeled-corpus file: one document per line, tokens rendered
// "word#identityId" separated by spaces, optional leading "label<TAB>".
void save_labeled_corpus(const LabeledCorpus& corpus, const Vocabulary& vocab,
                         const std::string& path);
LabeledCorpus load_labeled_corpus(const std::string& path, const Vocabulary& vocab,
                                  IdentityKind kind, int num_identities,
                                  std::vector<std::string> label_names);

// Sidecar files the CLI uses to resume pipelines from disk.
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);
void save_corpus_meta(const LabeledCorpus& corpus, const std::string& path);
// Returns a corpus shell (no docs) carrying identity_kind / num_identities / labels.
LabeledCorpus load_corpus_meta(const std::string& path);

}  // namespace ise
