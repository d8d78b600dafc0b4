#include "ise/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ise/errors.hpp"

namespace ise {

int Vocabulary::push(std::string token, std::int64_t freq) {
  int id = static_cast<int>(tokens_.size());
  index_.emplace(token, id);
  tokens_.push_back(std::move(token));
  freq_.push_back(freq);
  return id;
}

int Vocabulary::lookup(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

std::int64_t Vocabulary::total_tokens() const {
  return std::accumulate(freq_.begin(), freq_.end(), std::int64_t{0});
}

const char* to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::none: return "none";
    case IdentityKind::topic: return "topic";
    case IdentityKind::sentiment: return "sentiment";
    case IdentityKind::category: return "category";
  }
  return "none";
}

IdentityKind identity_kind_from_string(const std::string& name) {
  if (name == "none") return IdentityKind::none;
  if (name == "topic") return IdentityKind::topic;
  if (name == "sentiment") return IdentityKind::sentiment;
  if (name == "category") return IdentityKind::category;
  throw FormatError("unknown identity kind: " + name);
}

std::int64_t LabeledCorpus::total_tokens() const {
  std::int64_t n = 0;
  for (const auto& d : docs) n += static_cast<std::int64_t>(d.words.size());
  return n;
}

bool LabeledCorpus::fully_labeled() const {
  return std::all_of(docs.begin(), docs.end(),
                     [](const Document& d) { return d.labeled_identities(); });
}

namespace {

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text,
                                  const std::unordered_set<std::string>& stopwords) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      if (!stopwords.count(cur)) out.push_back(cur);
      cur.clear();
    }
  };
  for (unsigned char c : text) {
    if (is_word_byte(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs, int min_count) {
  if (min_count < 1) throw std::invalid_argument("build_vocabulary: min_count must be >= 1");

  std::unordered_map<std::string, std::pair<std::int64_t, std::int64_t>> counts;  // freq, first seen
  std::int64_t position = 0;
  for (const auto& doc : docs) {
    for (const auto& tok : doc) {
      auto [it, inserted] = counts.try_emplace(tok, 0, position);
      it->second.first++;
      position++;
    }
  }

  std::vector<const std::pair<const std::string, std::pair<std::int64_t, std::int64_t>>*> kept;
  for (const auto& entry : counts) {
    if (entry.second.first >= min_count) kept.push_back(&entry);
  }
  if (kept.empty()) throw std::invalid_argument("build_vocabulary: no word meets min_count");

  std::sort(kept.begin(), kept.end(), [](const auto* a, const auto* b) {
    if (a->second.first != b->second.first) return a->second.first > b->second.first;
    return a->second.second < b->second.second;
  });

  Vocabulary vocab;
  for (const auto* entry : kept) vocab.push(entry->first, entry->second.first);
  return vocab;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    for (auto& tok : tokenize(line)) words.insert(std::move(tok));
  }
  return words;
}

LoadedCorpus load_corpus(const std::string& path, bool labeled,
                         const std::unordered_set<std::string>& stopwords, int min_count) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);

  std::vector<std::vector<std::string>> token_docs;
  std::vector<int> labels;
  std::vector<std::string> label_names;
  std::unordered_map<std::string, int> label_index;

  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string text = line;
    int label = -1;
    if (labeled) {
      auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw FormatError(path, line_no, "labeled line has no TAB separator");
      std::string name = line.substr(0, tab);
      text = line.substr(tab + 1);
      auto [it, inserted] = label_index.try_emplace(name, static_cast<int>(label_names.size()));
      if (inserted) label_names.push_back(name);
      label = it->second;
    }
    token_docs.push_back(tokenize(text, stopwords));
    labels.push_back(label);
  }

  LoadedCorpus out;
  out.vocab = build_vocabulary(token_docs, min_count);
  out.corpus.label_names = std::move(label_names);
  out.corpus.docs.reserve(token_docs.size());
  for (size_t i = 0; i < token_docs.size(); ++i) {
    Document doc;
    doc.label = labels[i];
    for (const auto& tok : token_docs[i]) {
      int id = out.vocab.lookup(tok);
      if (id >= 0) doc.words.push_back(id);
    }
    out.corpus.docs.push_back(std::move(doc));
  }
  return out;
}

void save_labeled_corpus(const LabeledCorpus& corpus, const Vocabulary& vocab,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write labeled corpus: " + path);
  for (const auto& doc : corpus.docs) {
    if (doc.has_label()) out << corpus.label_names[static_cast<size_t>(doc.label)] << '\t';
    for (size_t i = 0; i < doc.words.size(); ++i) {
      if (i) out << ' ';
      int identity = doc.labeled_identities() ? doc.identities[i] : 0;
      out << vocab.token(doc.words[i]) << '#' << identity;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

LabeledCorpus load_labeled_corpus(const std::string& path, const Vocabulary& vocab,
                                  IdentityKind kind, int num_identities,
                                  std::vector<std::string> label_names) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open labeled corpus: " + path);

  std::unordered_map<std::string, int> label_index;
  for (size_t i = 0; i < label_names.size(); ++i) label_index.emplace(label_names[i], i);

  LabeledCorpus corpus;
  corpus.identity_kind = kind;
  corpus.num_identities = num_identities;
  corpus.label_names = std::move(label_names);

  std::string line;
  long line_no = 0;
  // Every line is a document here, including empty ones (a labeled document
  // can lose all tokens to min_count filtering).
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Document doc;
    std::string body = line;
    auto tab = line.find('\t');
    if (tab != std::string::npos) {
      std::string name = line.substr(0, tab);
      auto it = label_index.find(name);
      if (it == label_index.end())
        throw FormatError(path, line_no, "unknown label: " + name);
      doc.label = it->second;
      body = line.substr(tab + 1);
    }
    std::istringstream ss(body);
    std::string tok;
    while (ss >> tok) {
      auto hash = tok.rfind('#');
      if (hash == std::string::npos || hash + 1 >= tok.size())
        throw FormatError(path, line_no, "token without #identity: " + tok);
      int word = vocab.lookup(tok.substr(0, hash));
      if (word < 0) throw FormatError(path, line_no, "token not in vocabulary: " + tok);
      int identity = 0;
      try {
        identity = std::stoi(tok.substr(hash + 1));
      } catch (const std::exception&) {
        throw FormatError(path, line_no, "bad identity id in token: " + tok);
      }
      if (identity < 0 || identity >= num_identities)
        throw FormatError(path, line_no, "identity id out of range: " + tok);
      doc.words.push_back(word);
      doc.identities.push_back(identity);
    }
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write vocabulary: " + path);
  for (int i = 0; i < vocab.size(); ++i) {
    out << vocab.token(i) << '\t' << vocab.freq(i) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

Vocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vocabulary: " + path);
  Vocabulary vocab;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw FormatError(path, line_no, "expected token<TAB>freq");
    std::int64_t freq = 0;
    try {
      freq = std::stoll(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw FormatError(path, line_no, "bad frequency");
    }
    vocab.push(line.substr(0, tab), freq);
  }
  return vocab;
}

void save_corpus_meta(const LabeledCorpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write corpus meta: " + path);
  out << "identity_kind=" << to_string(corpus.identity_kind) << '\n';
  out << "num_identities=" << corpus.num_identities << '\n';
  for (const auto& name : corpus.label_names) out << "label=" << name << '\n';
  if (!out) throw IoError("write failed: " + path);
}

LabeledCorpus load_corpus_meta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus meta: " + path);
  LabeledCorpus shell;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError(path, line_no, "expected key=value");
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "identity_kind") {
      shell.identity_kind = identity_kind_from_string(value);
    } else if (key == "num_identities") {
      shell.num_identities = std::stoi(value);
    } else if (key == "label") {
      shell.label_names.push_back(value);
    } else {
      throw FormatError(path, line_no, "unknown key: " + key);
    }
  }
  return shell;
}

}  // namespace ise
