#include "ise/model.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "ise/errors.hpp"

namespace ise {

EmbeddingModel::EmbeddingModel(SenseRegistry registry, std::vector<std::string> tokens,
                               int num_identities, int dim)
    : registry_(std::move(registry)),
      tokens_(std::move(tokens)),
      num_identities_(num_identities),
      dim_(dim) {
  for (size_t i = 0; i < tokens_.size(); ++i) token_index_.emplace(tokens_[i], i);
  senses_.assign(static_cast<size_t>(registry_.size()) * dim_, 0.0);
  contexts_.assign(tokens_.size() * static_cast<size_t>(dim_), 0.0);
  identities_.assign(static_cast<size_t>(num_identities_) * dim_, 0.0);
}

int EmbeddingModel::word_id(const std::string& token) const {
  auto it = token_index_.find(token);
  return it == token_index_.end() ? -1 : it->second;
}

bool EmbeddingModel::all_finite() const {
  for (const auto* table : {&senses_, &contexts_, &identities_}) {
    for (double v : *table) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

namespace {

constexpr std::uint32_t kMagic = 0x4d455349;  // "ISEM"
constexpr std::uint32_t kVersion = 1;

namespace fs = std::filesystem;

void write_text_table(const std::string& path, size_t rows, int dim,
                      const std::vector<double>& table,
                      const std::function<std::string(size_t)>& row_name) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write model file: " + path);
  out << rows << ' ' << dim << '\n';
  char buf[64];
  for (size_t r = 0; r < rows; ++r) {
    out << row_name(r);
    for (int j = 0; j < dim; ++j) {
      std::snprintf(buf, sizeof(buf), "%.6g", table[r * static_cast<size_t>(dim) + j]);
      out << ' ' << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

template <typename T>
void write_raw(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_raw(std::ifstream& in, const std::string& path) {
  T value;
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw FormatError("truncated model binary: " + path);
  return value;
}

void write_string(std::ofstream& out, const std::string& s) {
  write_raw(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string read_string(std::ifstream& in, const std::string& path) {
  auto len = read_raw<std::uint32_t>(in, path);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (!in) throw FormatError("truncated model binary: " + path);
  return s;
}

EmbeddingModel load_model_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model binary: " + path);
  if (read_raw<std::uint32_t>(in, path) != kMagic)
    throw FormatError("bad magic in model binary: " + path);
  if (read_raw<std::uint32_t>(in, path) != kVersion)
    throw FormatError("unsupported version in model binary: " + path);

  auto dim = read_raw<std::int32_t>(in, path);
  auto num_senses = read_raw<std::int32_t>(in, path);
  auto num_words = read_raw<std::int32_t>(in, path);
  auto num_identities = read_raw<std::int32_t>(in, path);
  if (dim < 1 || num_senses < 0 || num_words < 0 || num_identities < 0)
    throw FormatError("corrupted header in model binary: " + path);

  std::vector<std::string> tokens;
  tokens.reserve(static_cast<size_t>(num_words));
  for (std::int32_t w = 0; w < num_words; ++w) tokens.push_back(read_string(in, path));

  std::vector<SenseId> senses(static_cast<size_t>(num_senses));
  std::vector<std::int64_t> freq(static_cast<size_t>(num_senses));
  for (std::int32_t r = 0; r < num_senses; ++r) {
    senses[static_cast<size_t>(r)].word = read_raw<std::int32_t>(in, path);
    senses[static_cast<size_t>(r)].identity = read_raw<std::int32_t>(in, path);
    senses[static_cast<size_t>(r)].row = r;
    freq[static_cast<size_t>(r)] = read_raw<std::int64_t>(in, path);
  }

  EmbeddingModel model(SenseRegistry::from_senses(std::move(senses), std::move(freq), num_words,
                                                  num_identities),
                       std::move(tokens), num_identities, dim);
  auto read_table = [&](std::vector<double>& table) {
    in.read(reinterpret_cast<char*>(table.data()),
            static_cast<std::streamsize>(table.size() * sizeof(double)));
    if (!in) throw FormatError("truncated model binary: " + path);
  };
  read_table(model.sense_table());
  read_table(model.context_table());
  read_table(model.identity_table());
  return model;
}

// Shared reader for the three text tables. Validates the declared row count
// and dimension against the actual contents.
std::vector<std::vector<double>> read_text_table(const std::string& path,
                                                 std::vector<std::string>& names, int& dim) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path);
  std::string header;
  if (!std::getline(in, header)) throw FormatError("empty model file: " + path);
  std::istringstream hs(header);
  long long rows = -1;
  int d = -1;
  if (!(hs >> rows >> d) || rows < 0 || d < 1)
    throw FormatError("bad header in model file: " + path);

  std::vector<std::vector<double>> table;
  std::string line;
  long line_no = 1;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string name;
    ss >> name;
    std::vector<double> row;
    row.reserve(static_cast<size_t>(d));
    double v;
    while (ss >> v) row.push_back(v);
    if (static_cast<int>(row.size()) != d)
      throw FormatError(path, line_no, "row has " + std::to_string(row.size()) +
                                           " values, expected " + std::to_string(d));
    names.push_back(std::move(name));
    table.push_back(std::move(row));
  }
  if (static_cast<long long>(table.size()) != rows)
    throw FormatError("row count mismatch in " + path + ": header says " + std::to_string(rows) +
                      ", found " + std::to_string(table.size()));
  dim = d;
  return table;
}

EmbeddingModel load_model_text(const std::string& dir) {
  std::vector<std::string> tokens;
  int ctx_dim = 0;
  auto contexts = read_text_table(dir + "/context.txt", tokens, ctx_dim);

  std::vector<std::string> sense_names;
  int sense_dim = 0;
  auto senses = read_text_table(dir + "/senses.txt", sense_names, sense_dim);

  std::vector<std::string> identity_names;
  int id_dim = 0;
  auto identities = read_text_table(dir + "/identity.txt", identity_names, id_dim);

  if (sense_dim != ctx_dim || id_dim != ctx_dim)
    throw FormatError("model files in " + dir + " have mismatched dimensions");

  std::unordered_map<std::string, int> token_index;
  for (size_t i = 0; i < tokens.size(); ++i) token_index.emplace(tokens[i], i);

  std::vector<SenseId> sense_ids(sense_names.size());
  for (size_t r = 0; r < sense_names.size(); ++r) {
    auto hash = sense_names[r].rfind('#');
    if (hash == std::string::npos)
      throw FormatError("sense row without #identity in " + dir + "/senses.txt: " +
                        sense_names[r]);
    auto it = token_index.find(sense_names[r].substr(0, hash));
    if (it == token_index.end())
      throw FormatError("sense word missing from context.txt in " + dir + ": " + sense_names[r]);
    sense_ids[r] = {it->second, std::stoi(sense_names[r].substr(hash + 1)),
                    static_cast<int>(r)};
  }

  int num_identities = static_cast<int>(identity_names.size());
  int vocab_size = static_cast<int>(tokens.size());
  // Sense frequencies are not part of the text format.
  auto registry = SenseRegistry::from_senses(std::move(sense_ids),
                                             std::vector<std::int64_t>(sense_names.size(), 0),
                                             vocab_size, num_identities);
  EmbeddingModel model(std::move(registry), std::move(tokens), num_identities, ctx_dim);

  auto fill = [&](std::vector<double>& flat, const std::vector<std::vector<double>>& rows) {
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t j = 0; j < rows[r].size(); ++j)
        flat[r * static_cast<size_t>(ctx_dim) + j] = rows[r][j];
  };
  fill(model.sense_table(), senses);
  fill(model.context_table(), contexts);
  fill(model.identity_table(), identities);
  return model;
}

}  // namespace

void save_model(const EmbeddingModel& model, const std::string& dir) {
  fs::create_directories(dir);
  const auto& reg = model.registry();

  write_text_table(dir + "/senses.txt", static_cast<size_t>(model.num_senses()), model.dim(),
                   model.sense_table(), [&](size_t r) {
                     const SenseId& s = reg.sense(static_cast<int>(r));
                     return model.tokens()[static_cast<size_t>(s.word)] + "#" +
                            std::to_string(s.identity);
                   });
  write_text_table(dir + "/context.txt", model.tokens().size(), model.dim(),
                   model.context_table(),
                   [&](size_t r) { return model.tokens()[r]; });
  write_text_table(dir + "/identity.txt", static_cast<size_t>(model.num_identities()),
                   model.dim(), model.identity_table(),
                   [](size_t r) { return std::to_string(r); });

  std::string bin = dir + "/model.bin";
  std::ofstream out(bin, std::ios::binary);
  if (!out) throw IoError("cannot write model binary: " + bin);
  write_raw(out, kMagic);
  write_raw(out, kVersion);
  write_raw(out, static_cast<std::int32_t>(model.dim()));
  write_raw(out, static_cast<std::int32_t>(model.num_senses()));
  write_raw(out, static_cast<std::int32_t>(model.tokens().size()));
  write_raw(out, static_cast<std::int32_t>(model.num_identities()));
  for (const auto& tok : model.tokens()) write_string(out, tok);
  for (int r = 0; r < model.num_senses(); ++r) {
    const SenseId& s = reg.sense(r);
    write_raw(out, static_cast<std::int32_t>(s.word));
    write_raw(out, static_cast<std::int32_t>(s.identity));
    write_raw(out, reg.frequencies()[static_cast<size_t>(r)]);
  }
  auto write_table = [&](const std::vector<double>& table) {
    out.write(reinterpret_cast<const char*>(table.data()),
              static_cast<std::streamsize>(table.size() * sizeof(double)));
  };
  write_table(model.sense_table());
  write_table(model.context_table());
  write_table(model.identity_table());
  if (!out) throw IoError("write failed: " + bin);
}

EmbeddingModel load_model(const std::string& dir) {
  if (fs::exists(dir + "/model.bin")) return load_model_binary(dir + "/model.bin");
  return load_model_text(dir);
}

}  // namespace ise
