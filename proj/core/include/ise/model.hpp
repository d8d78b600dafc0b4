#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ise/senses.hpp"

namespace ise {

// The three embedding tables plus the sense registry and token strings needed
// to interpret them. Rows are flat row-major doubles.
class EmbeddingModel {
 public:
  EmbeddingModel() = default;
  EmbeddingModel(SenseRegistry registry, std::vector<std::string> tokens, int num_identities,
                 int dim);

  int dim() const { return dim_; }
  int num_senses() const { return registry_.size(); }
  int num_words() const { return static_cast<int>(tokens_.size()); }
  int num_identities() const { return num_identities_; }

  std::span<double> sense(int row) { return row_of(senses_, row); }
  std::span<const double> sense(int row) const { return row_of(senses_, row); }
  std::span<double> context(int word) { return row_of(contexts_, word); }
  std::span<const double> context(int word) const { return row_of(contexts_, word); }
  std::span<double> identity(int id) { return row_of(identities_, id); }
  std::span<const double> identity(int id) const { return row_of(identities_, id); }

  const SenseRegistry& registry() const { return registry_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  int word_id(const std::string& token) const;  // -1 if unknown

  // Raw tables, used by serialization and by finite-difference tests.
  std::vector<double>& sense_table() { return senses_; }
  std::vector<double>& context_table() { return contexts_; }
  std::vector<double>& identity_table() { return identities_; }
  const std::vector<double>& sense_table() const { return senses_; }
  const std::vector<double>& context_table() const { return contexts_; }
  const std::vector<double>& identity_table() const { return identities_; }

  bool all_finite() const;

 private:
  std::span<double> row_of(std::vector<double>& table, int row) {
    return {table.data() + static_cast<size_t>(row) * dim_, static_cast<size_t>(dim_)};
  }
  std::span<const double> row_of(const std::vector<double>& table, int row) const {
    return {table.data() + static_cast<size_t>(row) * dim_, static_cast<size_t>(dim_)};
  }

  SenseRegistry registry_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> token_index_;
  std::vector<double> senses_;
  std::vector<double> contexts_;
  std::vector<double> identities_;
  int num_identities_ = 0;
  int dim_ = 0;
};

// Model directory layout: senses.txt / context.txt / identity.txt in the text
// format "<rows> <dim>" header + one row per line with 6 significant digits,
// plus model.bin, a lossless binary sidecar. load_model prefers the sidecar
// and falls back to the text files.
void save_model(const EmbeddingModel& model, const std::string& dir);
EmbeddingModel load_model(const std::string& dir);

}  // namespace ise
