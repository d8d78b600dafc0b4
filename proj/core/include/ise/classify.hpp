#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ise {

// One-vs-rest logistic regression fit by damped Newton iterations (IRLS) with
// L2 regularization. Deterministic: no sampling, fixed iteration policy.
class LogisticClassifier {
 public:
  static LogisticClassifier train(const std::vector<std::vector<double>>& features,
                                  const std::vector<int>& labels, double l2);

  int predict(std::span<const double> x) const;
  std::vector<int> predict(const std::vector<std::vector<double>>& features) const;
  double decision(std::span<const double> x, int cls) const;

  int num_classes() const { return static_cast<int>(weights_.size()); }
  int dim() const { return dim_; }

 private:
  std::vector<std::vector<double>> weights_;  // per class, dim + 1 (bias last)
  int dim_ = 0;
};

struct ClassStats {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;  // gold count
};

struct ClassificationReport {
  double micro_f1 = 0.0;  // global-count F1; equals accuracy for single-label tasks
  double macro_f1 = 0.0;  // unweighted mean F1 over classes seen in gold or predictions
  std::vector<ClassStats> per_class;
  std::vector<std::vector<std::int64_t>> confusion;  // [gold][pred]
};

ClassificationReport classification_report(std::span<const int> predictions,
                                           std::span<const int> gold);

// Machine-readable key=value lines followed by an aligned per-class table.
std::string render_report(const ClassificationReport& report,
                          const std::vector<std::string>& label_names = {});

}  // namespace ise
