#include "ise/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ise/trainer.hpp"

namespace ise {

namespace {

// Solves A x = b for symmetric positive definite A (in-place Cholesky).
std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, size_t n) {
  for (size_t i = 0; i < n; ++i) a[i * n + i] += 1e-10;  // jitter against near-singular H
  for (size_t j = 0; j < n; ++j) {
    double diag = a[j * n + j];
    for (size_t k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
    if (diag <= 0.0) throw std::runtime_error("LogisticClassifier: Hessian not positive definite");
    diag = std::sqrt(diag);
    a[j * n + j] = diag;
    for (size_t i = j + 1; i < n; ++i) {
      double v = a[i * n + j];
      for (size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = v / diag;
    }
  }
  // forward then backward substitution
  for (size_t i = 0; i < n; ++i) {
    double v = b[i];
    for (size_t k = 0; k < i; ++k) v -= a[i * n + k] * b[k];
    b[i] = v / a[i * n + i];
  }
  for (size_t i = n; i-- > 0;) {
    double v = b[i];
    for (size_t k = i + 1; k < n; ++k) v -= a[k * n + i] * b[k];
    b[i] = v / a[i * n + i];
  }
  return b;
}

double binary_loss(const std::vector<std::vector<double>>& x, const std::vector<char>& y,
                   const std::vector<double>& w, double l2) {
  const size_t d = w.size() - 1;
  double loss = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double s = w[d];
    for (size_t j = 0; j < d; ++j) s += w[j] * x[i][j];
    loss -= y[i] ? log_sigmoid(s) : log_sigmoid(-s);
  }
  double reg = 0.0;
  for (size_t j = 0; j < d; ++j) reg += w[j] * w[j];
  return loss + 0.5 * l2 * reg;
}

// Damped Newton (IRLS). Deterministic; converges in a handful of iterations
// for any l2 > 0.
std::vector<double> fit_binary(const std::vector<std::vector<double>>& x,
                               const std::vector<char>& y, double l2) {
  const size_t d = x[0].size();
  const size_t m = d + 1;  // bias last
  std::vector<double> w(m, 0.0);

  for (int iter = 0; iter < 100; ++iter) {
    std::vector<double> grad(m, 0.0);
    std::vector<double> hess(m * m, 0.0);
    for (size_t i = 0; i < x.size(); ++i) {
      double s = w[d];
      for (size_t j = 0; j < d; ++j) s += w[j] * x[i][j];
      double p = sigmoid(s);
      double r = p - (y[i] ? 1.0 : 0.0);
      double q = std::max(p * (1.0 - p), 1e-12);
      for (size_t j = 0; j < d; ++j) grad[j] += r * x[i][j];
      grad[d] += r;
      for (size_t j = 0; j < m; ++j) {
        double xj = j < d ? x[i][j] : 1.0;
        double qj = q * xj;
        for (size_t k = 0; k <= j; ++k) {
          double xk = k < d ? x[i][k] : 1.0;
          hess[j * m + k] += qj * xk;
        }
      }
    }
    for (size_t j = 0; j < d; ++j) {
      grad[j] += l2 * w[j];
      hess[j * m + j] += l2;
    }
    for (size_t j = 0; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) hess[j * m + k] = hess[k * m + j];

    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, std::abs(g));
    if (gmax < 1e-9) break;

    auto delta = solve_spd(std::move(hess), grad, m);
    double current = binary_loss(x, y, w, l2);
    double step = 1.0;
    std::vector<double> trial(m);
    for (int half = 0; half < 30; ++half) {
      for (size_t j = 0; j < m; ++j) trial[j] = w[j] - step * delta[j];
      if (binary_loss(x, y, trial, l2) <= current) break;
      step *= 0.5;
    }
    for (size_t j = 0; j < m; ++j) w[j] -= step * delta[j];
  }
  return w;
}

}  // namespace

LogisticClassifier LogisticClassifier::train(const std::vector<std::vector<double>>& features,
                                             const std::vector<int>& labels, double l2) {
  if (features.empty() || features.size() != labels.size())
    throw std::invalid_argument("LogisticClassifier: empty or mismatched training data");
  if (l2 < 0) throw std::invalid_argument("LogisticClassifier: l2 must be >= 0");
  const size_t d = features[0].size();
  for (const auto& f : features) {
    if (f.size() != d)
      throw std::invalid_argument("LogisticClassifier: inconsistent feature dimensions");
  }
  int num_classes = 0;
  for (int label : labels) {
    if (label < 0) throw std::invalid_argument("LogisticClassifier: negative label");
    num_classes = std::max(num_classes, label + 1);
  }
  std::vector<std::int64_t> support(static_cast<size_t>(num_classes), 0);
  for (int label : labels) support[static_cast<size_t>(label)]++;
  if (std::count_if(support.begin(), support.end(), [](std::int64_t s) { return s > 0; }) < 2)
    throw std::invalid_argument("LogisticClassifier: need at least two classes");

  LogisticClassifier clf;
  clf.dim_ = static_cast<int>(d);
  clf.weights_.resize(static_cast<size_t>(num_classes));
  std::vector<char> y(labels.size());
  for (int c = 0; c < num_classes; ++c) {
    for (size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == c ? 1 : 0;
    clf.weights_[static_cast<size_t>(c)] = fit_binary(features, y, l2);
  }
  return clf;
}

double LogisticClassifier::decision(std::span<const double> x, int cls) const {
  const auto& w = weights_[static_cast<size_t>(cls)];
  double s = w[static_cast<size_t>(dim_)];
  for (int j = 0; j < dim_; ++j) s += w[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
  return s;
}

int LogisticClassifier::predict(std::span<const double> x) const {
  int best = 0;
  double best_score = decision(x, 0);
  for (int c = 1; c < num_classes(); ++c) {
    double s = decision(x, c);
    if (s > best_score) {
      best_score = s;
      best = c;
    }
  }
  return best;
}

std::vector<int> LogisticClassifier::predict(
    const std::vector<std::vector<double>>& features) const {
  std::vector<int> out;
  out.reserve(features.size());
  for (const auto& f : features) out.push_back(predict(f));
  return out;
}

ClassificationReport classification_report(std::span<const int> predictions,
                                           std::span<const int> gold) {
  if (predictions.size() != gold.size())
    throw std::invalid_argument("classification_report: length mismatch");
  if (predictions.empty()) throw std::invalid_argument("classification_report: empty input");

  int num_classes = 0;
  for (size_t i = 0; i < gold.size(); ++i)
    num_classes = std::max({num_classes, gold[i] + 1, predictions[i] + 1});

  ClassificationReport report;
  report.confusion.assign(static_cast<size_t>(num_classes),
                          std::vector<std::int64_t>(static_cast<size_t>(num_classes), 0));
  std::int64_t correct = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    report.confusion[static_cast<size_t>(gold[i])][static_cast<size_t>(predictions[i])]++;
    if (gold[i] == predictions[i]) correct++;
  }

  report.per_class.resize(static_cast<size_t>(num_classes));
  double f1_sum = 0.0;
  int f1_classes = 0;
  for (int c = 0; c < num_classes; ++c) {
    std::int64_t tp = report.confusion[static_cast<size_t>(c)][static_cast<size_t>(c)];
    std::int64_t pred_c = 0, gold_c = 0;
    for (int o = 0; o < num_classes; ++o) {
      pred_c += report.confusion[static_cast<size_t>(o)][static_cast<size_t>(c)];
      gold_c += report.confusion[static_cast<size_t>(c)][static_cast<size_t>(o)];
    }
    ClassStats& stats = report.per_class[static_cast<size_t>(c)];
    stats.support = gold_c;
    stats.precision = pred_c > 0 ? static_cast<double>(tp) / static_cast<double>(pred_c) : 0.0;
    stats.recall = gold_c > 0 ? static_cast<double>(tp) / static_cast<double>(gold_c) : 0.0;
    stats.f1 = (stats.precision + stats.recall) > 0
                   ? 2.0 * stats.precision * stats.recall / (stats.precision + stats.recall)
                   : 0.0;
    if (pred_c > 0 || gold_c > 0) {  // classes absent from both sides don't count
      f1_sum += stats.f1;
      f1_classes++;
    }
  }
  report.micro_f1 = static_cast<double>(correct) / static_cast<double>(gold.size());
  report.macro_f1 = f1_classes > 0 ? f1_sum / f1_classes : 0.0;
  return report;
}

std::string render_report(const ClassificationReport& report,
                          const std::vector<std::string>& label_names) {
  std::ostringstream out;
  char buf[128];
  std::int64_t total = 0;
  for (const auto& s : report.per_class) total += s.support;
  std::snprintf(buf, sizeof(buf), "micro_f1=%.6f\nmacro_f1=%.6f\nexamples=%lld\n",
                report.micro_f1, report.macro_f1, static_cast<long long>(total));
  out << buf;

  size_t name_width = 5;
  auto name_of = [&](size_t c) {
    return c < label_names.size() ? label_names[c] : std::to_string(c);
  };
  for (size_t c = 0; c < report.per_class.size(); ++c)
    name_width = std::max(name_width, name_of(c).size());

  std::snprintf(buf, sizeof(buf), "%-*s %9s %9s %9s %9s\n", static_cast<int>(name_width),
                "class", "precision", "recall", "f1", "support");
  out << buf;
  for (size_t c = 0; c < report.per_class.size(); ++c) {
    const auto& s = report.per_class[c];
    std::snprintf(buf, sizeof(buf), "%-*s %9.4f %9.4f %9.4f %9lld\n",
                  static_cast<int>(name_width), name_of(c).c_str(), s.precision, s.recall, s.f1,
                  static_cast<long long>(s.support));
    out << buf;
  }
  return out.str();
}

}  // namespace ise
