#include "ise/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace ise {

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

double log_sigmoid(double x) {
  return x >= 0.0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

double learning_rate(std::int64_t t, std::int64_t total, double rho0) {
  double rho = rho0 * (1.0 - static_cast<double>(t) / static_cast<double>(total));
  double floor = rho0 * 1e-4;
  return rho < floor ? floor : rho;
}

namespace {

std::span<const double> anchor_row(const EmbeddingModel& model, const EdgeSample& s) {
  return s.kind == AnchorKind::context ? model.context(s.anchor) : model.identity(s.anchor);
}

std::span<double> anchor_row(EmbeddingModel& model, const EdgeSample& s) {
  return s.kind == AnchorKind::context ? model.context(s.anchor) : model.identity(s.anchor);
}

double dot(std::span<const double> u, std::span<const double> v) {
  double d = 0.0;
  for (size_t j = 0; j < u.size(); ++j) d += u[j] * v[j];
  return d;
}

}  // namespace

double edge_loss(const EmbeddingModel& model, const EdgeSample& sample) {
  auto a = anchor_row(model, sample);
  double loss = -log_sigmoid(dot(model.sense(sample.positive), a));
  for (int n : sample.negatives) loss -= log_sigmoid(-dot(model.sense(n), a));
  return loss;
}

EdgeGradients edge_gradients(const EmbeddingModel& model, const EdgeSample& sample) {
  auto a = anchor_row(model, sample);
  const int dim = model.dim();

  // Per-row coefficients; duplicates accumulate.
  std::vector<std::pair<int, double>> coeffs;
  coeffs.reserve(sample.negatives.size() + 1);
  auto add_coeff = [&](int row, double g) {
    for (auto& [r, c] : coeffs) {
      if (r == row) {
        c += g;
        return;
      }
    }
    coeffs.emplace_back(row, g);
  };

  add_coeff(sample.positive, sigmoid(dot(model.sense(sample.positive), a)) - 1.0);
  for (int n : sample.negatives) add_coeff(n, sigmoid(dot(model.sense(n), a)));

  EdgeGradients grads;
  grads.anchor.assign(static_cast<size_t>(dim), 0.0);
  for (const auto& [row, g] : coeffs) {
    std::vector<double> grad(static_cast<size_t>(dim));
    auto w = model.sense(row);
    for (int j = 0; j < dim; ++j) {
      grad[static_cast<size_t>(j)] = g * a[static_cast<size_t>(j)];
      grads.anchor[static_cast<size_t>(j)] += g * w[static_cast<size_t>(j)];
    }
    grads.sense_rows.emplace_back(row, std::move(grad));
  }
  return grads;
}

void sgd_update(EmbeddingModel& model, const EdgeSample& sample, double rho) {
  const int dim = model.dim();
  auto a = anchor_row(model, sample);

  thread_local std::vector<double> anchor_err;
  thread_local std::vector<double> gs;
  anchor_err.assign(static_cast<size_t>(dim), 0.0);
  gs.resize(sample.negatives.size() + 1);

  // All sigmoids and the anchor error are evaluated before any row moves, so
  // the step equals -rho times the simultaneous gradient.
  {
    auto w = model.sense(sample.positive);
    double g = sigmoid(dot(w, a)) - 1.0;
    gs[0] = g;
    for (int j = 0; j < dim; ++j)
      anchor_err[static_cast<size_t>(j)] += g * w[static_cast<size_t>(j)];
  }
  for (size_t k = 0; k < sample.negatives.size(); ++k) {
    auto w = model.sense(sample.negatives[k]);
    double g = sigmoid(dot(w, a));
    gs[k + 1] = g;
    for (int j = 0; j < dim; ++j)
      anchor_err[static_cast<size_t>(j)] += g * w[static_cast<size_t>(j)];
  }

  {
    auto w = model.sense(sample.positive);
    double step = rho * gs[0];
    for (int j = 0; j < dim; ++j) w[static_cast<size_t>(j)] -= step * a[static_cast<size_t>(j)];
  }
  for (size_t k = 0; k < sample.negatives.size(); ++k) {
    auto w = model.sense(sample.negatives[k]);
    double step = rho * gs[k + 1];
    for (int j = 0; j < dim; ++j) w[static_cast<size_t>(j)] -= step * a[static_cast<size_t>(j)];
  }
  auto a_mut = anchor_row(model, sample);
  for (int j = 0; j < dim; ++j)
    a_mut[static_cast<size_t>(j)] -= rho * anchor_err[static_cast<size_t>(j)];
}

namespace {

void validate(const TrainerConfig& config) {
  if (config.dim < 1) throw std::invalid_argument("train: dim must be >= 1");
  if (config.negatives < 0) throw std::invalid_argument("train: negatives must be >= 0");
  if (config.samples < 1) throw std::invalid_argument("train: samples must be >= 1");
  if (!(config.rho0 > 0)) throw std::invalid_argument("train: rho0 must be > 0");
  if (config.workers < 1) throw std::invalid_argument("train: workers must be >= 1");
}

std::vector<double> edge_weights(const BipartiteNetwork& net) {
  std::vector<double> w;
  w.reserve(net.edges.size());
  for (const auto& e : net.edges) w.push_back(e.weight);
  return w;
}

class Worker {
 public:
  Worker(EmbeddingModel& model, const BipartiteNetwork& wc, const BipartiteNetwork& wi,
         const AliasTable& wc_table, const AliasTable& wi_table, const AliasTable& noise,
         const TrainerConfig& config, std::atomic<std::int64_t>& counter, TrainStats& stats,
         int id)
      : model_(model),
        wc_(wc),
        wi_(wi),
        wc_table_(wc_table),
        wi_table_(wi_table),
        noise_(noise),
        config_(config),
        counter_(counter),
        stats_(stats),
        rng_(split_seed(config.seed, "train-worker-" + std::to_string(id))) {}

  void run(std::int64_t iterations) {
    EdgeSample sample;
    sample.negatives.reserve(static_cast<size_t>(config_.negatives));
    for (std::int64_t i = 0; i < iterations; ++i) {
      std::int64_t t = counter_.fetch_add(1, std::memory_order_relaxed);
      double rho = learning_rate(std::min(t, config_.samples), config_.samples, config_.rho0);
      step(wc_, wc_table_, AnchorKind::context, sample, rho);
      stats_.wc_updates.fetch_add(1, std::memory_order_relaxed);
      step(wi_, wi_table_, AnchorKind::identity, sample, rho);
      stats_.wi_updates.fetch_add(1, std::memory_order_relaxed);
    }
  }

 private:
  void step(const BipartiteNetwork& net, const AliasTable& table, AnchorKind kind,
            EdgeSample& sample, double rho) {
    const auto& edge = net.edges[static_cast<size_t>(table.sample(rng_))];
    sample.positive = edge.source;
    sample.anchor = edge.target;
    sample.kind = kind;
    sample.negatives.clear();
    for (int k = 0; k < config_.negatives; ++k) {
      for (int attempt = 0; attempt < 10; ++attempt) {
        int n = noise_.sample(rng_);
        if (n != sample.positive) {
          sample.negatives.push_back(n);
          break;
        }
      }
    }
    sgd_update(model_, sample, rho);
  }

  EmbeddingModel& model_;
  const BipartiteNetwork& wc_;
  const BipartiteNetwork& wi_;
  const AliasTable& wc_table_;
  const AliasTable& wi_table_;
  const AliasTable& noise_;
  const TrainerConfig& config_;
  std::atomic<std::int64_t>& counter_;
  TrainStats& stats_;
  Rng rng_;
};

}  // namespace

EmbeddingModel train(const BipartiteNetwork& word_context, const BipartiteNetwork& word_identity,
                     const SenseRegistry& registry, std::vector<std::string> tokens,
                     const TrainerConfig& config, TrainStats* stats) {
  validate(config);
  if (word_context.edges.empty()) throw std::invalid_argument("train: empty word-context network");
  if (word_identity.edges.empty())
    throw std::invalid_argument("train: empty word-identity network");
  if (registry.size() == 0) throw std::invalid_argument("train: empty sense registry");

  EmbeddingModel model(registry, std::move(tokens), registry.num_identities(), config.dim);

  Rng init_rng(split_seed(config.seed, "init"));
  const double inv_dim = 1.0 / config.dim;
  for (auto& v : model.sense_table()) v = (init_rng.uniform() - 0.5) * inv_dim;
  for (auto& v : model.context_table()) v = (init_rng.uniform() - 0.5) * inv_dim;
  // identity rows stay zero

  AliasTable wc_table{edge_weights(word_context)};
  AliasTable wi_table{edge_weights(word_identity)};
  AliasTable noise = build_noise_table(registry.frequencies());

  std::atomic<std::int64_t> counter{0};
  TrainStats local_stats;
  TrainStats& st = stats ? *stats : local_stats;

  if (config.workers == 1) {
    Worker worker(model, word_context, word_identity, wc_table, wi_table, noise, config, counter,
                  st, 0);
    worker.run(config.samples);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(config.workers));
    std::int64_t base = config.samples / config.workers;
    std::int64_t extra = config.samples % config.workers;
    for (int id = 0; id < config.workers; ++id) {
      std::int64_t iterations = base + (id < extra ? 1 : 0);
      threads.emplace_back([&, id, iterations] {
        Worker worker(model, word_context, word_identity, wc_table, wi_table, noise, config,
                      counter, st, id);
        worker.run(iterations);
      });
    }
    for (auto& th : threads) th.join();
  }
  return model;
}

std::vector<double> evaluate_softmax(const EmbeddingModel& model, int anchor, AnchorKind kind) {
  auto a = kind == AnchorKind::context ? model.context(anchor) : model.identity(anchor);
  const int n = model.num_senses();
  std::vector<double> scores(static_cast<size_t>(n));
  double max_score = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < n; ++r) {
    scores[static_cast<size_t>(r)] = dot(model.sense(r), a);
    max_score = std::max(max_score, scores[static_cast<size_t>(r)]);
  }
  double total = 0.0;
  for (auto& s : scores) {
    s = std::exp(s - max_score);
    total += s;
  }
  for (auto& s : scores) s /= total;
  return scores;
}

}  // namespace ise
