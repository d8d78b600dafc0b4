#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "ise/alias.hpp"
#include "ise/model.hpp"
#include "ise/network.hpp"

namespace ise {

double sigmoid(double x);

// log(sigmoid(x)), finite for all finite x.
double log_sigmoid(double x);

// Linear decay with a floor: max(rho0 * (1 - t/T), rho0 * 1e-4).
double learning_rate(std::int64_t t, std::int64_t total, double rho0);

struct TrainerConfig {
  int dim = 100;
  int negatives = 5;
  std::int64_t samples = 1000000;  // T: training iterations; each draws one
                                   // edge from each network (2T edge samples)
  double rho0 = 0.025;
  int window = 5;
  std::uint64_t seed = 1;
  int workers = 1;
};

enum class AnchorKind { context, identity };

// One sampled positive edge with its negative sense rows: the unit of work of
// a single SGD step. The anchor is the conditioning-side row (c_k or i_k).
struct EdgeSample {
  int positive;                // sense row
  int anchor;                  // context word id or identity id
  AnchorKind kind;
  std::vector<int> negatives;  // sense rows drawn from the noise table
};

// Negative-sampling loss of one edge:
//   -[ log s(w_pos . a) + sum_n log s(-w_n . a) ]
double edge_loss(const EmbeddingModel& model, const EdgeSample& sample);

// Analytic gradients of edge_loss with respect to every touched row.
// Duplicate negative rows are aggregated.
struct EdgeGradients {
  std::vector<std::pair<int, std::vector<double>>> sense_rows;  // (row, d/d w_row)
  std::vector<double> anchor;                                   // d/d anchor row
};
EdgeGradients edge_gradients(const EmbeddingModel& model, const EdgeSample& sample);

// One descent step: row -= rho * gradient, all sigmoids evaluated at the
// parameter values before any row is touched.
void sgd_update(EmbeddingModel& model, const EdgeSample& sample, double rho);

struct TrainStats {
  std::atomic<std::int64_t> wc_updates{0};
  std::atomic<std::int64_t> wi_updates{0};
};

// Alternating edge-sampling training over the two networks. Each of the T
// iterations draws one word-context edge and one word-identity edge, both
// with probability proportional to weight, and applies a negative-sampled
// update. Sense and context rows start uniform in [-0.5/d, 0.5/d], identity
// rows at zero. Single-worker runs with a fixed seed are bitwise
// deterministic; multi-worker runs use lock-free shared updates.
EmbeddingModel train(const BipartiteNetwork& word_context, const BipartiteNetwork& word_identity,
                     const SenseRegistry& registry, std::vector<std::string> tokens,
                     const TrainerConfig& config, TrainStats* stats = nullptr);

// Full softmax over sense rows conditioned on an anchor row (diagnostic;
// training never materializes this).
std::vector<double> evaluate_softmax(const EmbeddingModel& model, int anchor, AnchorKind kind);

}  // namespace ise
