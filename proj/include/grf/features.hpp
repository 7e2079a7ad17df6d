#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "grf/coupling.hpp"
#include "grf/graph.hpp"

namespace grf {

enum class Strategy { UniformNeighbor, WeightProportional };

const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

/// Random-walk ensemble configuration for one feature matrix.
struct WalkConfig {
  std::size_t m = 2;  // walks per node
  double p = 0.5;     // per-step termination probability
  CouplingScheme scheme{};
  Strategy strategy = Strategy::UniformNeighbor;
  std::size_t max_steps = 0; // 0: derived so P(truncation) < 1e-12
  std::uint64_t seed = 0;
  double truncation_warn_threshold = 1e-6;

  std::size_t resolved_max_steps() const;
  void validate(const Graph& g) const;
};

/// Sparse per-node random feature: accumulated walk loads keyed by the
/// visited node, sorted by node index. The source entry is always present
/// (every walk deposits its unit length-0 load there).
struct FeatureVector {
  NodeId source = 0;
  std::vector<std::pair<NodeId, double>> loads;

  double dot(const FeatureVector& other) const;
  double load_at(NodeId node) const;
};

struct WalkStats {
  std::size_t total_walks = 0;
  std::size_t truncated_walks = 0;
  double truncation_rate() const {
    return total_walks ? double(truncated_walks) / double(total_walks) : 0.0;
  }
};

/// One FeatureVector per node, all built under a single WalkConfig.
struct FeatureMatrix {
  std::vector<FeatureVector> rows;
  WalkConfig config;
  WalkStats stats;

  std::size_t size() const { return rows.size(); }
  bool truncation_warning() const {
    return stats.truncation_rate() > config.truncation_warn_threshold;
  }
};

/// Neighbor chosen by one uniform draw in [0,1): uniform over the sorted
/// neighbor list, or proportional to edge weight.
NodeId step_transition(const Graph& g, NodeId from, double u, Strategy strategy);

struct WalkResult {
  std::vector<NodeId> nodes; // starts at the source; length = steps taken
  bool truncated = false;
};

/// Walks from `start`, terminating when the step's TRV falls below p or at
/// max_steps. `trv_at` and `direction_at` map a step index to a uniform;
/// both are pure so the walk is reproducible.
template <class TrvFn, class DirFn>
WalkResult sample_walk(const Graph& g, NodeId start, double p,
                       std::size_t max_steps, Strategy strategy, TrvFn&& trv_at,
                       DirFn&& direction_at) {
  WalkResult out;
  out.nodes.push_back(start);
  NodeId cur = start;
  for (std::uint32_t step = 0;; ++step) {
    if (out.nodes.size() - 1 >= max_steps) {
      out.truncated = true;
      return out;
    }
    if (trv_at(step) < p) return out;
    cur = step_transition(g, cur, direction_at(step), strategy);
    out.nodes.push_back(cur);
  }
}

/// Per-step load multiplier: the traversed edge weight divided by the
/// probability of surviving and taking that edge. Uniform sampling gives
/// w(from,to)*deg(from)/(1-p); weight-proportional transition probabilities
/// cancel the edge weight, leaving deg_W(from)/(1-p).
double prefix_load_multiplier(const Graph& g, NodeId from, NodeId to, double p,
                              Strategy strategy);

/// Runs config.m walks out of node i and averages their deposited loads.
/// Dot products of these features estimate (I-U)^-2 entries of the walked
/// graph's weighted adjacency without bias (off-diagonal).
FeatureVector build_feature(const Graph& g, NodeId i, const WalkConfig& config,
                            WalkStats* stats = nullptr);

/// All rows under one config. `threads` > 1 computes rows concurrently;
/// the result is bit-identical to the serial build.
FeatureMatrix build_feature_matrix(const Graph& g, const WalkConfig& config,
                                   std::size_t threads = 1);

/// Unbiased diagonal estimate phi1(i)^T phi2(i) from two independently
/// seeded ensembles (the same-ensemble product is biased upward).
double estimate_diagonal(const Graph& g, NodeId i, const WalkConfig& config);

/// Columnar serialization (row, node, load) with a config header line.
void write_feature_matrix(std::ostream& out, const FeatureMatrix& fm);

} // namespace grf
