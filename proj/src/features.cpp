#include "grf/features.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace grf {

const char* strategy_name(Strategy s) {
  return s == Strategy::UniformNeighbor ? "uniform" : "weight";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "uniform") return Strategy::UniformNeighbor;
  if (name == "weight") return Strategy::WeightProportional;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::size_t WalkConfig::resolved_max_steps() const {
  if (max_steps > 0) return max_steps;
  // Smallest cap with geometric tail mass (1-p)^cap below 1e-12.
  const double cap = std::ceil(-12.0 * std::log(10.0) / std::log1p(-p));
  return static_cast<std::size_t>(cap);
}

void WalkConfig::validate(const Graph& g) const {
  scheme.validate(p, m);
  if (resolved_max_steps() < 1)
    throw std::invalid_argument("max_steps must be >= 1");
  if (strategy == Strategy::WeightProportional && !g.all_weights_positive())
    throw std::invalid_argument(
        "weight-proportional sampling requires strictly positive weights");
}

double FeatureVector::dot(const FeatureVector& other) const {
  double acc = 0.0;
  auto a = loads.begin();
  auto b = other.loads.begin();
  while (a != loads.end() && b != other.loads.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      acc += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return acc;
}

double FeatureVector::load_at(NodeId node) const {
  auto it = std::lower_bound(
      loads.begin(), loads.end(), node,
      [](const std::pair<NodeId, double>& e, NodeId x) { return e.first < x; });
  return (it != loads.end() && it->first == node) ? it->second : 0.0;
}

NodeId step_transition(const Graph& g, NodeId from, double u,
                       Strategy strategy) {
  const auto& nbrs = g.neighbors(from);
  if (strategy == Strategy::UniformNeighbor) {
    auto idx = static_cast<std::size_t>(u * double(nbrs.size()));
    if (idx >= nbrs.size()) idx = nbrs.size() - 1;
    return nbrs[idx].to;
  }
  const auto& cum = g.cumulative_weights(from);
  const double target = u * g.weighted_degree(from);
  auto it = std::upper_bound(cum.begin(), cum.end(), target);
  auto idx = static_cast<std::size_t>(it - cum.begin());
  if (idx >= nbrs.size()) idx = nbrs.size() - 1;
  return nbrs[idx].to;
}

double prefix_load_multiplier(const Graph& g, NodeId from, NodeId to, double p,
                              Strategy strategy) {
  const double w = g.edge_weight(from, to);
  if (strategy == Strategy::UniformNeighbor)
    return w * double(g.degree(from)) / (1.0 - p);
  return g.weighted_degree(from) / (1.0 - p);
}

FeatureVector build_feature(const Graph& g, NodeId i, const WalkConfig& config,
                            WalkStats* stats) {
  config.validate(g);
  if (i >= g.size()) throw std::invalid_argument("source node out of range");

  const TrvStream trvs(config.scheme, config.m, config.seed, i);
  const std::size_t cap = config.resolved_max_steps();

  std::vector<std::pair<NodeId, double>> deposits;
  deposits.reserve(config.m * 4);
  std::size_t truncated = 0;

  for (std::size_t k = 0; k < config.m; ++k) {
    const auto walk = sample_walk(
        g, i, config.p, cap, config.strategy,
        [&](std::uint32_t step) { return trvs.trv(k, step); },
        [&](std::uint32_t step) {
          return rng::uniform(config.seed, i, std::uint32_t(k), step,
                              rng::Tag::Direction);
        });
    if (walk.truncated) ++truncated;

    double load = 1.0;
    deposits.emplace_back(i, 1.0);
    for (std::size_t t = 1; t < walk.nodes.size(); ++t) {
      load *= prefix_load_multiplier(g, walk.nodes[t - 1], walk.nodes[t],
                                     config.p, config.strategy);
      deposits.emplace_back(walk.nodes[t], load);
    }
  }

  // Stable sort keeps deposit order within a node, so the summation order
  // (and hence the rounded result) does not depend on anything but the
  // config.
  std::stable_sort(deposits.begin(), deposits.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  FeatureVector fv;
  fv.source = i;
  const double inv_m = 1.0 / double(config.m);
  for (std::size_t idx = 0; idx < deposits.size();) {
    const NodeId node = deposits[idx].first;
    double acc = 0.0;
    while (idx < deposits.size() && deposits[idx].first == node)
      acc += deposits[idx++].second;
    fv.loads.emplace_back(node, acc * inv_m);
  }

  if (stats) {
    stats->total_walks += config.m;
    stats->truncated_walks += truncated;
  }
  return fv;
}

FeatureMatrix build_feature_matrix(const Graph& g, const WalkConfig& config,
                                   std::size_t threads) {
  config.validate(g);
  const std::size_t n = g.size();
  FeatureMatrix fm;
  fm.config = config;
  fm.rows.resize(n);

  std::vector<WalkStats> per_row(n);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      fm.rows[i] = build_feature(g, NodeId(i), config, &per_row[i]);
  };

  if (threads <= 1 || n < 2) {
    run_range(0, n);
  } else {
    const std::size_t nthreads = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& s : per_row) {
    fm.stats.total_walks += s.total_walks;
    fm.stats.truncated_walks += s.truncated_walks;
  }
  return fm;
}

double estimate_diagonal(const Graph& g, NodeId i, const WalkConfig& config) {
  WalkConfig first = config;
  WalkConfig second = config;
  first.seed = rng::derive_seed(config.seed, 1, 0xd1a6u);
  second.seed = rng::derive_seed(config.seed, 2, 0xd1a6u);
  const FeatureVector a = build_feature(g, i, first);
  const FeatureVector b = build_feature(g, i, second);
  return a.dot(b);
}

void write_feature_matrix(std::ostream& out, const FeatureMatrix& fm) {
  out << "# rows=" << fm.rows.size() << " m=" << fm.config.m
      << " p=" << fm.config.p << " scheme=" << fm.config.scheme.name()
      << " strategy=" << strategy_name(fm.config.strategy)
      << " seed=" << fm.config.seed << "\n";
  out << "row,node,load\n";
  char buf[64];
  for (const auto& row : fm.rows) {
    for (const auto& [node, load] : row.loads) {
      std::snprintf(buf, sizeof(buf), "%.17g", load);
      out << row.source << ',' << node << ',' << buf << '\n';
    }
  }
}

} // namespace grf
