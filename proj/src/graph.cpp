#include "grf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "grf/rng.hpp"

namespace grf {

Graph Graph::from_edges(std::size_t n, const std::vector<EdgeTriple>& edges) {
  if (n == 0) throw std::invalid_argument("graph must have at least one node");

  // Keyed map catches duplicates (same pair, conflicting weight).
  std::map<std::pair<NodeId, NodeId>, double> unique;
  for (const auto& [u, v, w] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (!std::isfinite(w)) throw std::invalid_argument("edge weight not finite");
    const auto key = std::minmax(u, v);
    auto [it, inserted] = unique.emplace(key, w);
    if (!inserted && it->second != w)
      throw std::invalid_argument("duplicate edge with conflicting weight");
  }

  Graph g;
  g.adj_.resize(n);
  g.min_weight_ = std::numeric_limits<double>::infinity();
  for (const auto& [key, w] : unique) {
    g.adj_[key.first].push_back({key.second, w});
    g.adj_[key.second].push_back({key.first, w});
    g.min_weight_ = std::min(g.min_weight_, w);
  }
  g.edge_count_ = unique.size();

  g.wdeg_.resize(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    auto& nbrs = g.adj_[v];
    if (nbrs.empty())
      throw std::invalid_argument("isolated node " + std::to_string(v));
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Edge& a, const Edge& b) { return a.to < b.to; });
    double d = 0.0;
    for (const Edge& e : nbrs) d += e.weight;
    g.wdeg_[v] = d;
  }
  g.cumw_.resize(n);
  return g;
}

double Graph::edge_weight(NodeId u, NodeId v) const {
  const auto& nbrs = adj_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Edge& e, NodeId x) { return e.to < x; });
  if (it == nbrs.end() || it->to != v)
    throw std::invalid_argument("no edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  return it->weight;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& nbrs = adj_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const Edge& e, NodeId x) { return e.to < x; });
  return it != nbrs.end() && it->to == v;
}

const std::vector<double>& Graph::cumulative_weights(NodeId v) const {
  auto& cw = const_cast<Graph*>(this)->cumw_[v];
  if (cw.empty()) {
    if (min_weight_ <= 0.0)
      throw std::invalid_argument(
          "weight-proportional sampling requires strictly positive weights");
    cw.reserve(adj_[v].size());
    double acc = 0.0;
    for (const Edge& e : adj_[v]) {
      acc += e.weight;
      cw.push_back(acc);
    }
  }
  return cw;
}

Matrix Graph::weight_matrix() const {
  const auto n = static_cast<Eigen::Index>(size());
  Matrix w = Matrix::Zero(n, n);
  for (NodeId v = 0; v < size(); ++v)
    for (const Edge& e : adj_[v]) w(v, e.to) = e.weight;
  return w;
}

Graph Graph::reweighted(
    const std::function<double(NodeId, NodeId, double)>& f) const {
  std::vector<EdgeTriple> edges;
  edges.reserve(edge_count_);
  for (NodeId v = 0; v < size(); ++v)
    for (const Edge& e : adj_[v])
      if (v < e.to) edges.emplace_back(v, e.to, f(v, e.to, e.weight));
  return from_edges(size(), edges);
}

Graph load_edge_list(std::istream& in) {
  std::vector<Graph::EdgeTriple> edges;
  NodeId max_node = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    double w = 1.0;
    if (!(ls >> u >> v))
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected `u v [w]`");
    ls >> w; // optional
    if (u < 0 || v < 0)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": negative node index");
    if (u == v)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": self-loop");
    edges.emplace_back(NodeId(u), NodeId(v), w);
    max_node = std::max({max_node, NodeId(u), NodeId(v)});
  }
  if (edges.empty()) throw std::invalid_argument("edge list has no edges");
  return Graph::from_edges(max_node + 1, edges);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return load_edge_list(in);
}

Graph generate_er(std::size_t n, double p_edge, std::uint64_t seed,
                  int* retries_out, int max_retries) {
  if (!(p_edge >= 0.0 && p_edge <= 1.0))
    throw std::invalid_argument("p_edge must lie in [0,1]");
  if (n < 2) throw std::invalid_argument("ER graph needs at least 2 nodes");

  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Graph::EdgeTriple> edges;
    std::vector<bool> touched(n, false);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        const double u =
            rng::uniform(seed, i, j, std::uint32_t(attempt), rng::Tag::ErEdge);
        if (u < p_edge) {
          edges.emplace_back(i, j, 1.0);
          touched[i] = touched[j] = true;
        }
      }
    }
    if (std::all_of(touched.begin(), touched.end(), [](bool b) { return b; })) {
      if (retries_out) *retries_out = attempt;
      return Graph::from_edges(n, edges);
    }
  }
  throw std::runtime_error(
      "ER generation left isolated nodes after max retries; p_edge too small");
}

Graph generate_structured(StructuredKind kind, std::size_t size) {
  if (size == 0) throw std::invalid_argument("size must be >= 1");
  std::vector<Graph::EdgeTriple> edges;
  std::size_t n = 0;
  switch (kind) {
    case StructuredKind::Path:
      if (size < 2) throw std::invalid_argument("path needs >= 2 nodes");
      n = size;
      for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, 1.0);
      break;
    case StructuredKind::Ladder: {
      // Two rails of `size` nodes joined by rungs.
      if (size < 2) throw std::invalid_argument("ladder needs >= 2 rungs");
      n = 2 * size;
      const NodeId r = NodeId(size);
      for (NodeId i = 0; i + 1 < r; ++i) {
        edges.emplace_back(i, i + 1, 1.0);
        edges.emplace_back(r + i, r + i + 1, 1.0);
      }
      for (NodeId i = 0; i < r; ++i) edges.emplace_back(i, r + i, 1.0);
      break;
    }
    case StructuredKind::BinaryTree: {
      // `size` is the depth; a full tree has 2^(depth+1)-1 nodes.
      n = (std::size_t(1) << (size + 1)) - 1;
      for (NodeId v = 0; 2 * std::size_t(v) + 2 < n + 1; ++v) {
        edges.emplace_back(v, 2 * v + 1, 1.0);
        if (2 * std::size_t(v) + 2 < n) edges.emplace_back(v, 2 * v + 2, 1.0);
      }
      break;
    }
    case StructuredKind::Complete:
      if (size < 2) throw std::invalid_argument("complete graph needs >= 2 nodes");
      n = size;
      for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j, 1.0);
      break;
  }
  return Graph::from_edges(n, edges);
}

Matrix normalized_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  for (NodeId v = 0; v < g.size(); ++v)
    if (!(g.weighted_degree(v) > 0.0))
      throw std::invalid_argument("zero weighted degree at node " +
                                  std::to_string(v));
  Matrix lap = Matrix::Identity(n, n);
  for (NodeId v = 0; v < g.size(); ++v)
    for (const Edge& e : g.neighbors(v))
      lap(v, e.to) = -e.weight / std::sqrt(g.weighted_degree(v) *
                                           g.weighted_degree(e.to));
  return lap;
}

Matrix grf_adjacency(const Graph& g, double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0))
    throw std::invalid_argument("sigma must lie in (0,1)");
  const double scale = sigma * sigma / (1.0 + sigma * sigma);
  const auto n = static_cast<Eigen::Index>(g.size());
  Matrix u = Matrix::Zero(n, n);
  for (NodeId v = 0; v < g.size(); ++v)
    for (const Edge& e : g.neighbors(v))
      u(v, e.to) = scale * e.weight / std::sqrt(g.weighted_degree(v) *
                                                g.weighted_degree(e.to));
  return u;
}

Graph grf_walk_graph(const Graph& g, double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0))
    throw std::invalid_argument("sigma must lie in (0,1)");
  const double scale = sigma * sigma / (1.0 + sigma * sigma);
  return g.reweighted([&](NodeId u, NodeId v, double w) {
    return scale * w /
           std::sqrt(g.weighted_degree(u) * g.weighted_degree(v));
  });
}

double spectral_radius(const Matrix& m, double tol, int max_iters) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const auto n = m.rows();
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = rng::uniform(0x9e3779b97f4a7c15ull, std::uint32_t(i), 0, 0,
                        rng::Tag::PowerStart) -
           0.5;
  v.normalize();

  double est = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Vector w = m * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    const double next = norm;
    w /= norm;
    if (std::abs(next - est) <= tol * std::max(1.0, std::abs(next)) && it > 0)
      return next;
    est = next;
    v = std::move(w);
  }
  throw std::runtime_error("power iteration did not converge");
}

} // namespace grf
