#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace grf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

using NodeId = std::uint32_t;

struct Edge {
  NodeId to;
  double weight;
};

/// Immutable undirected weighted graph in adjacency-list form.
///
/// Invariants enforced at construction: every edge is stored in both
/// endpoint lists with the same weight, no self-loops, all weights finite,
/// every node has degree >= 1, and each node's list is sorted by neighbor
/// index (so a given uniform draw always maps to the same transition).
class Graph {
 public:
  using EdgeTriple = std::tuple<NodeId, NodeId, double>;

  /// Builds a graph over nodes 0..n-1 from undirected edge triples.
  /// Duplicate edges collapse if their weights agree and are an error
  /// otherwise. Throws std::invalid_argument on any invariant violation.
  static Graph from_edges(std::size_t n, const std::vector<EdgeTriple>& edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Edge>& neighbors(NodeId v) const { return adj_[v]; }
  std::size_t degree(NodeId v) const { return adj_[v].size(); }
  double weighted_degree(NodeId v) const { return wdeg_[v]; }

  /// Weight of edge (u,v); throws if the edge is absent.
  double edge_weight(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;

  /// Per-node cumulative weight sums over the sorted neighbor list,
  /// used for weight-proportional transition sampling. Requires all
  /// weights strictly positive (checked lazily on first use).
  const std::vector<double>& cumulative_weights(NodeId v) const;

  bool all_weights_positive() const { return min_weight_ > 0.0; }
  double min_weight() const { return min_weight_; }

  /// Dense symmetric weight matrix W (test/oracle use).
  Matrix weight_matrix() const;

  /// Same topology, edge (u,v) reweighted by f(u, v, w). Used to walk on
  /// derived weighted adjacencies.
  Graph reweighted(const std::function<double(NodeId, NodeId, double)>& f) const;

 private:
  Graph() = default;

  std::vector<std::vector<Edge>> adj_;
  std::vector<double> wdeg_;
  std::vector<std::vector<double>> cumw_;
  std::size_t edge_count_ = 0;
  double min_weight_ = 0.0;
};

/// Parses `u v [w]` lines (0-indexed, default weight 1, `#` comments).
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Erdos-Renyi G(n, p_edge), unit weights, resampled (up to max_retries)
/// until no node is isolated so the min-degree invariant holds. The retry
/// count is written to *retries_out when given.
Graph generate_er(std::size_t n, double p_edge, std::uint64_t seed,
                  int* retries_out = nullptr, int max_retries = 100);

enum class StructuredKind { Path, Ladder, BinaryTree, Complete };

/// Standard unweighted topologies. `size` is the node count for Path and
/// Complete, the rung count for Ladder (2*size nodes), and the depth for
/// BinaryTree (2^(size+1)-1 nodes).
Graph generate_structured(StructuredKind kind, std::size_t size);

/// Symmetrically normalized Laplacian: unit diagonal,
/// -W_ij / sqrt(deg_W(i) deg_W(j)) off-diagonal for i~j.
Matrix normalized_laplacian(const Graph& g);

/// Weighted adjacency U_ij = sigma^2/(1+sigma^2) * W_ij / sqrt(deg_W(i) deg_W(j)),
/// zero diagonal, spectral radius < 1 for sigma in (0,1).
Matrix grf_adjacency(const Graph& g, double sigma);

/// Graph with the same edges as g but weights equal to grf_adjacency(g, sigma)
/// entries; the topology random walks run on when estimating (I-U)^-2.
Graph grf_walk_graph(const Graph& g, double sigma);

/// |lambda|_max of a symmetric matrix by power iteration from a seeded
/// deterministic start vector. Throws on non-convergence.
double spectral_radius(const Matrix& m, double tol = 1e-10,
                       int max_iters = 10000);

} // namespace grf
