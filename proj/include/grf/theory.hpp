#pragma once

#include <optional>
#include <vector>

#include "grf/coupling.hpp"
#include "grf/graph.hpp"

namespace grf::theory {

/// Parameter bundle for the closed-form variance-structure matrices.
/// `lambdas` are adjacency eigenvalues; `w` is the uniform edge weight, so
/// the geometric series below converge iff w*|lambda|_max < 1.
struct TheoryParams {
  double p = 0.5;
  std::optional<double> delta; // TRV offset; absent means antithetic (1/2)
  double w = 0.1;
  int d_reg = 2;
  std::vector<double> lambdas;

  /// c = (1-2p)/(1-p)^2, the survival-correlation constant of an
  /// antithetic pair. Lies in [0,1) for p in (0,1/2].
  double c() const;

  void validate() const;
};

/// P(len2 = i | len1 = m) for an antithetic pair. Simultaneous termination
/// is impossible, so the i = m branch is exactly zero.
double conditional_length_pmf(double p, int m, int i);

/// E[len2 | len1 = m] = (1-2p)/p + 2((1-2p)/(1-p))^m.
double conditional_expected_length(double p, int m);

/// E[len] = (1-p)/p for a single walker.
double marginal_expected_length(double p);

/// Probability that two walks out of one node of a d-regular graph contain
/// two specific subwalks of lengths m and n. `delta` is only read for
/// OffsetEnsemble and must sit in [p(1-p), 1-p]; for delta >= p the law
/// saturates at the antithetic one.
double joint_subwalk_prob(double p, int d_reg, int m, int n, SchemeKind kind,
                          double delta = 0.5);

/// The variance-structure matrices over eigenvalue pairs (p,q):
///   C  : both pairs of walkers i.i.d.
///   D  : antithetic pair, D = C * c(1-ll)/(1-c*ll) with ll = w^2 l_p l_q
///   Dd : offset-delta analogue of D (equals C at delta = p(1-p))
///   E  = C.*D - C.*C   (one pair antithetic)       -- negative semidefinite
///   F  = D.*D - C.*C   (both pairs antithetic)
///   J  = ((1-ll)/((1-wl_p)(1-wl_q))) .* (D - C)    (three-walk terms)
struct CorrelationMatrices {
  Matrix C, D, D_delta, E, F, J;
};

CorrelationMatrices correlation_matrices(const TheoryParams& params);

struct DefinitenessResult {
  bool negative_semidefinite;
  double lambda_max;
};

/// lambda_max(m) <= tol test via dense symmetric eigendecomposition.
DefinitenessResult check_negative_semidefinite(const Matrix& m, double tol);

} // namespace grf::theory
