#pragma once

#include <cstddef>
#include <string>

#include "grf/features.hpp"
#include "grf/graph.hpp"

namespace grf {

/// Dense oracles are test equipment; refuse sizes where a dense solve is
/// no longer reasonable.
inline constexpr std::size_t kDefaultOracleLimit = 5000;

struct EstimateMeta {
  double sigma = 0.0;
  WalkConfig config;
  std::size_t total_walks = 0;
  std::size_t truncated_walks = 0;
  bool truncation_warning = false;
  bool two_ensemble_diagonal = false;
  double wall_seconds = 0.0;
};

/// A kernel matrix estimate together with how it was produced.
struct KernelEstimate {
  Matrix matrix;
  EstimateMeta meta;
};

/// (I + sigma^2 L~)^-d by repeated symmetric positive-definite solves.
Matrix exact_regularized_laplacian(const Graph& g, double sigma, int d,
                                   std::size_t oracle_limit = kDefaultOracleLimit);

/// exp(-L~ t) via dense symmetric eigendecomposition.
Matrix exact_heat_kernel(const Graph& g, double t,
                         std::size_t oracle_limit = kDefaultOracleLimit);

/// K = (1+sigma^2)^-2 Phi Phi^T. Unbiased off-diagonal; the diagonal uses
/// the same ensemble twice and is biased upward.
KernelEstimate estimate_k2(const FeatureMatrix& phi, double sigma);

/// Same, but diagonal entries come from the cross product of two
/// independently seeded ensembles, removing the diagonal bias.
KernelEstimate estimate_k2(const FeatureMatrix& phi,
                           const FeatureMatrix& phi_second, double sigma);

/// Estimator of (I + sigma^2 L~)^-d from the same features: the d=2
/// estimate multiplied by powers of (I + sigma^2 L~), solved for d > 2.
/// Result is symmetrized; unbiased off the diagonal.
KernelEstimate estimate_kd(const FeatureMatrix& phi, double sigma, int d,
                           const Matrix& laplacian);

/// ||exact - approx||_F^2 / ||exact||_F^2.
double relative_frobenius_error(const Matrix& exact, const Matrix& approx);

} // namespace grf
