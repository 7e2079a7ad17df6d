#include "grf/theory.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace grf::theory {

double TheoryParams::c() const {
  return (1.0 - 2.0 * p) / ((1.0 - p) * (1.0 - p));
}

void TheoryParams::validate() const {
  if (!(p > 0.0 && p <= 0.5))
    throw std::invalid_argument("theory params need p in (0,1/2]");
  if (lambdas.empty()) throw std::invalid_argument("eigenvalue list empty");
  double lmax = 0.0;
  for (double l : lambdas) lmax = std::max(lmax, std::abs(l));
  if (!(w * lmax < 1.0))
    throw std::invalid_argument("need w*|lambda|_max < 1 for convergence");
  if (delta) {
    if (*delta < p * (1.0 - p) - 1e-12 || *delta > 1.0 - p + 1e-12)
      throw std::invalid_argument("delta outside [p(1-p), 1-p]");
  }
}

double conditional_length_pmf(double p, int m, int i) {
  if (!(p > 0.0 && p <= 0.5))
    throw std::invalid_argument("pmf needs p in (0,1/2]");
  if (m < 0 || i < 0) throw std::invalid_argument("lengths must be >= 0");
  const double q = 1.0 - p;
  const double r = (1.0 - 2.0 * p) / q;
  if (i < m) return std::pow(r, i) * p / q;
  if (i == m) return 0.0;
  return std::pow(r, m) * std::pow(q, i - m - 1) * p;
}

double conditional_expected_length(double p, int m) {
  if (!(p > 0.0 && p <= 0.5))
    throw std::invalid_argument("needs p in (0,1/2]");
  if (m < 0) throw std::invalid_argument("length must be >= 0");
  const double r = (1.0 - 2.0 * p) / (1.0 - p);
  return (1.0 - 2.0 * p) / p + 2.0 * std::pow(r, m);
}

double marginal_expected_length(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("needs p in (0,1)");
  return (1.0 - p) / p;
}

double joint_subwalk_prob(double p, int d_reg, int m, int n, SchemeKind kind,
                          double delta) {
  if (m < 0 || n < 0) throw std::invalid_argument("subwalk lengths >= 0");
  if (d_reg < 1) throw std::invalid_argument("degree must be >= 1");
  const double q = 1.0 - p;
  const double dpow = std::pow(double(d_reg), double(m + n));

  if (kind == SchemeKind::Iid) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p in (0,1)");
    return std::pow(q, m + n) / dpow;
  }

  if (!(p > 0.0 && p <= 0.5))
    throw std::invalid_argument("coupled schemes need p in (0,1/2]");
  // Joint per-step survival of the pair: 1-2p for any offset in [p, 1-p]
  // (antithetic included), 1-p-delta below p.
  double ss = 1.0 - 2.0 * p;
  if (kind == SchemeKind::OffsetEnsemble) {
    if (delta < p * q - 1e-12 || delta > q + 1e-12)
      throw std::invalid_argument("delta outside [p(1-p), 1-p]");
    ss = 1.0 - 2.0 * p + std::max(p - delta, 0.0);
  }
  const int lo = std::min(m, n), hi = std::max(m, n);
  if (m == n) return std::pow(ss, m) / dpow;
  return std::pow(ss / q, lo) * std::pow(q, hi) / dpow;
}

CorrelationMatrices correlation_matrices(const TheoryParams& params) {
  params.validate();
  const auto n = static_cast<Eigen::Index>(params.lambdas.size());
  const double p = params.p, w = params.w;
  const double c = params.c();
  // Offset analogue of c; saturates at c for delta >= p.
  const double delta = params.delta.value_or(0.5);
  const double c_delta =
      (1.0 - 2.0 * p + std::max(p - delta, 0.0)) / ((1.0 - p) * (1.0 - p));

  CorrelationMatrices out;
  out.C = Matrix(n, n);
  out.D = Matrix(n, n);
  out.D_delta = Matrix(n, n);
  out.E = Matrix(n, n);
  out.F = Matrix(n, n);
  out.J = Matrix(n, n);

  for (Eigen::Index a = 0; a < n; ++a) {
    const double la = w * params.lambdas[a];
    for (Eigen::Index b = 0; b < n; ++b) {
      const double lb = w * params.lambdas[b];
      const double ll = la * lb;
      const double cval = (la / (1.0 - la)) * (lb / (1.0 - lb));
      const double denom = 1.0 - c * ll;
      const double denom_delta = 1.0 - c_delta * ll;
      if (std::abs(denom) < 1e-12 || std::abs(denom_delta) < 1e-12)
        throw std::invalid_argument("correlation matrix denominator ~ 0");
      const double dval = cval * c * (1.0 - ll) / denom;
      const double dd = cval * c_delta * (1.0 - ll) / denom_delta;
      out.C(a, b) = cval;
      out.D(a, b) = dval;
      out.D_delta(a, b) = dd;
      out.E(a, b) = cval * dval - cval * cval;
      out.F(a, b) = dval * dval - cval * cval;
      out.J(a, b) =
          (1.0 - ll) / ((1.0 - la) * (1.0 - lb)) * (dval - cval);
    }
  }
  return out;
}

DefinitenessResult check_negative_semidefinite(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const double lmax = es.eigenvalues().maxCoeff();
  return {lmax <= tol, lmax};
}

} // namespace grf::theory
