#include "grf/kernels.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace grf {

namespace {

void check_oracle_size(const Graph& g, std::size_t limit) {
  if (g.size() > limit)
    throw std::invalid_argument("graph exceeds dense oracle limit (" +
                                std::to_string(limit) + " nodes)");
}

Matrix gram(const FeatureMatrix& phi, double scale) {
  const auto n = static_cast<Eigen::Index>(phi.size());
  Matrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = scale * phi.rows[i].dot(phi.rows[j]);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

EstimateMeta make_meta(const FeatureMatrix& phi, double sigma) {
  EstimateMeta meta;
  meta.sigma = sigma;
  meta.config = phi.config;
  meta.total_walks = phi.stats.total_walks;
  meta.truncated_walks = phi.stats.truncated_walks;
  meta.truncation_warning = phi.truncation_warning();
  return meta;
}

} // namespace

Matrix exact_regularized_laplacian(const Graph& g, double sigma, int d,
                                   std::size_t oracle_limit) {
  if (d < 1) throw std::invalid_argument("kernel power d must be >= 1");
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  check_oracle_size(g, oracle_limit);
  const auto n = static_cast<Eigen::Index>(g.size());
  const Matrix m =
      Matrix::Identity(n, n) + sigma * sigma * normalized_laplacian(g);
  const Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("regularized Laplacian system not SPD");
  Matrix k = Matrix::Identity(n, n);
  for (int i = 0; i < d; ++i) k = llt.solve(k);
  return k;
}

Matrix exact_heat_kernel(const Graph& g, double t, std::size_t oracle_limit) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  check_oracle_size(g, oracle_limit);
  const Matrix lap = normalized_laplacian(g);
  Eigen::SelfAdjointEigenSolver<Matrix> es(lap);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const Vector decay = (-t * es.eigenvalues().array()).exp();
  return es.eigenvectors() * decay.asDiagonal() *
         es.eigenvectors().transpose();
}

KernelEstimate estimate_k2(const FeatureMatrix& phi, double sigma) {
  const auto start = std::chrono::steady_clock::now();
  const double scale = 1.0 / std::pow(1.0 + sigma * sigma, 2);
  KernelEstimate est{gram(phi, scale), make_meta(phi, sigma)};
  est.meta.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return est;
}

KernelEstimate estimate_k2(const FeatureMatrix& phi,
                           const FeatureMatrix& phi_second, double sigma) {
  if (phi.size() != phi_second.size())
    throw std::invalid_argument("ensemble sizes differ");
  const auto start = std::chrono::steady_clock::now();
  const double scale = 1.0 / std::pow(1.0 + sigma * sigma, 2);
  KernelEstimate est{gram(phi, scale), make_meta(phi, sigma)};
  for (Eigen::Index i = 0; i < est.matrix.rows(); ++i)
    est.matrix(i, i) = scale * phi.rows[i].dot(phi_second.rows[i]);
  est.meta.two_ensemble_diagonal = true;
  est.meta.total_walks += phi_second.stats.total_walks;
  est.meta.truncated_walks += phi_second.stats.truncated_walks;
  est.meta.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return est;
}

KernelEstimate estimate_kd(const FeatureMatrix& phi, double sigma, int d,
                           const Matrix& laplacian) {
  if (d < 1) throw std::invalid_argument("kernel power d must be >= 1");
  if (static_cast<std::size_t>(laplacian.rows()) != phi.size())
    throw std::invalid_argument("laplacian size does not match features");
  KernelEstimate est = estimate_k2(phi, sigma);
  if (d == 2) return est;

  const auto n = laplacian.rows();
  const Matrix m = Matrix::Identity(n, n) + sigma * sigma * laplacian;
  Matrix raw = est.matrix;
  if (d == 1) {
    raw = raw * m;
  } else {
    const Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success)
      throw std::runtime_error("regularized Laplacian system not SPD");
    for (int i = 0; i < d - 2; ++i) raw = llt.solve(raw);
  }
  est.matrix = 0.5 * (raw + raw.transpose());
  return est;
}

double relative_frobenius_error(const Matrix& exact, const Matrix& approx) {
  if (exact.rows() != approx.rows() || exact.cols() != approx.cols())
    throw std::invalid_argument("shape mismatch");
  const double denom = exact.squaredNorm();
  if (denom == 0.0) throw std::invalid_argument("exact matrix has zero norm");
  return (exact - approx).squaredNorm() / denom;
}

} // namespace grf
