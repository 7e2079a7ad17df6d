#include "grf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace grf::stats {

Summary summarize(const std::vector<double>& xs) {
  Welford w;
  for (double x : xs) w.add(x);
  Summary s;
  s.n = w.count();
  s.mean = w.mean();
  s.variance = w.variance();
  s.stddev = std::sqrt(s.variance);
  s.stderr_mean = w.stderr_mean();
  return s;
}

void Welford::add(double x) {
  ++n_;
  const double d = x - mean_;
  mean_ += d / double(n_);
  m2_ += d * (x - mean_);
}

double Welford::variance() const {
  return n_ > 1 ? m2_ / double(n_ - 1) : 0.0;
}

double Welford::stderr_mean() const {
  return n_ > 0 ? std::sqrt(variance() / double(n_)) : 0.0;
}

double t_critical_one_sided(double alpha, std::size_t df) {
  if (df == 0) throw std::invalid_argument("t test needs df >= 1");
  boost::math::students_t dist(double(df));
  return boost::math::quantile(dist, 1.0 - alpha);
}

namespace {

PairedTestResult paired_t(const std::vector<double>& a,
                          const std::vector<double>& b, double alpha,
                          bool two_sided) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("paired test needs equal sizes >= 2");
  Welford w;
  for (std::size_t i = 0; i < a.size(); ++i) w.add(a[i] - b[i]);
  PairedTestResult r;
  r.mean_diff = w.mean();
  const double se = w.stderr_mean();
  r.t = se > 0.0 ? w.mean() / se : (w.mean() > 0 ? 1e300 : 0.0);
  r.critical =
      t_critical_one_sided(two_sided ? alpha / 2.0 : alpha, a.size() - 1);
  r.significant = two_sided ? std::abs(r.t) > r.critical : r.t > r.critical;
  return r;
}

} // namespace

PairedTestResult paired_t_greater(const std::vector<double>& a,
                                  const std::vector<double>& b, double alpha) {
  return paired_t(a, b, alpha, false);
}

PairedTestResult paired_t_two_sided(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    double alpha) {
  return paired_t(a, b, alpha, true);
}

double ks_uniform_statistic(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  std::sort(samples.begin(), samples.end());
  const double n = double(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = samples[i]; // Uniform[0,1)
    d = std::max(d, std::abs(double(i + 1) / n - cdf));
    d = std::max(d, std::abs(cdf - double(i) / n));
  }
  return d;
}

double ks_critical(double alpha) {
  // Leading term of the Kolmogorov distribution tail, accurate for the
  // small alphas used here.
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha in (0,1)");
  return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

} // namespace grf::stats
