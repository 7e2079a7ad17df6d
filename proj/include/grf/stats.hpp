#pragma once

#include <cstddef>
#include <vector>

namespace grf::stats {

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0; // sample variance (n-1)
  double stddev = 0.0;
  double stderr_mean = 0.0;
};

Summary summarize(const std::vector<double>& xs);

/// Streaming mean/variance (Welford).
class Welford {
 public:
  void add(double x);
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const; // sample variance
  double stderr_mean() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Upper critical value of Student's t with `df` degrees of freedom at
/// one-sided level alpha.
double t_critical_one_sided(double alpha, std::size_t df);

struct PairedTestResult {
  double t = 0.0;
  double critical = 0.0;
  bool significant = false;
  double mean_diff = 0.0;
};

/// One-sided paired t-test of H1: mean(a - b) > 0.
PairedTestResult paired_t_greater(const std::vector<double>& a,
                                  const std::vector<double>& b, double alpha);

/// Two-sided paired t-test of H1: mean(a - b) != 0.
PairedTestResult paired_t_two_sided(const std::vector<double>& a,
                                    const std::vector<double>& b, double alpha);

/// Kolmogorov-Smirnov statistic of samples against Uniform[0,1).
double ks_uniform_statistic(std::vector<double> samples);

/// Asymptotic critical value for sqrt(n)*D at level alpha.
double ks_critical(double alpha);

} // namespace grf::stats
