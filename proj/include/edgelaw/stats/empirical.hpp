#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "edgelaw/distribution/edge_law.hpp"

namespace edgelaw::stats {

/// Right-continuous empirical distribution function.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> values);

  double operator()(double x) const;  // proportion of values ≤ x
  const std::vector<double>& sorted_values() const { return sorted_; }
  std::size_t count() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

/// Column k of a replication table (rows shorter than k+1 are skipped).
EmpiricalCdf column(const std::vector<std::vector<double>>& rows, std::size_t k);

/// sup |F_emp - F| over the sample, both sides of every jump.
double ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& cdf);
double ks_distance(const EmpiricalCdf& emp, const distribution::EdgeLawTable& law);
/// Two-sample statistic sup_x |F_a(x) - F_b(x)|.
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// proportions[i][m] = share of samples[m] at or below the p_i-quantile of laws[m].
struct PercentileTable {
  std::vector<double> percentiles;
  std::vector<std::vector<double>> proportions;
};
PercentileTable percentile_table(std::span<const EmpiricalCdf> samples,
                                 std::span<const distribution::EdgeLawTable> laws,
                                 std::span<const double> percentiles);

/// Mean, unbiased standard deviation, g₁ and excess g₂.
distribution::MomentSummary sample_moments(const EmpiricalCdf& emp);

}  // namespace edgelaw::stats
