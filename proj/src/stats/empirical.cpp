#include "edgelaw/stats/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgelaw::stats {

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : sorted_(std::move(values)) {
  for (double v : sorted_)
    if (std::isnan(v)) throw std::invalid_argument("EmpiricalCdf: NaN in sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: empty sample");
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf column(const std::vector<std::vector<double>>& rows, std::size_t k) {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows)
    if (r.size() > k) v.push_back(r[k]);
  return EmpiricalCdf(std::move(v));
}

double ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& cdf) {
  const auto& x = emp.sorted_values();
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    // Ties: the step at x[i] ends after the last equal value.
    std::size_t j = i;
    while (j + 1 < n && x[j + 1] == x[i]) ++j;
    const double f = cdf(x[i]);
    d = std::max({d, std::abs(static_cast<double>(j + 1) / n - f), std::abs(static_cast<double>(i) / n - f)});
    i = j;
  }
  return d;
}

double ks_distance(const EmpiricalCdf& emp, const distribution::EdgeLawTable& law) {
  return ks_distance(emp, [&](double s) { return distribution::cdf_at(law, s); });
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  const auto& x = a.sorted_values();
  const auto& y = b.sorted_values();
  if (x.empty() || y.empty()) throw std::invalid_argument("ks_distance: empty sample");
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::abs(i / nx - j / ny));
  }
  return d;
}

PercentileTable percentile_table(std::span<const EmpiricalCdf> samples,
                                 std::span<const distribution::EdgeLawTable> laws,
                                 std::span<const double> percentiles) {
  if (samples.size() != laws.size()) throw std::invalid_argument("percentile_table: one law per sample required");
  PercentileTable t;
  t.percentiles.assign(percentiles.begin(), percentiles.end());
  for (double p : percentiles) {
    if (!(p > 0.0 && p < 1.0)) throw std::range_error("percentile_table: percentiles must lie in (0, 1)");
    std::vector<double> row;
    for (std::size_t m = 0; m < samples.size(); ++m) row.push_back(samples[m](distribution::quantile(laws[m], p)));
    t.proportions.push_back(std::move(row));
  }
  return t;
}

distribution::MomentSummary sample_moments(const EmpiricalCdf& emp) {
  const auto& x = emp.sorted_values();
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("sample_moments: need at least two values");
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  if (m2 == 0.0) throw std::domain_error("sample_moments: zero variance");
  const double nn = static_cast<double>(n);
  const double var_unbiased = m2 / (nn - 1.0);
  m2 /= nn;
  m3 /= nn;
  m4 /= nn;
  return {mean, std::sqrt(var_unbiased), m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3.0};
}

}  // namespace edgelaw::stats
