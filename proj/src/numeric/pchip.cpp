#include "edgelaw/numeric/pchip.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgelaw::numeric {

namespace {

double end_slope(double h0, double h1, double d0, double d1) {
  double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (m * d0 <= 0.0) return 0.0;
  if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
  return m;
}

}  // namespace

std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw std::invalid_argument("pchip_slopes: need matching arrays of size >= 2");
  std::vector<double> h(n - 1), d(n - 1), m(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x[k + 1] - x[k];
    if (!(h[k] > 0.0)) throw std::invalid_argument("pchip_slopes: abscissae must be strictly increasing");
    d[k] = (y[k + 1] - y[k]) / h[k];
  }
  if (n == 2) {
    m[0] = m[1] = d[0];
    return m;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (d[k - 1] * d[k] <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    m[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
  }
  m[0] = end_slope(h[0], h[1], d[0], d[1]);
  m[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return m;
}

CubicHermite::CubicHermite(std::vector<double> x, std::vector<double> y, std::vector<double> slopes)
    : x_(std::move(x)), y_(std::move(y)), m_(std::move(slopes)) {
  if (x_.size() < 2 || y_.size() != x_.size() || m_.size() != x_.size())
    throw std::invalid_argument("CubicHermite: inconsistent array sizes");
}

CubicHermite CubicHermite::monotone(std::vector<double> x, std::vector<double> y) {
  auto m = pchip_slopes(x, y);
  return CubicHermite(std::move(x), std::move(y), std::move(m));
}

std::size_t CubicHermite::interval(double t) const {
  if (t <= x_.front()) return 0;
  if (t >= x_.back()) return x_.size() - 2;
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicHermite::operator()(double t) const {
  const std::size_t k = interval(t);
  const double h = x_[k + 1] - x_[k];
  const double u = (t - x_[k]) / h;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  return h00 * y_[k] + h10 * h * m_[k] + h01 * y_[k + 1] + h11 * h * m_[k + 1];
}

double CubicHermite::derivative(double t) const {
  const std::size_t k = interval(t);
  const double h = x_[k + 1] - x_[k];
  const double u = (t - x_[k]) / h;
  const double u2 = u * u;
  const double d00 = (6.0 * u2 - 6.0 * u) / h;
  const double d10 = 3.0 * u2 - 4.0 * u + 1.0;
  const double d01 = (-6.0 * u2 + 6.0 * u) / h;
  const double d11 = 3.0 * u2 - 2.0 * u;
  return d00 * y_[k] + d10 * m_[k] + d01 * y_[k + 1] + d11 * m_[k + 1];
}

}  // namespace edgelaw::numeric
