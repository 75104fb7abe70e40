#include "edgelaw/numeric/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace edgelaw::numeric {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double gauss_legendre_integrate(const std::function<double(double)>& f, double a, double b, double panel) {
  static const GaussRule rule = gauss_legendre(16);
  if (b <= a) return 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double part = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) part += rule.weights[k] * f(mid + 0.5 * width * rule.nodes[k]);
    total += 0.5 * width * part;
  }
  return total;
}

std::vector<double> cumulative_from_right(std::span<const double> g, double step, double tail) {
  const std::size_t n = g.size();
  if (n < 4) throw std::invalid_argument("cumulative_from_right: need at least 4 samples");
  std::vector<double> out(n);
  out[n - 1] = tail;
  const double c = step / 24.0;
  long double acc = tail;
  for (std::size_t i = n - 1; i-- > 0;) {
    double piece;
    if (i == 0) {
      piece = c * (9.0 * g[0] + 19.0 * g[1] - 5.0 * g[2] + g[3]);
    } else if (i == n - 2) {
      piece = c * (9.0 * g[n - 1] + 19.0 * g[n - 2] - 5.0 * g[n - 3] + g[n - 4]);
    } else {
      piece = c * (-g[i - 1] + 13.0 * g[i] + 13.0 * g[i + 1] - g[i + 2]);
    }
    acc += piece;
    out[i] = static_cast<double>(acc);
  }
  return out;
}

double simpson(std::span<const double> g, double step) {
  const std::size_t n = g.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * step * (g[0] + g[1]);
  std::size_t intervals = n - 1;
  std::size_t simpson_end = n - 1;
  double tail = 0.0;
  if (intervals % 2 == 1) {
    const std::size_t k = n - 4;
    tail = 3.0 * step / 8.0 * (g[k] + 3.0 * g[k + 1] + 3.0 * g[k + 2] + g[k + 3]);
    simpson_end = k;
    if (k == 0) return tail;
  }
  double acc = g[0] + g[simpson_end];
  for (std::size_t i = 1; i < simpson_end; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * g[i];
  return step / 3.0 * acc + tail;
}

}  // namespace edgelaw::numeric
