#include "edgelaw/numeric/finite_difference.hpp"

#include <cmath>
#include <string>

namespace edgelaw::numeric {

std::vector<std::vector<double>> fornberg_weights(double z, std::span<const double> nodes, int max_order) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0 || max_order < 0) throw std::invalid_argument("fornberg_weights: empty stencil or negative order");
  std::vector<std::vector<double>> c(max_order + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

namespace {

double stencil_estimate(const std::function<double(double)>& g, int order, double at, const StencilConfig& cfg,
                        double h, int& accuracy) {
  std::vector<double> nodes;
  const int w = cfg.half_width;
  if (cfg.kind == StencilKind::central) {
    for (int j = -w; j <= w; ++j) nodes.push_back(at + j * h);
    const int raw = 2 * w + 1 - order;
    accuracy = raw + (raw % 2);
  } else {
    for (int j = 0; j <= 2 * w; ++j) nodes.push_back(at - j * h);
    accuracy = 2 * w + 1 - order;
  }
  const auto weights = fornberg_weights(at, nodes, order);
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double wj = weights[order][j];
    if (wj != 0.0) sum += wj * g(nodes[j]);
  }
  return sum;
}

}  // namespace

DerivativeEstimate lambda_derivative(const std::function<double(double)>& g, int order, double at,
                                     const StencilConfig& config) {
  if (order < 0 || order > 4) throw std::invalid_argument("lambda_derivative: order must be in 0..4");
  if (!(config.step > 0.0) || config.half_width < 1 || 2 * config.half_width < order)
    throw std::invalid_argument("lambda_derivative: invalid stencil configuration");
  if (order == 0) return {g(at), 0.0};
  int p = 0;
  const double coarse = stencil_estimate(g, order, at, config, config.step, p);
  const double fine = stencil_estimate(g, order, at, config, 0.5 * config.step, p);
  const double factor = std::ldexp(1.0, p) - 1.0;
  const double value = fine + (fine - coarse) / factor;
  const double error = std::abs(fine - coarse) / factor;
  if (!std::isfinite(value) || error > config.tolerance * std::max(1.0, std::abs(value)))
    throw NonConvergence("lambda_derivative: refinements disagree (order " + std::to_string(order) +
                         ", error estimate " + std::to_string(error) + ")");
  return {value, error};
}

}  // namespace edgelaw::numeric
