#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace edgelaw::numeric {

/// Fornberg's algorithm. Returns w[k][j]: weight of node j in the k-th
/// derivative at z, for k = 0..max_order.
std::vector<std::vector<double>> fornberg_weights(double z, std::span<const double> nodes, int max_order);

enum class StencilKind { central, backward };

struct StencilConfig {
  StencilKind kind = StencilKind::central;
  double step = 0.05;
  int half_width = 4;  // central: nodes at ±j·step, j ≤ half_width; backward: 2·half_width+1 nodes
  double tolerance = 1e-6;
};

struct DerivativeEstimate {
  double value;
  double error;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// d^order g / dλ^order at `at` from a stencil at step h and h/2, combined by
/// Richardson extrapolation. Throws NonConvergence when the error estimate
/// exceeds config.tolerance·max(1, |value|).
DerivativeEstimate lambda_derivative(const std::function<double(double)>& g, int order, double at = 1.0,
                                     const StencilConfig& config = {});

}  // namespace edgelaw::numeric
