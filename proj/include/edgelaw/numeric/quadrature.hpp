#pragma once

#include <functional>
#include <span>
#include <vector>

namespace edgelaw::numeric {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

/// Composite 16-point Gauss-Legendre over [a, b] with panels no wider than `panel`.
double gauss_legendre_integrate(const std::function<double(double)>& f, double a, double b, double panel);

/// Cumulative integral from the right end of a uniform grid:
/// out[i] = tail + ∫_{x_i}^{x_last} g dx. Fourth-order (cubic Lagrange per
/// interval, one-sided at the two end intervals). Needs at least 4 samples.
std::vector<double> cumulative_from_right(std::span<const double> g, double step, double tail = 0.0);

/// Composite Simpson rule over a uniform grid; a trailing odd interval is
/// handled with the 3/8 rule on the last three intervals.
double simpson(std::span<const double> g, double step);

}  // namespace edgelaw::numeric
