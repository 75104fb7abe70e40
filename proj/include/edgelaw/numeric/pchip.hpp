#pragma once

#include <span>
#include <vector>

namespace edgelaw::numeric {

/// Fritsch-Carlson node slopes for a shape-preserving (monotone) cubic
/// Hermite interpolant through (x, y). x must be strictly increasing.
std::vector<double> pchip_slopes(std::span<const double> x, std::span<const double> y);

/// Piecewise cubic Hermite interpolant with given node slopes.
class CubicHermite {
 public:
  CubicHermite(std::vector<double> x, std::vector<double> y, std::vector<double> slopes);

  /// Monotone (PCHIP) interpolant.
  static CubicHermite monotone(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double derivative(double t) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& values() const { return y_; }
  const std::vector<double>& slopes() const { return m_; }

 private:
  std::size_t interval(double t) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;
};

}  // namespace edgelaw::numeric
