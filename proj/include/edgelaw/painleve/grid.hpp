#pragma once

#include <cstddef>
#include <vector>

namespace edgelaw::painleve {

/// Uniform solve window [s_min, s_max].
struct SolveGrid {
  double s_min = -10.0;
  double s_max = 6.0;
  double step = 0.005;
  double patch_point = -8.0;

  /// Throws std::invalid_argument unless s_min < patch_point < 0 < s_max,
  /// step > 0 and the window holds an integral number of steps.
  void validate() const;

  std::size_t size() const;
  double x(std::size_t i) const { return s_min + static_cast<double>(i) * step; }
  std::vector<double> points() const;
  /// Index of the grid point nearest to s (clamped to the window).
  std::size_t nearest(double s) const;

  friend bool operator==(const SolveGrid&, const SolveGrid&) = default;
};

}  // namespace edgelaw::painleve
