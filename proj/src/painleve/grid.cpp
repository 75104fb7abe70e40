#include "edgelaw/painleve/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace edgelaw::painleve {

void SolveGrid::validate() const {
  if (!(std::isfinite(s_min) && std::isfinite(s_max) && std::isfinite(step) && std::isfinite(patch_point)))
    throw std::invalid_argument("SolveGrid: non-finite parameter");
  if (!(s_min < patch_point && patch_point < 0.0 && 0.0 < s_max))
    throw std::invalid_argument("SolveGrid: need s_min < patch_point < 0 < s_max");
  if (!(step > 0.0)) throw std::invalid_argument("SolveGrid: step must be positive");
  const double ratio = (s_max - s_min) / step;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio)
    throw std::invalid_argument("SolveGrid: (s_max - s_min)/step is not an integer");
  if (std::round(ratio) < 8.0) throw std::invalid_argument("SolveGrid: fewer than 8 steps");
}

std::size_t SolveGrid::size() const {
  return static_cast<std::size_t>(std::llround((s_max - s_min) / step)) + 1;
}

std::vector<double> SolveGrid::points() const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x(i);
  return out;
}

std::size_t SolveGrid::nearest(double s) const {
  if (s <= s_min) return 0;
  const std::size_t last = size() - 1;
  const auto i = static_cast<std::size_t>(std::llround((s - s_min) / step));
  return i > last ? last : i;
}

}  // namespace edgelaw::painleve
