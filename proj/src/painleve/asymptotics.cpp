#include "edgelaw/painleve/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace edgelaw::painleve {

namespace {

void require_left(double x) {
  if (!(x < 0.0)) throw std::domain_error("left-tail series needs x < 0");
}

}  // namespace

double q0_left_series(double x) {
  require_left(x);
  const double t = -2.0 * x;
  const double u = 1.0 / (t * t * t);
  const double poly = 1.0 + u * (-1.0 + u * (-73.0 / 2.0 + u * (-10657.0 / 2.0 + u * (-13912277.0 / 8.0))));
  return 0.5 * std::sqrt(t) * poly;
}

double q0_left_series_derivative(double x) {
  require_left(x);
  // d/dx = -2 d/dt applied to ½ (t^{1/2} - t^{-5/2} - 73/2 t^{-11/2} - ...).
  const double t = -2.0 * x;
  const double dt = 0.5 * (0.5 * std::pow(t, -0.5) + 2.5 * std::pow(t, -3.5) + 73.0 / 2.0 * 5.5 * std::pow(t, -6.5) +
                           10657.0 / 2.0 * 8.5 * std::pow(t, -9.5) + 13912277.0 / 8.0 * 11.5 * std::pow(t, -12.5));
  return -2.0 * dt;
}

double q1_left_series(double x) {
  require_left(x);
  const double t = -2.0 * x;
  const double r = 1.0 / (t * std::sqrt(t));  // t^{-3/2}
  const double poly =
      1.0 + r * (17.0 / 24.0 +
                 r * (1513.0 / 1152.0 + r * (850193.0 / 82944.0 + r * (-407117521.0 / 7962624.0))));
  return std::exp(t * std::sqrt(t) / 3.0) / (2.0 * std::sqrt(2.0 * std::numbers::pi) * std::sqrt(std::sqrt(t))) *
         poly;
}

}  // namespace edgelaw::painleve
