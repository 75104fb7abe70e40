#pragma once

namespace edgelaw::specfun {

/// Ai(x) together with Ai'(x).
struct AiryPair {
  double value;
  double derivative;
};

/// Airy function of the first kind and its derivative for finite |x| <= 100.
///
/// Relative accuracy is ~1e-13 or better away from the zeros on the negative
/// axis (absolute ~1e-11 near them). Throws std::domain_error for non-finite
/// or out-of-range input.
AiryPair airy_ai(double x);

/// Leading asymptotic form ½π^{-1/2}x^{-1/4}exp(-⅔x^{3/2}) of Ai at +∞.
double airy_ai_leading(double x);

/// ∫_x^∞ Ai(y) dy for x >= 0.
double airy_integral_tail(double x);

/// ∫_x^∞ Ai(y)^2 dy (closed form Ai'(x)^2 - x Ai(x)^2).
double airy_squared_tail(double x);

/// ∫_x^∞ (y - x) Ai(y)^2 dy (closed form in Ai, Ai').
double airy_squared_moment_tail(double x);

}  // namespace edgelaw::specfun
