#pragma once

namespace edgelaw::painleve {

// Expansions of the Hastings-McLeod solution q0 and of q1 = ∂q/∂λ at λ=1
// as x → -∞, written in t = -2x. Usable for x ≲ -4.

/// q0(x) ≈ ½√t (1 - t⁻³ - 73/2 t⁻⁶ - 10657/2 t⁻⁹ - 13912277/8 t⁻¹²).
double q0_left_series(double x);
double q0_left_series_derivative(double x);

/// q1(x) ≈ exp(t^{3/2}/3) / (2√(2π) t^{1/4}) (1 + 17/24 t^{-3/2} + ...).
double q1_left_series(double x);

}  // namespace edgelaw::painleve
