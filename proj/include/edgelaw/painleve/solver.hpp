#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgelaw/painleve/grid.hpp"

namespace edgelaw::painleve {

/// Raised when the Newton iteration on the discretized boundary-value
/// problem fails to reach tolerance.
class SolverDivergence : public std::runtime_error {
 public:
  SolverDivergence(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct SolverTolerances {
  double newton_residual = 1e-10;  // max |q'' - xq - 2q³| over the interior
  int max_iterations = 50;
  bool richardson = true;  // combine with a half-step solve to cancel the O(h⁴) error
};

/// q(x,λ) on the grid, together with
///   I(s) = ∫_s^∞ (x-s) q² dx,  I_prime = I'(s) = -∫_s^∞ q² dx,
///   J(s) = ∫_s^{s_max} q dx  (the part of μ(s,λ) inside the window).
struct PainleveSolution {
  double lambda = 0.0;
  SolveGrid grid;
  SolverTolerances tolerances;
  double residual = 0.0;
  std::vector<double> q;
  std::vector<double> q_prime;
  std::vector<double> I;
  std::vector<double> I_prime;
  std::vector<double> J;
};

/// n-th λ-derivative at λ=1 and its integrals:
///   I_n = ∫_s^∞ (x-s) q0 q_n,  J_n = ∫_s^∞ q0 q_n,  M_n = ∫_s^∞ q_n.
struct PainleveDerivatives {
  int order = 1;
  SolveGrid grid;
  std::vector<double> q_n;
  std::vector<double> q_n_prime;
  std::vector<double> I_n;
  std::vector<double> J_n;
  std::vector<double> M_n;
};

/// λ ∈ [0, 1]. For λ > 1 the solution has a pole on the real axis; a
/// std::domain_error is raised.
PainleveSolution solve_pii(double lambda, const SolveGrid& grid = {}, const SolverTolerances& tol = {});

/// Derivatives of order 1..max_order (max_order ≤ 4) of q with respect to λ
/// at λ=1. `base` must be the λ=1 solution.
std::vector<PainleveDerivatives> solve_pii_derivatives(const PainleveSolution& base, int max_order);
PainleveDerivatives solve_pii_derivative(const PainleveSolution& base, int order);

/// μ(s,λ) = ∫_s^∞ q dx: monotone interpolation of J plus the Airy tail beyond s_max.
double mu_of(const PainleveSolution& sol, double s);

/// d^n √λ / dλ^n at λ=1.
double sqrt_lambda_derivative(int n);

/// Integrals of a sampled g over [s, ∞), given the tails beyond s_max:
///   first(s)  = ∫_s^∞ g dx,               first(s_max)  = tail_first,
///   second(s) = ∫_s^∞ (x-s) g dx,         second(s_max) = tail_second.
struct TailIntegrals {
  std::vector<double> first;
  std::vector<double> second;
};
TailIntegrals tail_integrals(std::span<const double> g, double step, double tail_first, double tail_second);

/// Tails beyond x = s_max of Ai, Ai² and (y-x)Ai².
struct AiryTails {
  double ai;
  double ai_squared;
  double ai_squared_moment;
};
AiryTails airy_tails(double x);

}  // namespace edgelaw::painleve
