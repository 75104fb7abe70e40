#include "edgelaw/painleve/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "edgelaw/numeric/pchip.hpp"
#include "edgelaw/numeric/quadrature.hpp"
#include "edgelaw/painleve/asymptotics.hpp"
#include "edgelaw/specfun/airy.hpp"

namespace edgelaw::painleve {

namespace {

constexpr double kIvpCut = -4.0;  // trial solution: leftward IVP down to here, series further left

double rhs(double x, double q) { return x * q + 2.0 * q * q * q; }

// One leftward Numerov step for q'' = xq + 2q³: solve
// y - a(x y + 2y³) = 2q_i - q_{i+1} + a(f_{i+1} + 10 f_i) for y = q_{i-1}.
// Extended precision keeps the rounding noise that the growing mode
// amplifies well below what λ-differencing can tolerate.
using wide = long double;

wide numerov_left(wide x, wide a, wide known) {
  wide y = known;
  for (int it = 0; it < 60; ++it) {
    const wide g = y - a * (x * y + 2 * y * y * y) - known;
    const wide dg = 1 - a * (x + 6 * y * y);
    const wide dy = g / dg;
    y -= dy;
    if (std::abs(dy) <= 1e-19L * (1 + std::abs(y))) break;
  }
  return y;
}

// Integrates leftward from the two right-most values of q multiplied by `scale`.
void leftward_ivp(const SolveGrid& grid, std::vector<double>& q, std::size_t stop, wide scale = 1) {
  const wide h = grid.step;
  const wide a = h * h / 12;
  const std::size_t n = q.size();
  auto xw = [&](std::size_t i) { return static_cast<wide>(grid.s_min) + static_cast<wide>(i) * h; };
  wide right = scale * q[n - 1], mid = scale * q[n - 2];
  q[n - 1] = static_cast<double>(right);
  q[n - 2] = static_cast<double>(mid);
  for (std::size_t i = n - 2; i > stop; --i) {
    const wide fr = xw(i + 1) * right + 2 * right * right * right;
    const wide fm = xw(i) * mid + 2 * mid * mid * mid;
    const wide left = numerov_left(xw(i - 1), a, 2 * mid - right + a * (fr + 10 * fm));
    q[i - 1] = static_cast<double>(left);
    right = mid;
    mid = left;
  }
}

// max |second difference / h² - Numerov average of f| over the interior.
template <typename T>
double numerov_residual(const SolveGrid& grid, const std::vector<T>& q) {
  const wide h = grid.step;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < q.size(); ++i) {
    const wide xl = static_cast<wide>(grid.s_min) + static_cast<wide>(i - 1) * h;
    const wide lhs = (static_cast<wide>(q[i + 1]) - 2 * static_cast<wide>(q[i]) + static_cast<wide>(q[i - 1])) / (h * h);
    auto f = [](wide x, wide y) { return x * y + 2 * y * y * y; };
    const wide avg = (f(xl + 2 * h, q[i + 1]) + 10 * f(xl + h, q[i]) + f(xl, q[i - 1])) / 12;
    worst = std::max(worst, static_cast<double>(std::abs(lhs - avg)));
  }
  return worst;
}

// Thomas algorithm; sub[i] multiplies x[i-1], sup[i] multiplies x[i+1].
void solve_tridiagonal(const std::vector<wide>& sub, std::vector<wide> diag, const std::vector<wide>& sup,
                       std::vector<wide>& rhs_inout) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const wide w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs_inout[i] -= w * rhs_inout[i - 1];
  }
  rhs_inout[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) rhs_inout[i] = (rhs_inout[i] - sup[i] * rhs_inout[i + 1]) / diag[i];
}

// Hastings-McLeod solution (λ = 1) as the Numerov boundary-value problem with
// q(s_min) from the left series and q(s_max) = Ai(s_max). Solved in extended
// precision so that it is consistent with the λ < 1 integrations.
std::vector<double> hastings_mcleod(const SolveGrid& grid, const SolverTolerances& tol, double& residual) {
  const std::size_t n = grid.size();
  std::vector<double> start(n, 0.0);
  start[n - 1] = specfun::airy_ai(grid.s_max).value;
  start[n - 2] = specfun::airy_ai(grid.x(n - 2)).value;
  const std::size_t cut = grid.nearest(std::max(kIvpCut, grid.s_min));
  leftward_ivp(grid, start, cut);
  for (std::size_t i = 0; i < cut; ++i) start[i] = q0_left_series(grid.x(i));

  const wide h = grid.step;
  const wide a = h * h / 12;
  auto xw = [&](std::size_t i) { return static_cast<wide>(grid.s_min) + static_cast<wide>(i) * h; };
  auto f = [](wide x, wide y) { return x * y + 2 * y * y * y; };
  std::vector<wide> q(start.begin(), start.end());
  const std::size_t m = n - 2;
  std::vector<wide> sub(m), diag(m), sup(m), r(m);
  for (int iter = 0; iter < tol.max_iterations; ++iter) {
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t i = k + 1;
      const wide xl = xw(i - 1), xc = xw(i), xr = xw(i + 1);
      r[k] = -(q[i + 1] - 2 * q[i] + q[i - 1] - a * (f(xr, q[i + 1]) + 10 * f(xc, q[i]) + f(xl, q[i - 1])));
      sub[k] = 1 - a * (xl + 6 * q[i - 1] * q[i - 1]);
      diag[k] = -2 - 10 * a * (xc + 6 * q[i] * q[i]);
      sup[k] = 1 - a * (xr + 6 * q[i + 1] * q[i + 1]);
    }
    solve_tridiagonal(sub, diag, sup, r);
    wide step_norm = 0;
    for (std::size_t k = 0; k < m; ++k) {
      q[k + 1] += r[k];
      step_norm = std::max(step_norm, std::abs(r[k]));
    }
    if (!std::isfinite(static_cast<double>(step_norm))) break;
    if (step_norm < 1e-17L) {
      residual = numerov_residual(grid, q);
      if (residual <= tol.newton_residual) return std::vector<double>(q.begin(), q.end());
      break;
    }
  }
  residual = numerov_residual(grid, q);
  throw SolverDivergence("solve_pii: Newton iteration failed at lambda=1", residual);
}

void fill_companions(PainleveSolution& sol) {
  const SolveGrid& g = sol.grid;
  const std::size_t n = sol.q.size();
  const AiryTails tails = airy_tails(g.s_max);
  const double ai_prime = specfun::airy_ai(g.s_max).derivative;
  const double root = std::sqrt(sol.lambda);

  std::vector<double> f(n), q2(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = rhs(g.x(i), sol.q[i]);
    q2[i] = sol.q[i] * sol.q[i];
  }
  const auto integral_f = numeric::cumulative_from_right(f, g.step);
  sol.q_prime.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.q_prime[i] = root * ai_prime - integral_f[i];

  auto t = tail_integrals(q2, g.step, sol.lambda * tails.ai_squared, sol.lambda * tails.ai_squared_moment);
  sol.I = std::move(t.second);
  sol.I_prime = std::move(t.first);
  for (double& v : sol.I_prime) v = -v;
  sol.J = numeric::cumulative_from_right(sol.q, g.step);
}

}  // namespace

AiryTails airy_tails(double x) {
  return {specfun::airy_integral_tail(x), specfun::airy_squared_tail(x), specfun::airy_squared_moment_tail(x)};
}

TailIntegrals tail_integrals(std::span<const double> g, double step, double tail_first, double tail_second) {
  TailIntegrals out;
  out.first = numeric::cumulative_from_right(g, step, tail_first);
  out.second = numeric::cumulative_from_right(out.first, step, tail_second);
  return out;
}

double sqrt_lambda_derivative(int n) {
  double c = 1.0;
  for (int k = 0; k < n; ++k) c *= 0.5 - k;
  return c;
}

namespace {

PainleveSolution solve_on_grid(double lambda, const SolveGrid& grid, const SolverTolerances& tol) {
  PainleveSolution sol;
  sol.lambda = lambda;
  sol.grid = grid;
  sol.tolerances = tol;
  const std::size_t n = grid.size();
  if (lambda == 0.0) {
    sol.q.assign(n, 0.0);
    sol.q_prime.assign(n, 0.0);
    sol.I.assign(n, 0.0);
    sol.I_prime.assign(n, 0.0);
    sol.J.assign(n, 0.0);
    return sol;
  }
  double residual = 0.0;
  std::vector<double> hm = hastings_mcleod(grid, tol, residual);
  if (lambda == 1.0) {
    sol.q = std::move(hm);
  } else {
    sol.q.assign(n, 0.0);
    sol.q[n - 1] = hm[n - 1];
    sol.q[n - 2] = hm[n - 2];
    leftward_ivp(grid, sol.q, 0, std::sqrt(static_cast<wide>(lambda)));
    residual = numerov_residual(grid, sol.q);
    for (double v : sol.q)
      if (!std::isfinite(v)) throw SolverDivergence("solve_pii: integration blew up", residual);
  }
  sol.residual = residual;
  fill_companions(sol);
  return sol;
}

}  // namespace

PainleveSolution solve_pii(double lambda, const SolveGrid& grid, const SolverTolerances& tol) {
  grid.validate();
  if (!std::isfinite(lambda) || lambda < 0.0) throw std::domain_error("solve_pii: lambda must be in [0, 1]");
  if (lambda > 1.0)
    throw std::domain_error("solve_pii: lambda > 1 has no bounded real solution (pole on the real axis)");
  PainleveSolution sol = solve_on_grid(lambda, grid, tol);
  if (!tol.richardson || lambda == 0.0) return sol;

  // Numerov and the cumulative quadrature are both O(h⁴); one halving removes that term.
  SolveGrid half = grid;
  half.step = 0.5 * grid.step;
  const PainleveSolution fine = solve_on_grid(lambda, half, tol);
  auto combine = [](std::vector<double>& coarse, const std::vector<double>& f) {
    for (std::size_t i = 0; i < coarse.size(); ++i) coarse[i] = (16.0 * f[2 * i] - coarse[i]) / 15.0;
  };
  combine(sol.q, fine.q);
  combine(sol.q_prime, fine.q_prime);
  combine(sol.I, fine.I);
  combine(sol.I_prime, fine.I_prime);
  combine(sol.J, fine.J);
  sol.residual = std::max(sol.residual, fine.residual);
  return sol;
}

std::vector<PainleveDerivatives> solve_pii_derivatives(const PainleveSolution& base, int max_order) {
  if (base.lambda != 1.0) throw std::invalid_argument("solve_pii_derivatives: base must be solved at lambda=1");
  if (max_order < 1 || max_order > 4) throw std::invalid_argument("solve_pii_derivatives: order must be in 1..4");
  const SolveGrid& g = base.grid;
  const std::size_t n = base.q.size();
  const double a = g.step * g.step / 12.0;
  const std::vector<double>& q0 = base.q;
  const AiryTails tails = airy_tails(g.s_max);
  const double ai_prime = specfun::airy_ai(g.s_max).derivative;

  std::vector<double> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = g.x(i) + 6.0 * q0[i] * q0[i];

  std::vector<std::vector<double>> qs{q0};
  std::vector<PainleveDerivatives> out;
  for (int order = 1; order <= max_order; ++order) {
    std::vector<double> src(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double p0 = q0[i];
      switch (order) {
        case 2:
          src[i] = 12.0 * p0 * qs[1][i] * qs[1][i];
          break;
        case 3:
          src[i] = 36.0 * p0 * qs[1][i] * qs[2][i] + 12.0 * qs[1][i] * qs[1][i] * qs[1][i];
          break;
        case 4:
          src[i] = 48.0 * p0 * qs[1][i] * qs[3][i] + 36.0 * p0 * qs[2][i] * qs[2][i] +
                   72.0 * qs[1][i] * qs[1][i] * qs[2][i];
          break;
        default:
          break;
      }
    }
    const double c = sqrt_lambda_derivative(order);
    std::vector<double> y(n, 0.0);
    y[n - 1] = c * q0[n - 1];
    y[n - 2] = c * q0[n - 2];
    for (std::size_t i = n - 2; i > 0; --i) {
      const double known = 2.0 * y[i] - y[i + 1] + a * (coef[i + 1] * y[i + 1] + 10.0 * coef[i] * y[i]) +
                           a * (src[i + 1] + 10.0 * src[i] + src[i - 1]);
      y[i - 1] = known / (1.0 - a * coef[i - 1]);
    }

    PainleveDerivatives d;
    d.order = order;
    d.grid = g;
    std::vector<double> ypp(n), prod(n);
    for (std::size_t i = 0; i < n; ++i) {
      ypp[i] = coef[i] * y[i] + src[i];
      prod[i] = q0[i] * y[i];
    }
    const auto integral = numeric::cumulative_from_right(ypp, g.step);
    d.q_n_prime.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.q_n_prime[i] = c * ai_prime - integral[i];
    auto t = tail_integrals(prod, g.step, c * tails.ai_squared, c * tails.ai_squared_moment);
    d.J_n = std::move(t.first);
    d.I_n = std::move(t.second);
    d.M_n = numeric::cumulative_from_right(y, g.step, c * tails.ai);
    d.q_n = y;
    qs.push_back(std::move(y));
    out.push_back(std::move(d));
  }
  return out;
}

PainleveDerivatives solve_pii_derivative(const PainleveSolution& base, int order) {
  auto all = solve_pii_derivatives(base, order);
  return std::move(all.back());
}

double mu_of(const PainleveSolution& sol, double s) {
  const SolveGrid& g = sol.grid;
  if (!(s >= g.s_min && s <= g.s_max)) throw std::out_of_range("mu_of: s outside the solve window");
  if (sol.lambda == 0.0) return 0.0;
  const double tail = std::sqrt(sol.lambda) * specfun::airy_integral_tail(g.s_max);
  const std::size_t i = g.nearest(s);
  if (std::abs(g.x(i) - s) <= 1e-12 * g.step) return sol.J[i] + tail;
  // Interpolate on a local window of nodes around s.
  const std::size_t lo = i >= 4 ? i - 4 : 0;
  const std::size_t hi = std::min(sol.J.size() - 1, i + 4);
  std::vector<double> xs, ys;
  for (std::size_t k = lo; k <= hi; ++k) {
    xs.push_back(g.x(k));
    ys.push_back(sol.J[k]);
  }
  const auto spline = numeric::CubicHermite::monotone(std::move(xs), std::move(ys));
  return spline(s) + tail;
}

}  // namespace edgelaw::painleve
