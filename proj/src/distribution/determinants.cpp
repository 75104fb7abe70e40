#include "edgelaw/distribution/determinants.hpp"

#include <cmath>
#include <stdexcept>

#include "edgelaw/specfun/airy.hpp"

namespace edgelaw::distribution {

SolutionPtr SolutionCache::operator()(double lambda) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = solved_.find(lambda); it != solved_.end()) return it->second;
  }
  auto sol = std::make_shared<const painleve::PainleveSolution>(painleve::solve_pii(lambda, grid_));
  std::lock_guard lock(mutex_);
  return solved_.emplace(lambda, std::move(sol)).first->second;
}

SolutionSource direct_source(const painleve::SolveGrid& grid) {
  auto cache = std::make_shared<SolutionCache>(grid);
  return [cache](double lambda) { return (*cache)(lambda); };
}

std::vector<double> d2_values(const painleve::PainleveSolution& sol) {
  std::vector<double> out(sol.I.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(-sol.I[i]);
  return out;
}

std::vector<double> mu_values(const painleve::PainleveSolution& sol) {
  const double tail = sol.lambda == 0.0 ? 0.0 : std::sqrt(sol.lambda) * specfun::airy_integral_tail(sol.grid.s_max);
  std::vector<double> out(sol.J.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sol.J[i] + tail;
  return out;
}

std::vector<double> d4_values(const painleve::PainleveSolution& sol) {
  auto out = d2_values(sol);
  const auto mu = mu_values(sol);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double c = std::cosh(0.5 * mu[i]);
    out[i] *= c * c;
  }
  return out;
}

namespace {

double lambda_tilde(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.5)
    throw std::domain_error("d1: lambda must be in [0, 1.5]");
  return 2.0 * lambda - lambda * lambda;
}

double d1_formula(double d2_tilde, double mu_tilde, double lambda) {
  const double lt = lambda_tilde(lambda);
  return d2_tilde * (lambda - 1.0 - std::cosh(mu_tilde) + std::sqrt(lt) * std::sinh(mu_tilde)) / (lambda - 2.0);
}

}  // namespace

std::vector<double> d1_values(const painleve::PainleveSolution& tilde, double lambda) {
  if (std::abs(tilde.lambda - lambda_tilde(lambda)) > 1e-14)
    throw std::invalid_argument("d1_values: solution is not at 2*lambda - lambda^2");
  const auto d2 = d2_values(tilde);
  const auto mu = mu_values(tilde);
  std::vector<double> out(d2.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d1_formula(d2[i], mu[i], lambda);
  return out;
}

double Determinants::integral_I(const painleve::PainleveSolution& sol, double s) const {
  const auto& g = sol.grid;
  if (!(s >= g.s_min && s <= g.s_max)) throw std::out_of_range("determinant: s outside the solve window");
  const std::size_t n = sol.I.size();
  std::size_t k = static_cast<std::size_t>((s - g.s_min) / g.step);
  if (k >= n - 1) k = n - 2;
  const double x0 = g.x(k), h = g.step;
  const double u = (s - x0) / h;
  const double u2 = u * u, u3 = u2 * u;
  return (2.0 * u3 - 3.0 * u2 + 1.0) * sol.I[k] + (u3 - 2.0 * u2 + u) * h * sol.I_prime[k] +
         (-2.0 * u3 + 3.0 * u2) * sol.I[k + 1] + (u3 - u2) * h * sol.I_prime[k + 1];
}

double Determinants::d2(double s, double lambda) const {
  const auto sol = source_(lambda);
  return std::exp(-integral_I(*sol, s));
}

double Determinants::d4(double s, double lambda) const {
  const auto sol = source_(lambda);
  const double c = std::cosh(0.5 * painleve::mu_of(*sol, s));
  return std::exp(-integral_I(*sol, s)) * c * c;
}

double Determinants::d1(double s, double lambda) const {
  const double lt = lambda_tilde(lambda);
  const auto sol = source_(lt);
  return d1_formula(std::exp(-integral_I(*sol, s)), painleve::mu_of(*sol, s), lambda);
}

namespace {

const Determinants& default_determinants() {
  static const Determinants instance(direct_source());
  return instance;
}

}  // namespace

double d2(double s, double lambda) { return default_determinants().d2(s, lambda); }
double d4(double s, double lambda) { return default_determinants().d4(s, lambda); }
double d1(double s, double lambda) { return default_determinants().d1(s, lambda); }

}  // namespace edgelaw::distribution
