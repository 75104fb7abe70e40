#include "edgelaw/distribution/edge_law.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "edgelaw/numeric/finite_difference.hpp"
#include "edgelaw/numeric/jet.hpp"
#include "edgelaw/numeric/pchip.hpp"
#include "edgelaw/numeric/quadrature.hpp"

namespace edgelaw::distribution {

namespace {

constexpr std::size_t kJet = kMaxEigenvalueIndex;
using Jet = numeric::Jet<kJet>;

void check_arguments(int beta, int m) {
  if (beta != 1 && beta != 2 && beta != 4) throw std::invalid_argument("edge_law: beta must be 1, 2 or 4");
  if (m < 1 || m > kMaxEigenvalueIndex) throw std::invalid_argument("edge_law: m must be in 1..5");
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

// Taylor coefficients in ε = λ-1 of I(s,λ) and μ(s,λ) at every grid point.
struct JetArrays {
  std::vector<Jet> I;
  std::vector<Jet> mu;
};

JetArrays variational_jets(const painleve::PainleveSolution& base, int order) {
  const std::size_t n = base.q.size();
  const auto& g = base.grid;
  std::vector<std::vector<double>> qs{base.q};
  std::vector<painleve::PainleveDerivatives> derivs;
  if (order >= 1) {
    derivs = painleve::solve_pii_derivatives(base, order);
    for (const auto& d : derivs) qs.push_back(d.q_n);
  }
  const auto tails = painleve::airy_tails(g.s_max);

  JetArrays out{std::vector<Jet>(n), std::vector<Jet>(n)};
  const auto mu0 = mu_values(base);
  for (std::size_t i = 0; i < n; ++i) {
    out.I[i][0] = base.I[i];
    out.mu[i][0] = mu0[i];
  }
  for (int k = 1; k <= order; ++k) {
    const double kf = factorial(k);
    for (std::size_t i = 0; i < n; ++i) out.mu[i][k] = derivs[k - 1].M_n[i] / kf;
    // (q²)^{(k)} = Σ_j C(k,j) q_j q_{k-j}; pair terms j and k-j together.
    std::vector<double> acc(n, 0.0);
    for (int j = 0; 2 * j <= k; ++j) {
      const double weight = (2 * j == k ? 1.0 : 2.0) * binomial(k, j);
      const double c = painleve::sqrt_lambda_derivative(j) * painleve::sqrt_lambda_derivative(k - j);
      std::vector<double> prod(n);
      for (std::size_t i = 0; i < n; ++i) prod[i] = qs[j][i] * qs[k - j][i];
      const auto t = painleve::tail_integrals(prod, g.step, c * tails.ai_squared, c * tails.ai_squared_moment);
      for (std::size_t i = 0; i < n; ++i) acc[i] += weight * t.second[i];
    }
    for (std::size_t i = 0; i < n; ++i) out.I[i][k] = acc[i] / kf;
  }
  return out;
}

// Taylor coefficients of D_2, D_4^{1/2} or D_1^{1/2} in ε at one s.
Jet generating_jet(int beta, const Jet& I, const Jet& mu) {
  if (beta == 2) return numeric::exp(-1.0 * I);
  if (beta == 4) return numeric::exp(-0.5 * I) * numeric::cosh(0.5 * mu);
  // β=1: exp(-Ĩ/2)[cosh(μ̃/2) - √((1+ε)/(1-ε)) sinh(μ̃/2)] with λ̃ - 1 = -ε².
  const Jet It = numeric::substitute_negative_square(I);
  const Jet mt = numeric::substitute_negative_square(mu);
  const Jet eps = Jet::variable();
  const Jet ratio = (Jet::constant(1.0) + eps) * numeric::reciprocal(Jet::constant(1.0) - eps);
  return numeric::exp(-0.5 * It) * (numeric::cosh(0.5 * mt) - numeric::sqrt(ratio) * numeric::sinh(0.5 * mt));
}

double d1_half(double I_tilde, double mu_tilde, double eps) {
  return std::exp(-0.5 * I_tilde) *
         (std::cosh(0.5 * mu_tilde) - std::sqrt((1.0 + eps) / (1.0 - eps)) * std::sinh(0.5 * mu_tilde));
}

// coefficients[k][i] = k-th Taylor coefficient at s_i.
using Coefficients = std::vector<std::vector<double>>;

Coefficients variational_coefficients(int beta, int m, const SolutionSource& source) {
  const auto base = source(1.0);
  const int order = beta == 1 ? std::min(m - 1, 2) : m - 1;
  const JetArrays jets = variational_jets(*base, order);
  const std::size_t n = base->q.size();
  Coefficients out(m, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Jet d = generating_jet(beta, jets.I[i], jets.mu[i]);
    for (int k = 0; k < m; ++k) out[k][i] = d[k];
  }
  return out;
}

// One stencil pass with step h (in ε for β=1, in λ otherwise).
Coefficients stencil_pass(int beta, int m, const SolutionSource& source, double h, std::vector<double>& error) {
  std::vector<double> eps;
  std::vector<std::vector<double>> values;
  if (beta == 1) {
    for (int j = -4; j <= 4; ++j) eps.push_back(j * h);
    for (double e : eps) {
      const auto sol = source(1.0 - e * e);
      const auto mu = mu_values(*sol);
      std::vector<double> v(mu.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = d1_half(sol->I[i], mu[i], e);
      values.push_back(std::move(v));
    }
  } else {
    for (int j = 0; j <= 8; ++j) eps.push_back(-j * h);
    for (double e : eps) {
      const auto sol = source(1.0 + e);
      if (beta == 2) {
        values.push_back(d2_values(*sol));
      } else {
        auto v = d4_values(*sol);
        for (double& x : v) x = std::sqrt(x);
        values.push_back(std::move(v));
      }
    }
  }
  // Reduced stencil for the error estimate: drop the farthest node(s).
  std::vector<std::size_t> reduced;
  for (std::size_t j = 0; j < eps.size(); ++j)
    if (beta == 1 ? std::abs(eps[j]) < 3.5 * h : j + 1 < eps.size()) reduced.push_back(j);
  std::vector<double> reduced_eps;
  for (std::size_t j : reduced) reduced_eps.push_back(eps[j]);

  const auto w = numeric::fornberg_weights(0.0, eps, m - 1);
  const auto wr = numeric::fornberg_weights(0.0, reduced_eps, m - 1);
  const std::size_t n = values[0].size();
  Coefficients out(m, std::vector<double>(n, 0.0));
  error.assign(n, 0.0);
  for (int k = 0; k < m; ++k) {
    const double kf = factorial(k);
    for (std::size_t i = 0; i < n; ++i) {
      double full = 0.0, part = 0.0;
      for (std::size_t j = 0; j < eps.size(); ++j) full += w[k][j] * values[j][i];
      for (std::size_t r = 0; r < reduced.size(); ++r) part += wr[k][r] * values[reduced[r]][i];
      out[k][i] = full / kf;
      error[i] = std::max(error[i], std::abs(full - part) / kf);
    }
  }
  return out;
}

// C¹ weight: 0 for s <= a, 1 for s >= b.
double blend_weight(double s, double a, double b) {
  if (s <= a) return 0.0;
  if (s >= b) return 1.0;
  const double u = (s - a) / (b - a);
  return u * u * (3.0 - 2.0 * u);
}

// Far left, D(s,·) carries weight on powers (1-λ)^j with j > 8 that a
// 9-node stencil aliases into the low coefficients; a finer step takes over there.
Coefficients stencil_coefficients(int beta, int m, const SolutionSource& source, const painleve::SolveGrid& grid,
                                  const StencilSettings& st, std::vector<double>& error) {
  Coefficients coef = stencil_pass(beta, m, source, st.steps(beta).coarse, error);
  const auto zone = fine_stencil_zone(beta);
  if (grid.s_min >= zone.second) return coef;
  std::vector<double> fine_error;
  const Coefficients fine = stencil_pass(beta, m, source, st.steps(beta).fine, fine_error);
  for (std::size_t i = 0; i < error.size(); ++i) {
    const double w = blend_weight(grid.x(i), zone.first, zone.second);
    if (w == 1.0) continue;
    for (int k = 0; k < m; ++k) coef[k][i] = w * coef[k][i] + (1.0 - w) * fine[k][i];
    error[i] = w == 0.0 ? fine_error[i] : std::max(error[i], fine_error[i]);
  }
  return coef;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::variational:
      return "variational";
    case Backend::stencil:
      return "stencil";
    default:
      return "hybrid";
  }
}

Backend parse_backend(const std::string& name) {
  if (name == "variational") return Backend::variational;
  if (name == "stencil") return Backend::stencil;
  if (name == "automatic" || name == "auto" || name == "hybrid") return Backend::automatic;
  throw std::invalid_argument("unknown backend '" + name + "'");
}

painleve::SolveGrid default_grid(int beta, int m) {
  check_arguments(beta, m);
  painleve::SolveGrid g;
  if ((beta == 4 && m >= 3) || m >= 5) g.s_min = kWideWindowLeft;
  return g;
}

std::pair<double, double> fine_stencil_zone(int beta) {
  if (beta == 1) return {-12.0, -10.5};
  if (beta == 2) return {-10.0, -9.0};
  return {-16.0, -15.0};
}

std::vector<double> stencil_lambdas(int beta, const StencilSettings& st) {
  std::vector<double> out;
  for (double h : {st.steps(beta).coarse, st.steps(beta).fine}) {
    if (beta == 1) {
      for (int j = 0; j <= 4; ++j) out.push_back(1.0 - (j * h) * (j * h));
    } else {
      for (int j = 0; j <= 8; ++j) out.push_back(1.0 - j * h);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> all_stencil_lambdas(const StencilSettings& st) {
  auto out = stencil_lambdas(2, st);
  for (int beta : {1, 4})
    for (double l : stencil_lambdas(beta, st)) out.push_back(l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeLawTable edge_law(int beta, int m, const EdgeLawOptions& options) {
  check_arguments(beta, m);
  const painleve::SolveGrid grid = options.grid ? *options.grid : default_grid(beta, m);
  grid.validate();
  const SolutionSource source = options.source ? options.source : direct_source(grid);
  if (source(1.0)->grid != grid) throw std::invalid_argument("edge_law: solution source grid differs from table grid");

  std::vector<double> error;
  Coefficients coef;
  if (options.backend == Backend::variational) {
    coef = variational_coefficients(beta, m, source);
  } else if (options.backend == Backend::stencil) {
    coef = stencil_coefficients(beta, m, source, grid, options.stencil, error);
  } else {
    coef = stencil_coefficients(beta, m, source, grid, options.stencil, error);
    const Coefficients var = variational_coefficients(beta, m, source);
    for (std::size_t i = 0; i < error.size(); ++i) {
      const double w = blend_weight(grid.x(i), kBlendLeft, kBlendRight);
      double worst = 0.0;
      for (int k = 0; k < m; ++k) {
        worst = std::max(worst, std::abs(var[k][i] - coef[k][i]));
        coef[k][i] = (1.0 - w) * coef[k][i] + w * var[k][i];
      }
      // Inside the blend zone the two backends' disagreement bounds the error.
      error[i] = w == 0.0 ? error[i] : (w == 1.0 ? 0.0 : std::max(error[i], worst));
    }
  }
  const std::size_t n = coef[0].size();

  EdgeLawTable t;
  t.beta = beta;
  t.m = m;
  t.grid = grid;
  t.backend = backend_name(options.backend);
  t.s = grid.points();
  t.E.assign(m, std::vector<double>(n));
  t.F.assign(n, 0.0);
  for (int k = 0; k < m; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      t.E[k][i] = sign * coef[k][i];
      t.F[i] += t.E[k][i];
    }
  }
  for (double& F : t.F) F = std::max(F, 0.0);
  t.f = numeric::pchip_slopes(t.s, t.F);
  for (double e : error) t.error_estimate = std::max(t.error_estimate, e);
  return t;
}

EdgeLawTable table_from_cdf(int beta, int m, std::vector<double> s, std::vector<double> F) {
  EdgeLawTable t;
  t.beta = beta;
  t.m = m;
  t.backend = "tabulated";
  t.f = numeric::pchip_slopes(s, F);
  t.s = std::move(s);
  t.F = std::move(F);
  return t;
}

MomentSummary moments(const EdgeLawTable& table) {
  const std::size_t n = table.s.size();
  if (n < 4 || table.f.size() != n) throw std::invalid_argument("moments: table too small or inconsistent");
  const double h = table.s[1] - table.s[0];
  std::vector<double> g(n);
  auto integrate = [&](auto&& weight) {
    for (std::size_t i = 0; i < n; ++i) g[i] = weight(table.s[i]) * table.f[i];
    return numeric::simpson(g, h);
  };
  const double mass = integrate([](double) { return 1.0; });
  const double mean = integrate([](double x) { return x; }) / mass;
  const double m2 = integrate([&](double x) { return (x - mean) * (x - mean); }) / mass;
  const double m3 = integrate([&](double x) { return std::pow(x - mean, 3); }) / mass;
  const double m4 = integrate([&](double x) { return std::pow(x - mean, 4); }) / mass;
  if (!(m2 > 0.0)) throw std::domain_error("moments: nonpositive variance");
  const double sd = std::sqrt(m2);
  return {mean, sd, m3 / (m2 * sd), m4 / (m2 * m2) - 3.0};
}

double cdf_at(const EdgeLawTable& table, double s) {
  if (s <= table.s.front()) return s < table.s.front() ? 0.0 : table.F.front();
  if (s >= table.s.back()) return s > table.s.back() ? 1.0 : table.F.back();
  const auto it = std::upper_bound(table.s.begin(), table.s.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - table.s.begin()) - 1;
  const double h = table.s[k + 1] - table.s[k];
  const double u = (s - table.s[k]) / h;
  const double u2 = u * u, u3 = u2 * u;
  return (2.0 * u3 - 3.0 * u2 + 1.0) * table.F[k] + (u3 - 2.0 * u2 + u) * h * table.f[k] +
         (-2.0 * u3 + 3.0 * u2) * table.F[k + 1] + (u3 - u2) * h * table.f[k + 1];
}

double density_at(const EdgeLawTable& table, double s) {
  if (s < table.s.front() || s > table.s.back()) return 0.0;
  if (s == table.s.back()) return table.f.back();
  const auto it = std::upper_bound(table.s.begin(), table.s.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - table.s.begin()) - 1;
  const double h = table.s[k + 1] - table.s[k];
  const double u = (s - table.s[k]) / h;
  const double u2 = u * u;
  return (6.0 * u2 - 6.0 * u) / h * table.F[k] + (3.0 * u2 - 4.0 * u + 1.0) * table.f[k] +
         (-6.0 * u2 + 6.0 * u) / h * table.F[k + 1] + (3.0 * u2 - 2.0 * u) * table.f[k + 1];
}

double quantile(const EdgeLawTable& table, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::range_error("quantile: p must be in (0, 1)");
  if (!(p > table.F.front() && p < table.F.back()))
    throw std::range_error("quantile: p outside the tabulated range of F");
  // First node with F >= p, then bisection on the interpolant within that interval.
  std::size_t hi = 1;
  while (hi < table.F.size() - 1 && table.F[hi] < p) ++hi;
  double a = table.s[hi - 1], b = table.s[hi];
  for (int it = 0; it < 200 && b - a > 1e-14 * (1.0 + std::abs(a)); ++it) {
    const double mid = 0.5 * (a + b);
    (cdf_at(table, mid) < p ? a : b) = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace edgelaw::distribution
