#pragma once

#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "edgelaw/distribution/determinants.hpp"
#include "edgelaw/painleve/grid.hpp"

namespace edgelaw::distribution {

constexpr int kMaxEigenvalueIndex = 5;

// Left end of the solve window for laws that do not fit in [-10, 6].
constexpr double kWideWindowLeft = -18.0;

// The automatic backend uses the stencil left of kBlendLeft and the
// variational jets right of kBlendRight, with a C¹ blend in between.
constexpr double kBlendLeft = -2.5;
constexpr double kBlendRight = -1.5;

/// How the λ-derivatives of D_β at λ=1 are obtained.
///  - variational: Taylor jets built from q and its λ-derivatives q_1..q_4.
///    Exact for the discretization, but the jets cancel badly for s ≪ 0.
///  - stencil: finite differences over Painlevé solves at λ ≤ 1. Accurate
///    where D varies strongly in λ, noisy in the right tail.
///  - automatic: stencil on the left, variational on the right.
enum class Backend { automatic, variational, stencil };

const char* backend_name(Backend b);
Backend parse_backend(const std::string& name);

/// [-10, 6] unless F_β(·,m) has visible mass below -10; then [-18, 6].
painleve::SolveGrid default_grid(int beta, int m);

// Steps in ε = λ-1 (β=2,4: nodes 1 - j·h, j = 0..8) or in ε with λ̃ = 1 - ε²
// (β=1: nodes ε = ±j·h, j = 0..4).
struct StencilSteps {
  double coarse;
  double fine;  // used inside the far-left zone
};

struct StencilSettings {
  StencilSteps goe{0.05, 0.0125};
  StencilSteps gue{0.025, 0.00625};
  StencilSteps gse{0.05, 0.00625};
  const StencilSteps& steps(int beta) const { return beta == 1 ? goe : (beta == 2 ? gue : gse); }
};

/// s-interval over which the fine stencil (left) hands over to the coarse one.
std::pair<double, double> fine_stencil_zone(int beta);

/// λ values the stencil backend solves for (β=2,4 nodes and β=1 λ̃ nodes, both steps).
std::vector<double> stencil_lambdas(int beta, const StencilSettings& settings = {});
std::vector<double> all_stencil_lambdas(const StencilSettings& settings = {});

struct EdgeLawOptions {
  std::optional<painleve::SolveGrid> grid;  // default_grid(β, m) when empty
  Backend backend = Backend::automatic;
  StencilSettings stencil;
  SolutionSource source;  // empty: solve directly on `grid`
};

/// F_β(s,m) and its density on the grid. E[k] = F(s,k+1) - F(s,k); F is
/// the sum of the E[k] floored at 0.
struct EdgeLawTable {
  int beta = 2;
  int m = 1;
  painleve::SolveGrid grid;
  std::string backend;
  std::vector<double> s;
  std::vector<double> F;
  std::vector<double> f;
  std::vector<std::vector<double>> E;
  double error_estimate = 0.0;  // max over s of the estimated coefficient error (0 for variational)
};

EdgeLawTable edge_law(int beta, int m, const EdgeLawOptions& options = {});

/// Builds a table from tabulated F (density by monotone cubic slopes).
EdgeLawTable table_from_cdf(int beta, int m, std::vector<double> s, std::vector<double> F);

struct MomentSummary {
  double mean;
  double std_dev;
  double skewness;
  double excess_kurtosis;
};

MomentSummary moments(const EdgeLawTable& table);

/// F at arbitrary s by monotone interpolation, clamped to [0, 1] outside the grid.
double cdf_at(const EdgeLawTable& table, double s);

/// Derivative of the interpolant behind cdf_at (0 outside the grid).
double density_at(const EdgeLawTable& table, double s);
/// s with F(s) = p. Throws std::range_error if p is not inside (F(s_min), F(s_max)).
double quantile(const EdgeLawTable& table, double p);

}  // namespace edgelaw::distribution
