#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "edgelaw/painleve/solver.hpp"

namespace edgelaw::distribution {

using SolutionPtr = std::shared_ptr<const painleve::PainleveSolution>;

/// Supplies the Painlevé solution for a given λ on a fixed grid.
using SolutionSource = std::function<SolutionPtr(double lambda)>;

/// Solves on demand and memoizes by λ. Thread-safe.
class SolutionCache {
 public:
  explicit SolutionCache(painleve::SolveGrid grid = {}) : grid_(grid) {}
  SolutionPtr operator()(double lambda);
  const painleve::SolveGrid& grid() const { return grid_; }

 private:
  painleve::SolveGrid grid_;
  std::mutex mutex_;
  std::map<double, SolutionPtr> solved_;
};

SolutionSource direct_source(const painleve::SolveGrid& grid = {});

// Grid-wide values for one solution.
std::vector<double> d2_values(const painleve::PainleveSolution& sol);
std::vector<double> d4_values(const painleve::PainleveSolution& sol);
/// μ(s,λ) at every grid point (window integral plus Airy tail).
std::vector<double> mu_values(const painleve::PainleveSolution& sol);
/// D1(s,λ) with `tilde` solved at λ̃ = 2λ - λ².
std::vector<double> d1_values(const painleve::PainleveSolution& tilde, double lambda);

/// Pointwise determinants. Values between grid points come from cubic
/// Hermite interpolation of I (slopes I') and monotone interpolation of μ.
class Determinants {
 public:
  explicit Determinants(SolutionSource source) : source_(std::move(source)) {}
  double d2(double s, double lambda) const;
  double d4(double s, double lambda) const;
  double d1(double s, double lambda) const;

 private:
  double integral_I(const painleve::PainleveSolution& sol, double s) const;
  SolutionSource source_;
};

/// λ ∈ [0, 1]; default grid.
double d2(double s, double lambda);
double d4(double s, double lambda);
/// λ ∈ [0, 1.5]; uses q(·, 2λ - λ²).
double d1(double s, double lambda);

}  // namespace edgelaw::distribution
