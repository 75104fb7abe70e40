#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgelaw/rmt/eigen.hpp"
#include "edgelaw/rmt/random.hpp"

namespace edgelaw::rmt {

/// Gaussian ensemble parameters. size_n counts eigenvalues returned, i.e.
/// after removing the Kramers doubling for β=4 (the matrix is 2n×2n).
struct EnsembleSpec {
  int beta = 1;
  std::size_t size_n = 1;
  double sigma_d = 1.0;

  /// σ_d = 1 for β=1 (weight e^{-x²/2}), 1/√2 for β=2,4 (weight e^{-x²}).
  static EnsembleSpec standard(int beta, std::size_t n);
  double sigma_o() const;
  /// N in the edge scaling: size_n, or 2·size_n + 1 for β=4 (the symplectic
  /// kernel is built from the first 2n+1 oscillator functions).
  std::size_t edge_dimension() const;
  void validate() const;
};

struct ScaledSample {
  std::vector<double> raw_eigenvalues;
  std::vector<double> scaled;
  std::uint64_t seed = 0;
};

struct WishartSpec {
  std::size_t n = 1;
  std::size_t p = 1;
  double mu_np = 0.0;
  double sigma_np = 0.0;

  static WishartSpec make(std::size_t n, std::size_t p);
  void validate() const;
};

/// Raised when a GSE spectrum is not doubly degenerate.
class PairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RealMatrix goe_matrix(const EnsembleSpec& spec, Stream& rng);
ComplexMatrix gue_matrix(const EnsembleSpec& spec, Stream& rng);
ComplexMatrix gse_matrix(const EnsembleSpec& spec, Stream& rng);  // 2n×2n

/// Eigenvalues, descending.
std::vector<double> sample_goe(const EnsembleSpec& spec, Stream& rng);
std::vector<double> sample_gue(const EnsembleSpec& spec, Stream& rng);
std::vector<double> sample_gse(const EnsembleSpec& spec, Stream& rng);
std::vector<double> sample_dense(const EnsembleSpec& spec, Stream& rng);

/// Dumitriu–Edelman tridiagonal model scaled by σ_d; same eigenvalue law as
/// sample_dense for the same spec.
std::vector<double> sample_tridiagonal(const EnsembleSpec& spec, Stream& rng);

/// Pairs up a doubly degenerate descending spectrum; throws PairingError if
/// some pair gap exceeds tolerance·max|λ|.
std::vector<double> deduplicate_pairs(std::span<const double> eigs, double tolerance = 1e-8);

/// s = (t - 2σ√N)·N^{1/6}/σ, σ = σ_o for β=1 and σ_d otherwise.
std::vector<double> edge_rescale(std::span<const double> eigs, const EnsembleSpec& spec);
double edge_unscale(double s, const EnsembleSpec& spec);

/// Eigenvalues of XᵗX for an n×p standard Gaussian X, scaled by (λ-μ_np)/σ_np.
ScaledSample sample_wishart(const WishartSpec& spec, Stream& rng);

enum class Sampler { dense, tridiagonal };
Sampler parse_sampler(const std::string& name);

/// Runs `reps` independent replications; replication r draws from
/// Stream(seed, r), so results do not depend on the thread count.
std::vector<std::vector<double>> replicate(std::size_t reps, std::uint64_t seed, unsigned threads,
                                           const std::function<std::vector<double>(Stream&)>& body);

/// Top-k scaled eigenvalues per replication.
std::vector<std::vector<double>> edge_campaign(const EnsembleSpec& spec, Sampler sampler, std::size_t reps,
                                               std::size_t top_k, std::uint64_t seed, unsigned threads = 0);
std::vector<std::vector<double>> wishart_campaign(const WishartSpec& spec, std::size_t reps, std::size_t top_k,
                                                  std::uint64_t seed, unsigned threads = 0);

}  // namespace edgelaw::rmt
