#include "edgelaw/rmt/ensembles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace edgelaw::rmt {

namespace {

void require_beta(const EnsembleSpec& spec, int beta, const char* who) {
  spec.validate();
  if (spec.beta != beta) throw std::invalid_argument(std::string(who) + ": wrong beta in spec");
}

std::vector<double> top(std::vector<double> v, std::size_t k) {
  if (v.size() > k) v.resize(k);
  return v;
}

}  // namespace

EnsembleSpec EnsembleSpec::standard(int beta, std::size_t n) {
  EnsembleSpec s;
  s.beta = beta;
  s.size_n = n;
  s.sigma_d = beta == 1 ? 1.0 : 1.0 / std::sqrt(2.0);
  s.validate();
  return s;
}

double EnsembleSpec::sigma_o() const { return sigma_d / std::sqrt(2.0); }

std::size_t EnsembleSpec::edge_dimension() const { return beta == 4 ? 2 * size_n + 1 : size_n; }

void EnsembleSpec::validate() const {
  if (beta != 1 && beta != 2 && beta != 4) throw std::invalid_argument("EnsembleSpec: beta must be 1, 2 or 4");
  if (size_n < 1) throw std::invalid_argument("EnsembleSpec: size_n must be at least 1");
  if (!(sigma_d > 0.0) || !std::isfinite(sigma_d)) throw std::invalid_argument("EnsembleSpec: sigma_d must be positive");
}

WishartSpec WishartSpec::make(std::size_t n, std::size_t p) {
  WishartSpec w;
  w.n = n;
  w.p = p;
  if (n < 2 || p < 1 || n < p) throw std::invalid_argument("WishartSpec: need n >= p >= 1 and n >= 2");
  const double a = std::sqrt(static_cast<double>(n) - 1.0), b = std::sqrt(static_cast<double>(p));
  w.mu_np = (a + b) * (a + b);
  w.sigma_np = (a + b) * std::cbrt(1.0 / a + 1.0 / b);
  return w;
}

void WishartSpec::validate() const {
  const WishartSpec ref = make(n, p);
  if (ref.mu_np != mu_np || ref.sigma_np != sigma_np)
    throw std::invalid_argument("WishartSpec: mu_np/sigma_np inconsistent with n, p");
}

RealMatrix goe_matrix(const EnsembleSpec& spec, Stream& rng) {
  require_beta(spec, 1, "goe_matrix");
  const std::size_t n = spec.size_n;
  RealMatrix x(n);
  for (double& v : x.a) v = spec.sigma_d * rng.normal();
  RealMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (x(i, j) + x(j, i));
  return a;
}

ComplexMatrix gue_matrix(const EnsembleSpec& spec, Stream& rng) {
  require_beta(spec, 2, "gue_matrix");
  const std::size_t n = spec.size_n;
  ComplexMatrix x(n);
  for (std::size_t k = 0; k < n * n; ++k) {
    x.re[k] = spec.sigma_d * rng.normal();
    x.im[k] = spec.sigma_d * rng.normal();
  }
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a.re[a.index(i, j)] = 0.5 * (x.re[x.index(i, j)] + x.re[x.index(j, i)]);
      a.im[a.index(i, j)] = 0.5 * (x.im[x.index(i, j)] - x.im[x.index(j, i)]);
    }
  return a;
}

ComplexMatrix gse_matrix(const EnsembleSpec& spec, Stream& rng) {
  require_beta(spec, 4, "gse_matrix");
  const std::size_t n = spec.size_n;
  ComplexMatrix x(n), y(n);
  for (std::size_t k = 0; k < n * n; ++k) {
    x.re[k] = spec.sigma_d * rng.normal();
    x.im[k] = spec.sigma_d * rng.normal();
  }
  for (std::size_t k = 0; k < n * n; ++k) {
    y.re[k] = spec.sigma_d * rng.normal();
    y.im[k] = spec.sigma_d * rng.normal();
  }
  // [X Y; -conj(Y) conj(X)], then (A + Aᴴ)/2.
  ComplexMatrix raw(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = x.index(i, j);
      raw.re[raw.index(i, j)] = x.re[k];
      raw.im[raw.index(i, j)] = x.im[k];
      raw.re[raw.index(i, j + n)] = y.re[k];
      raw.im[raw.index(i, j + n)] = y.im[k];
      raw.re[raw.index(i + n, j)] = -y.re[k];
      raw.im[raw.index(i + n, j)] = y.im[k];
      raw.re[raw.index(i + n, j + n)] = x.re[k];
      raw.im[raw.index(i + n, j + n)] = -x.im[k];
    }
  ComplexMatrix a(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      a.re[a.index(i, j)] = 0.5 * (raw.re[raw.index(i, j)] + raw.re[raw.index(j, i)]);
      a.im[a.index(i, j)] = 0.5 * (raw.im[raw.index(i, j)] - raw.im[raw.index(j, i)]);
    }
  return a;
}

std::vector<double> sample_goe(const EnsembleSpec& spec, Stream& rng) {
  RealMatrix a = goe_matrix(spec, rng);
  if (!is_symmetric(a)) throw std::logic_error("sample_goe: matrix not symmetric");
  return symmetric_eigenvalues(std::move(a));
}

std::vector<double> sample_gue(const EnsembleSpec& spec, Stream& rng) {
  ComplexMatrix a = gue_matrix(spec, rng);
  if (!is_hermitian(a)) throw std::logic_error("sample_gue: matrix not Hermitian");
  return hermitian_eigenvalues(std::move(a));
}

std::vector<double> sample_gse(const EnsembleSpec& spec, Stream& rng) {
  ComplexMatrix a = gse_matrix(spec, rng);
  if (!is_hermitian(a)) throw std::logic_error("sample_gse: matrix not Hermitian");
  const std::size_t n = spec.size_n;
  // Self-duality: lower-right block is the conjugate of the upper-left, upper-right antisymmetric.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.re[a.index(i, j)] != a.re[a.index(i + n, j + n)] || a.im[a.index(i, j)] != -a.im[a.index(i + n, j + n)] ||
          a.re[a.index(i, j + n)] != -a.re[a.index(j, i + n)] || a.im[a.index(i, j + n)] != -a.im[a.index(j, i + n)])
        throw std::logic_error("sample_gse: matrix not self-dual");
    }
  const auto eigs = hermitian_eigenvalues(std::move(a));
  return deduplicate_pairs(eigs);
}

std::vector<double> sample_dense(const EnsembleSpec& spec, Stream& rng) {
  switch (spec.beta) {
    case 1:
      return sample_goe(spec, rng);
    case 2:
      return sample_gue(spec, rng);
    case 4:
      return sample_gse(spec, rng);
    default:
      spec.validate();
      return {};
  }
}

std::vector<double> sample_tridiagonal(const EnsembleSpec& spec, Stream& rng) {
  spec.validate();
  const std::size_t n = spec.size_n;
  // H_β = (1/√2)·tridiag(N(0,2), χ_{β(n-i)}); eigenvalue density ∝ |Δ|^β e^{-Σλ²/2}.
  const double c = spec.sigma_d / std::sqrt(2.0);
  std::vector<double> d(n), e(n - 1);
  for (std::size_t i = 0; i < n; ++i) d[i] = c * std::sqrt(2.0) * rng.normal();
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = c * rng.chi(static_cast<double>(spec.beta) * static_cast<double>(n - 1 - i));
  return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

std::vector<double> deduplicate_pairs(std::span<const double> eigs, double tolerance) {
  if (eigs.size() % 2 != 0) throw PairingError("deduplicate_pairs: odd number of eigenvalues");
  double radius = 0.0;
  for (double v : eigs) radius = std::max(radius, std::abs(v));
  std::vector<double> out(eigs.size() / 2);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double a = eigs[2 * k], b = eigs[2 * k + 1];
    if (std::abs(a - b) > tolerance * radius)
      throw PairingError("deduplicate_pairs: pair " + std::to_string(k) + " gap " + std::to_string(std::abs(a - b)) +
                         " exceeds tolerance");
    out[k] = 0.5 * (a + b);
  }
  return out;
}

std::vector<double> edge_rescale(std::span<const double> eigs, const EnsembleSpec& spec) {
  spec.validate();
  const double N = static_cast<double>(spec.edge_dimension());
  const double sigma = spec.beta == 1 ? spec.sigma_o() : spec.sigma_d;
  const double centre = 2.0 * sigma * std::sqrt(N);
  const double factor = std::pow(N, 1.0 / 6.0) / sigma;
  std::vector<double> out(eigs.size());
  for (std::size_t i = 0; i < eigs.size(); ++i) out[i] = (eigs[i] - centre) * factor;
  return out;
}

double edge_unscale(double s, const EnsembleSpec& spec) {
  spec.validate();
  const double N = static_cast<double>(spec.edge_dimension());
  const double sigma = spec.beta == 1 ? spec.sigma_o() : spec.sigma_d;
  return 2.0 * sigma * std::sqrt(N) + sigma * s / std::pow(N, 1.0 / 6.0);
}

ScaledSample sample_wishart(const WishartSpec& spec, Stream& rng) {
  spec.validate();
  const std::size_t n = spec.n, p = spec.p;
  std::vector<double> x(n * p);
  for (double& v : x) v = rng.normal();
  RealMatrix a(p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r) acc += x[r * p + i] * x[r * p + j];
      a(i, j) = acc;
      a(j, i) = acc;
    }
  ScaledSample out;
  out.seed = rng.seed();
  out.raw_eigenvalues = symmetric_eigenvalues(std::move(a));
  out.scaled.resize(p);
  for (std::size_t i = 0; i < p; ++i) out.scaled[i] = (out.raw_eigenvalues[i] - spec.mu_np) / spec.sigma_np;
  return out;
}

Sampler parse_sampler(const std::string& name) {
  if (name == "dense") return Sampler::dense;
  if (name == "tridiagonal" || name == "tridiag") return Sampler::tridiagonal;
  throw std::invalid_argument("unknown sampler '" + name + "'");
}

std::vector<std::vector<double>> replicate(std::size_t reps, std::uint64_t seed, unsigned threads,
                                           const std::function<std::vector<double>(Stream&)>& body) {
  std::vector<std::vector<double>> out(reps);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(reps, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t r; (r = next.fetch_add(1)) < reps;) {
      try {
        Stream rng(seed, r);
        out[r] = body(rng);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = reps;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<std::vector<double>> edge_campaign(const EnsembleSpec& spec, Sampler sampler, std::size_t reps,
                                               std::size_t top_k, std::uint64_t seed, unsigned threads) {
  spec.validate();
  return replicate(reps, seed, threads, [&](Stream& rng) {
    auto eigs = sampler == Sampler::dense ? sample_dense(spec, rng) : sample_tridiagonal(spec, rng);
    return top(edge_rescale(eigs, spec), top_k);
  });
}

std::vector<std::vector<double>> wishart_campaign(const WishartSpec& spec, std::size_t reps, std::size_t top_k,
                                                  std::uint64_t seed, unsigned threads) {
  spec.validate();
  return replicate(reps, seed, threads, [&](Stream& rng) { return top(sample_wishart(spec, rng).scaled, top_k); });
}

}  // namespace edgelaw::rmt
