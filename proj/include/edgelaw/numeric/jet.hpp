#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace edgelaw::numeric {

// Truncated Taylor series c[0] + c[1]ε + ... + c[N-1]ε^{N-1}.
template <std::size_t N>
struct Jet {
  std::array<double, N> c{};

  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
  static Jet variable() {
    Jet j;
    j.c[0] = 0.0;
    if constexpr (N > 1) j.c[1] = 1.0;
    return j;
  }

  double operator[](std::size_t k) const { return c[k]; }
  double& operator[](std::size_t k) { return c[k]; }

  friend Jet operator+(Jet a, const Jet& b) {
    for (std::size_t k = 0; k < N; ++k) a.c[k] += b.c[k];
    return a;
  }
  friend Jet operator-(Jet a, const Jet& b) {
    for (std::size_t k = 0; k < N; ++k) a.c[k] -= b.c[k];
    return a;
  }
  friend Jet operator*(double s, Jet a) {
    for (auto& v : a.c) v *= s;
    return a;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; i + j < N; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
};

template <std::size_t N>
Jet<N> exp(const Jet<N>& a) {
  Jet<N> r;
  r.c[0] = std::exp(a.c[0]);
  for (std::size_t n = 1; n < N; ++n) {
    double s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += static_cast<double>(k) * a.c[k] * r.c[n - k];
    r.c[n] = s / static_cast<double>(n);
  }
  return r;
}

template <std::size_t N>
Jet<N> cosh(const Jet<N>& a) {
  return 0.5 * (exp(a) + exp(-1.0 * a));
}

template <std::size_t N>
Jet<N> sinh(const Jet<N>& a) {
  return 0.5 * (exp(a) - exp(-1.0 * a));
}

// Requires a[0] > 0.
template <std::size_t N>
Jet<N> sqrt(const Jet<N>& a) {
  Jet<N> r;
  r.c[0] = std::sqrt(a.c[0]);
  for (std::size_t n = 1; n < N; ++n) {
    double s = a.c[n];
    for (std::size_t k = 1; k < n; ++k) s -= r.c[k] * r.c[n - k];
    r.c[n] = s / (2.0 * r.c[0]);
  }
  return r;
}

// Requires a[0] != 0.
template <std::size_t N>
Jet<N> reciprocal(const Jet<N>& a) {
  Jet<N> r;
  r.c[0] = 1.0 / a.c[0];
  for (std::size_t n = 1; n < N; ++n) {
    double s = 0.0;
    for (std::size_t k = 1; k <= n; ++k) s += a.c[k] * r.c[n - k];
    r.c[n] = -s / a.c[0];
  }
  return r;
}

// f(ε) -> f(-ε²).
template <std::size_t N>
Jet<N> substitute_negative_square(const Jet<N>& a) {
  Jet<N> r;
  for (std::size_t k = 0; 2 * k < N; ++k) r.c[2 * k] = (k % 2 == 0 ? 1.0 : -1.0) * a.c[k];
  return r;
}

}  // namespace edgelaw::numeric
