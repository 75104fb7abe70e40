#include "edgelaw/rmt/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace edgelaw::rmt {

bool is_symmetric(const RealMatrix& m) {
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_hermitian(const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.n; ++i) {
    if (m.im[m.index(i, i)] != 0.0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m.re[m.index(i, j)] != m.re[m.index(j, i)] || m.im[m.index(i, j)] != -m.im[m.index(j, i)]) return false;
  }
  return true;
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return d;
  if (static_cast<int>(e.size()) != n - 1) throw std::invalid_argument("tridiagonal_eigenvalues: size mismatch");
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw EigenNonConvergence("tridiagonal_eigenvalues: QL iteration did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i;
      for (i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<double> symmetric_eigenvalues(RealMatrix m) {
  const std::size_t n = m.n;
  std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    // Reflect x = A[k+1:, k] onto alpha·e1.
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += m(i, k) * m(i, k);
    const double x0 = m(k + 1, k);
    const double alpha = -std::copysign(std::sqrt(norm2), x0);
    d[k] = m(k, k);
    e[k] = alpha;
    double vnorm2 = norm2 - x0 * x0 + (x0 - alpha) * (x0 - alpha);
    if (vnorm2 == 0.0) continue;
    const double scale = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = m(i, k) * scale;
    v[k + 1] = (x0 - alpha) * scale;
    // p = 2Bv, K = vᵀp, w = p - Kv, B -= v wᵀ + w vᵀ (lower triangle).
    double K = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = k + 1; j <= i; ++j) acc += m(i, j) * v[j];
      for (std::size_t j = i + 1; j < n; ++j) acc += m(j, i) * v[j];
      p[i] = 2.0 * acc;
      K += v[i] * p[i];
    }
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= K * v[i];
    for (std::size_t i = k + 1; i < n; ++i) {
      double* row = &m.a[i * n];
      const double vi = v[i], wi = p[i];
      for (std::size_t j = k + 1; j <= i; ++j) row[j] -= vi * p[j] + wi * v[j];
    }
  }
  if (n >= 2) {
    d[n - 2] = m(n - 2, n - 2);
    e[n - 2] = m(n - 1, n - 2);
  }
  if (n >= 1) d[n - 1] = m(n - 1, n - 1);
  return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix m) {
  const std::size_t n = m.n;
  std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
  std::vector<double> vr(n), vi(n), pr(n), pi(n);
  auto R = [&](std::size_t i, std::size_t j) -> double& { return m.re[i * n + j]; };
  auto I = [&](std::size_t i, std::size_t j) -> double& { return m.im[i * n + j]; };
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm2 += R(i, k) * R(i, k) + I(i, k) * I(i, k);
    const double xr = R(k + 1, k), xi = I(k + 1, k);
    const double xabs = std::hypot(xr, xi);
    const double norm = std::sqrt(norm2);
    d[k] = R(k, k);
    e[k] = norm;  // |alpha|; the tridiagonal phase does not affect eigenvalues
    if (norm == 0.0) continue;
    // alpha = -e^{i·arg x0}·‖x‖, v = x - alpha·e1.
    const double ur = xabs > 0.0 ? xr / xabs : 1.0, ui = xabs > 0.0 ? xi / xabs : 0.0;
    const double ar = -ur * norm, ai = -ui * norm;
    for (std::size_t i = k + 1; i < n; ++i) {
      vr[i] = R(i, k);
      vi[i] = I(i, k);
    }
    vr[k + 1] -= ar;
    vi[k + 1] -= ai;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += vr[i] * vr[i] + vi[i] * vi[i];
    if (vnorm2 == 0.0) continue;
    const double scale = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) {
      vr[i] *= scale;
      vi[i] *= scale;
    }
    // p = 2Bv using the lower triangle (B_ij = conj(B_ji) above it).
    double K = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double sr = 0.0, si = 0.0;
      for (std::size_t j = k + 1; j <= i; ++j) {
        const double br = R(i, j), bi = I(i, j);
        sr += br * vr[j] - bi * vi[j];
        si += br * vi[j] + bi * vr[j];
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        const double br = R(j, i), bi = -I(j, i);
        sr += br * vr[j] - bi * vi[j];
        si += br * vi[j] + bi * vr[j];
      }
      pr[i] = 2.0 * sr;
      pi[i] = 2.0 * si;
      K += vr[i] * pr[i] + vi[i] * pi[i];  // Re(v^H p); the imaginary part vanishes
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      pr[i] -= K * vr[i];
      pi[i] -= K * vi[i];
    }
    // B -= v w^H + w v^H.
    for (std::size_t i = k + 1; i < n; ++i) {
      double* rr = &m.re[i * n];
      double* ri = &m.im[i * n];
      const double a = vr[i], b = vi[i], c = pr[i], dd = pi[i];
      for (std::size_t j = k + 1; j <= i; ++j) {
        rr[j] -= (a * pr[j] + b * pi[j]) + (c * vr[j] + dd * vi[j]);
        ri[j] -= (b * pr[j] - a * pi[j]) + (dd * vr[j] - c * vi[j]);
      }
    }
  }
  if (n >= 2) {
    d[n - 2] = R(n - 2, n - 2);
    e[n - 2] = std::hypot(R(n - 1, n - 2), I(n - 1, n - 2));
  }
  if (n >= 1) d[n - 1] = R(n - 1, n - 1);
  return tridiagonal_eigenvalues(std::move(d), std::move(e));
}

}  // namespace edgelaw::rmt
