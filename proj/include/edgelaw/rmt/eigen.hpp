#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace edgelaw::rmt {

/// Dense row-major real matrix.
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  explicit RealMatrix(std::size_t size = 0) : n(size), a(size * size, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Dense row-major complex matrix, real and imaginary parts stored apart.
struct ComplexMatrix {
  std::size_t n = 0;
  std::vector<double> re;
  std::vector<double> im;

  explicit ComplexMatrix(std::size_t size = 0) : n(size), re(size * size, 0.0), im(size * size, 0.0) {}
  std::size_t index(std::size_t i, std::size_t j) const { return i * n + j; }
};

class EigenNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_symmetric(const RealMatrix& m);
bool is_hermitian(const ComplexMatrix& m);

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal d and
/// off-diagonal e (e[i] couples i and i+1), by implicit QL with Wilkinson
/// shifts. Sorted descending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e);

/// Householder reduction to tridiagonal form, then tridiagonal_eigenvalues.
/// The input must be symmetric (Hermitian); only its lower triangle is read.
std::vector<double> symmetric_eigenvalues(RealMatrix m);
std::vector<double> hermitian_eigenvalues(ComplexMatrix m);

}  // namespace edgelaw::rmt
