#pragma once

#include <array>
#include <vector>

#include "waylab/numerics.hpp"

// Reference computations written without the library's linear algebra.
namespace oracle {

using waylab::Complex;
using waylab::ComplexMatrix;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest singular value by power iteration on A*A.
double spectral_norm(const ComplexMatrix& a);

/// Eigenvalues (ascending) of a 3x3 Hermitian matrix from its characteristic polynomial.
std::array<double, 3> hermitian3_eigenvalues(const ComplexMatrix& a);

/// Rank by Gaussian elimination with complete pivoting.
std::size_t rank(const ComplexMatrix& a, double tol);

/// Largest singular value of a 2x2 matrix in closed form, free of cancellation at degenerate singular values.
double norm2x2(Complex a, Complex b, Complex c, Complex d);

/// 4 ||[U_alpha, S_n(+) (x) I]|| from the block structure of U_alpha.
double figure2_block_objective(double alpha, const std::array<double, 3>& n);

struct SphereMin {
  double value;
  std::array<double, 3> direction;
};

/// 1-degree grid over the sphere, then nested one-dimensional searches around the best cell.
SphereMin figure2_grid_minimum(double alpha);

/// Minimax on the xz great circle: 2 sqrt2 sin t with tan t = sqrt(1 - a^2) / (a + 1/sqrt2).
double figure2_analytic_minimum(double alpha);

}  // namespace oracle
