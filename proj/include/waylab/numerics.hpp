#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace waylab {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

/// Predicate tolerance, relative to max(1, ||A||).
inline constexpr double kTolerance = 1e-10;
/// Singular values below kRankTolerance * sigma_max count as zero.
inline constexpr double kRankTolerance = 1e-9;

/// Dense row-major complex matrix. Operators are square; the probe isometry
/// is the one rectangular case the library builds.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// |a><b|
  static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Side length; throws DimensionMismatch for rectangular matrices.
  std::size_t dim() const;

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  StateVector apply(std::span<const Complex> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Vector helpers.
double norm(std::span<const Complex> v);
/// <a|b>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
StateVector normalized(std::span<const Complex> v);
/// Kronecker product of vectors, left factor slow.
StateVector tensor(std::span<const Complex> a, std::span<const Complex> b);

/// Kronecker product; the left factor indexes the coarse blocks.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest singular value.
double operator_norm(const ComplexMatrix& a);
/// ||[a, b]||, the quantity almost every bound in the library is built from.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Hilbert-Schmidt inner product tr(a* b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are eigenvectors
};

/// Cyclic complex Jacobi. Throws NotHermitian when the symmetry defect
/// exceeds tol * max(1, ||a||).
HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tol = kTolerance);

bool is_hermitian(const ComplexMatrix& a, double tol = kTolerance);
bool is_unitary(const ComplexMatrix& a, double tol = kTolerance);
bool is_projection(const ComplexMatrix& a, double tol = kTolerance);
bool is_positive(const ComplexMatrix& a, double tol = kTolerance);

/// Swap operator H_a (x) H_b -> H_b (x) H_a.
ComplexMatrix swap_operator(std::size_t dim_a, std::size_t dim_b);

// ---------------------------------------------------------------------------
// Real-linear commutant solving.
//
// A point of the parameter space is a tuple of Hermitian matrices with the
// given block dimensions. Each d x d block is coordinatized by the
// Hilbert-Schmidt orthonormal Hermitian basis: E_kk, (E_jk + E_kj)/sqrt2 and
// i(E_jk - E_kj)/sqrt2 for j < k. Orthonormal coordinate vectors therefore
// map to HS-orthonormal tuples.

using HermitianTuple = std::vector<ComplexMatrix>;
using ConstraintMap = std::function<ComplexMatrix(const HermitianTuple&)>;

struct RealLinearBasis {
  std::string ambient_description;
  std::vector<std::size_t> block_dims;
  std::vector<HermitianTuple> basis;
  /// Largest constraint residual over the basis (back-substitution check).
  double max_residual = 0.0;

  std::size_t size() const noexcept { return basis.size(); }
};

std::size_t hermitian_coordinate_count(std::span<const std::size_t> block_dims);
HermitianTuple hermitian_from_coordinates(std::span<const std::size_t> block_dims,
                                          std::span<const double> coords);
std::vector<double> hermitian_coordinates(std::span<const std::size_t> block_dims,
                                          const HermitianTuple& tuple);

/// Orthonormal basis of the joint kernel of real-linear constraint maps.
RealLinearBasis solve_commutant(std::string description,
                                std::vector<std::size_t> block_dims,
                                std::span<const ConstraintMap> constraints,
                                double rank_tol = kRankTolerance);

/// Orthonormal basis of the span of the given tuples (HS inner product),
/// dropping directions below rank_tol relative to the largest.
std::vector<HermitianTuple> orthonormal_span(std::span<const std::size_t> block_dims,
                                             std::span<const HermitianTuple> tuples,
                                             double rank_tol = kRankTolerance);

/// Largest operator-norm residual of the tuple under the constraints.
double constraint_residual(std::span<const ConstraintMap> constraints, const HermitianTuple& tuple);

}  // namespace waylab
