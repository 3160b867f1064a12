#include "waylab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "waylab/error.hpp"
#include "detail/linalg.hpp"

namespace waylab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorCode::InvalidObservable: return "InvalidObservable";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::UnknownOutcome: return "UnknownOutcome";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSharpProgram: return "NotSharpProgram";
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Io: return "Io";
    case ErrorCode::NumericFailure: return "NumericFailure";
  }
  return "Unknown";
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()) + " differ");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "matrix entry count does not match its shape");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(data));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

std::size_t ComplexMatrix::dim() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  return rows_;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

StateVector ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  StateVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions differ");
  }
  ComplexMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "inner product length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

StateVector normalized(std::span<const Complex> v) {
  const double n = norm(v);
  if (n == 0.0) throw Error(ErrorCode::InvalidState, "cannot normalize the zero vector");
  StateVector out(v.begin(), v.end());
  for (auto& z : out) z /= n;
  return out;
}

StateVector tensor(std::span<const Complex> a, std::span<const Complex> b) {
  StateVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  ComplexMatrix m(a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) m(i * br + k, j * bc + l) = aij * b(k, l);
    }
  return m;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator needs square matrices of equal dimension");
  }
  return a * b - b * a;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(a));
  return svd.singularValues()(0);
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return operator_norm(commutator(a, b));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    s += std::conj(a.entries()[i]) * b.entries()[i];
  return s;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorCode::NotHermitian, "hermitian_eigen: input symmetry defect exceeds tolerance");
  }
  return detail::hermitian_part_eigen(a);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return operator_norm(a - a.adjoint()) <= tol * std::max(1.0, operator_norm(a));
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return operator_norm(a.adjoint() * a - ComplexMatrix::identity(a.rows())) <= tol;
}

bool is_projection(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return operator_norm(a * a - a) <= tol * std::max(1.0, operator_norm(a));
}

bool is_positive(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return detail::hermitian_part_eigenvalues(a).front() >= -tol * std::max(1.0, operator_norm(a));
}

ComplexMatrix swap_operator(std::size_t dim_a, std::size_t dim_b) {
  const std::size_t n = dim_a * dim_b;
  ComplexMatrix s(n, n);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) s(j * dim_a + i, i * dim_b + j) = 1.0;
  return s;
}

}  // namespace waylab
