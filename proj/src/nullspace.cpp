#include <algorithm>
#include <cmath>

#include "detail/linalg.hpp"
#include "waylab/error.hpp"
#include "waylab/numerics.hpp"

namespace waylab {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::size_t block_coordinate_count(std::size_t d) { return d * d; }

void check_tuple_shape(std::span<const std::size_t> block_dims, const HermitianTuple& tuple) {
  if (tuple.size() != block_dims.size()) {
    throw Error(ErrorCode::DimensionMismatch, "tuple has the wrong number of blocks");
  }
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    if (tuple[b].rows() != block_dims[b] || tuple[b].cols() != block_dims[b]) {
      throw Error(ErrorCode::DimensionMismatch, "tuple block has the wrong dimension");
    }
  }
}

}  // namespace

std::size_t hermitian_coordinate_count(std::span<const std::size_t> block_dims) {
  std::size_t n = 0;
  for (auto d : block_dims) n += block_coordinate_count(d);
  return n;
}

HermitianTuple hermitian_from_coordinates(std::span<const std::size_t> block_dims,
                                          std::span<const double> coords) {
  if (coords.size() != hermitian_coordinate_count(block_dims)) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector has the wrong length");
  }
  HermitianTuple out;
  std::size_t pos = 0;
  for (auto d : block_dims) {
    ComplexMatrix h(d, d);
    for (std::size_t k = 0; k < d; ++k) h(k, k) = coords[pos++];
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        const double re = coords[pos++] * kInvSqrt2;
        const double im = coords[pos++] * kInvSqrt2;
        h(j, k) = Complex(re, im);
        h(k, j) = Complex(re, -im);
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<double> hermitian_coordinates(std::span<const std::size_t> block_dims,
                                          const HermitianTuple& tuple) {
  check_tuple_shape(block_dims, tuple);
  std::vector<double> coords;
  coords.reserve(hermitian_coordinate_count(block_dims));
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    const auto d = block_dims[b];
    // Project onto the Hermitian part so near-Hermitian input is handled consistently.
    const auto& h = tuple[b];
    for (std::size_t k = 0; k < d; ++k) coords.push_back(h(k, k).real());
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        const Complex upper = 0.5 * (h(j, k) + std::conj(h(k, j)));
        coords.push_back(upper.real() / kInvSqrt2);
        coords.push_back(upper.imag() / kInvSqrt2);
      }
    }
  }
  return coords;
}

double constraint_residual(std::span<const ConstraintMap> constraints, const HermitianTuple& tuple) {
  double r = 0.0;
  for (const auto& c : constraints) r = std::max(r, operator_norm(c(tuple)));
  return r;
}

RealLinearBasis solve_commutant(std::string description, std::vector<std::size_t> block_dims,
                                std::span<const ConstraintMap> constraints, double rank_tol) {
  const std::size_t n = hermitian_coordinate_count(block_dims);

  // Images of the coordinate basis, one column per coordinate.
  std::vector<std::vector<double>> columns(n);
  std::vector<double> unit(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    unit.assign(n, 0.0);
    unit[j] = 1.0;
    const auto tuple = hermitian_from_coordinates(block_dims, unit);
    for (const auto& c : constraints) {
      const ComplexMatrix image = c(tuple);
      for (const auto& z : image.entries()) {
        columns[j].push_back(z.real());
        columns[j].push_back(z.imag());
      }
    }
  }
  const std::size_t m = n == 0 ? 0 : columns[0].size();
  Eigen::MatrixXd a(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != m) {
      throw Error(ErrorCode::NumericFailure, "constraint map output size is not fixed");
    }
    for (std::size_t i = 0; i < m; ++i) a(i, j) = columns[j][i];
  }

  RealLinearBasis out;
  out.ambient_description = std::move(description);
  out.block_dims = block_dims;

  // Right singular vectors beyond the numerical rank span the kernel.
  Eigen::MatrixXd kernel = Eigen::MatrixXd::Identity(n, n);
  double sigma_max = 0.0;
  if (m > 0 && n > 0) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    sigma_max = sv(0);
    Eigen::Index rank = 0;
    if (sigma_max > 0.0)
      while (rank < sv.size() && sv(rank) >= rank_tol * sigma_max) ++rank;
    kernel = svd.matrixV().rightCols(static_cast<Eigen::Index>(n) - rank);
  }

  std::vector<double> coords(n);
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) coords[i] = kernel(i, j);
    auto tuple = hermitian_from_coordinates(out.block_dims, coords);
    out.max_residual = std::max(out.max_residual, constraint_residual(constraints, tuple));
    out.basis.push_back(std::move(tuple));
  }
  if (out.max_residual > rank_tol * std::max(1.0, sigma_max)) {
    throw Error(ErrorCode::NumericFailure,
                "commutant basis failed back-substitution (residual " +
                    std::to_string(out.max_residual) + ")");
  }
  return out;
}

std::vector<HermitianTuple> orthonormal_span(std::span<const std::size_t> block_dims,
                                             std::span<const HermitianTuple> tuples,
                                             double rank_tol) {
  const std::size_t n = hermitian_coordinate_count(block_dims);
  if (tuples.empty() || n == 0) return {};
  Eigen::MatrixXd a(n, tuples.size());
  for (std::size_t j = 0; j < tuples.size(); ++j) {
    const auto c = hermitian_coordinates(block_dims, tuples[j]);
    for (std::size_t i = 0; i < n; ++i) a(i, j) = c[i];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  std::vector<HermitianTuple> out;
  std::vector<double> coords(n);
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    if (sv(0) == 0.0 || sv(j) < rank_tol * sv(0)) break;
    for (std::size_t i = 0; i < n; ++i) coords[i] = svd.matrixU()(i, j);
    out.push_back(hermitian_from_coordinates(block_dims, coords));
  }
  return out;
}

}  // namespace waylab
