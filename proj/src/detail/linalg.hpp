#pragma once

#include <Eigen/Dense>
#include <vector>

#include "waylab/numerics.hpp"

namespace waylab::detail {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a);
ComplexMatrix from_eigen(const Eigen::MatrixXcd& a);

/// Spectral decomposition of the Hermitian part of `a`; no symmetry check.
HermitianEigen hermitian_part_eigen(const ComplexMatrix& a);
std::vector<double> hermitian_part_eigenvalues(const ComplexMatrix& a);

}  // namespace waylab::detail
