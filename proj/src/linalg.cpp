#include "detail/linalg.hpp"

#include "waylab/error.hpp"

namespace waylab::detail {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& a) {
  ComplexMatrix m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const ComplexMatrix& a, int options) {
  const Eigen::MatrixXcd m = to_eigen(a);
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, options);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::NumericFailure, "Hermitian eigensolver did not converge");
  return es;
}

}  // namespace

HermitianEigen hermitian_part_eigen(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return {};
  const auto es = solve(a, Eigen::ComputeEigenvectors);
  HermitianEigen out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  out.vectors = from_eigen(es.eigenvectors());
  return out;
}

std::vector<double> hermitian_part_eigenvalues(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return {};
  const auto es = solve(a, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

}  // namespace waylab::detail
