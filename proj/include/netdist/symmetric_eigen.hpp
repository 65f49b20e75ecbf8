#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "netdist/errors.hpp"
#include "netdist/matrix.hpp"

namespace netdist {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

namespace detail {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::MatrixXd to_eigen(const Matrix& m) {
  return Eigen::Map<const EigenRowMajor>(
      m.data().data(), static_cast<Eigen::Index>(m.rows()),
      static_cast<Eigen::Index>(m.cols()));
}

inline void require_symmetric(const Matrix& m) {
  if (!is_square(m)) throw contract_error("matrix must be square");
  const double tol = 1e-12 * std::max(1.0, max_abs(m));
  if (!is_symmetric(m, tol)) throw contract_error("matrix must be symmetric");
}

}  // namespace detail

inline std::vector<double> symmetric_eigenvalues(const Matrix& m) {
  detail::require_symmetric(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(detail::to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numeric_error("symmetric eigensolver did not converge");
  const auto& v = solver.eigenvalues();
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline EigenDecomposition symmetric_eigendecomposition(const Matrix& m) {
  detail::require_symmetric(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(detail::to_eigen(m));
  if (solver.info() != Eigen::Success)
    throw numeric_error("symmetric eigensolver did not converge");
  EigenDecomposition out;
  const auto& v = solver.eigenvalues();
  out.values.assign(v.data(), v.data() + v.size());
  out.vectors = Matrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      out.vectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                                static_cast<Eigen::Index>(k));
  return out;
}

}  // namespace netdist
