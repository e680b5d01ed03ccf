#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "tlent/linalg.hpp"

namespace testing {

using tlent::CMatrix;
using tlent::cplx;
using EMat = Eigen::MatrixXcd;

inline EMat to_eigen(const CMatrix& m) {
  EMat e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline CMatrix from_eigen(const EMat& e) {
  CMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = {n(rng), n(rng)};
  return m;
}

inline CMatrix random_hermitian(std::size_t n, std::mt19937& rng) {
  const CMatrix a = random_matrix(n, n, rng);
  return (a + a.adjoint()) * cplx{0.5};
}

inline tlent::CVector random_state(std::size_t len, std::mt19937& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  tlent::CVector v(len);
  for (auto& x : v) x = {n(rng), n(rng)};
  const double s = tlent::norm(v);
  for (auto& x : v) x /= s;
  return v;
}

// Eigen's own inverse, for cross-checking closed forms.
inline CMatrix eigen_inverse(const CMatrix& m) { return from_eigen(to_eigen(m).inverse()); }

}  // namespace testing
