#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace ricci {

using Complex = std::complex<double>;

/// Dimension of so(n) / Lambda^2(R^n).
inline int wedge_dim(int n) { return n * (n - 1) / 2; }

/// Index of e_i ^ e_j (i < j) in the lexicographically ordered wedge basis.
inline int wedge_index(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of wedge_index.
inline std::pair<int, int> wedge_pair(int n, int a) {
  for (int i = 0; i < n - 1; ++i) {
    int row = n - 1 - i;
    if (a < row) return {i, i + 1 + a};
    a -= row;
  }
  throw std::out_of_range("wedge_pair: index out of range");
}

/// Coordinates of an antisymmetric matrix in the orthonormal wedge basis.
/// The basis {e_i ^ e_j}_{i<j} is orthonormal for <v,w> = -tr(v conj(w))/2,
/// and the coordinate map is an isometry onto C^N with the standard
/// Hermitian product.
inline Eigen::VectorXcd wedge_coords(const Eigen::MatrixXcd& v) {
  const int n = static_cast<int>(v.rows());
  Eigen::VectorXcd c(wedge_dim(n));
  int a = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c[a++] = v(i, j);
  return c;
}

inline Eigen::VectorXd wedge_coords(const Eigen::MatrixXd& v) {
  const int n = static_cast<int>(v.rows());
  Eigen::VectorXd c(wedge_dim(n));
  int a = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c[a++] = v(i, j);
  return c;
}

/// Antisymmetric matrix with the given wedge coordinates.
inline Eigen::MatrixXcd wedge_matrix(int n, const Eigen::VectorXcd& c) {
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
  int a = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v(i, j) = c[a];
      v(j, i) = -c[a];
      ++a;
    }
  return v;
}

inline Eigen::MatrixXd wedge_matrix(int n, const Eigen::VectorXd& c) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
  int a = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      v(i, j) = c[a];
      v(j, i) = -c[a];
      ++a;
    }
  return v;
}

}  // namespace ricci
