#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ricci/wedge.hpp"

namespace ricci {

/// Numerical rank threshold: singular values below rank_tol * sigma_max
/// count as zero.
inline constexpr double kRankTol = 1e-10;

/// Complex-bilinear extension of the Euclidean dot product (no conjugation).
inline Complex bilinear_dot(const Eigen::VectorXcd& x,
                            const Eigen::VectorXcd& y) {
  return (x.transpose() * y)(0);
}

/// Gram data of a rank-2 factorization v = zeta eta^T - eta zeta^T.
/// The nonzero eigenvalues of v are +-lambda with
/// lambda^2 = b(zeta,eta)^2 - b(zeta,zeta) b(eta,eta).
struct Rank2Certificate {
  Eigen::VectorXcd zeta, eta;
  Complex b_zz, b_ze, b_ee;

  Complex lambda_sq() const { return b_ze * b_ze - b_zz * b_ee; }
};

/// Element of so(n, C): complex antisymmetric matrix (v^T = -v, not
/// conjugate-antisymmetric).
struct ComplexBivector {
  int n = 0;
  Eigen::MatrixXcd entries;
  std::optional<Rank2Certificate> cert;

  ComplexBivector() = default;
  explicit ComplexBivector(Eigen::MatrixXcd m);

  Eigen::VectorXcd coords() const { return wedge_coords(entries); }
  double norm() const { return coords().norm(); }

  ComplexBivector conj() const { return ComplexBivector(entries.conjugate()); }
};

/// Element of so(n, R).
struct RealBivector {
  int n = 0;
  Eigen::MatrixXd entries;

  RealBivector() = default;
  explicit RealBivector(Eigen::MatrixXd m);
  static RealBivector from_coords(int n, const Eigen::VectorXd& c) {
    return RealBivector(wedge_matrix(n, c));
  }

  Eigen::VectorXd coords() const { return wedge_coords(entries); }
  double norm() const { return coords().norm(); }
  ComplexBivector complexified() const {
    return ComplexBivector(entries.cast<Complex>());
  }
};

/// x y^T - y x^T with rank-2 certificate attached.
ComplexBivector wedge(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);
ComplexBivector wedge_basis_element(int n, int i, int j);

/// <v, w> = -tr(v conj(w))/2; conjugation on the second slot.
Complex herm_inner(const ComplexBivector& v, const ComplexBivector& w);

/// Norms of the eigenvalues of v, ascending, with multiplicity.
std::vector<double> eigen_norms(const ComplexBivector& v);

/// Numerical rank at the kRankTol relative singular-value threshold.
int numerical_rank(const Eigen::MatrixXcd& m, double tol = kRankTol);

/// Result of the rank-2 splitting v = u + w: |u| = alpha and u + s w has
/// rank <= 2 with eigenvalue norms alpha for every real s.
struct Rank2Split {
  ComplexBivector u, w;
  double alpha = 0.0;
};

/// Splits a rank-2 bivector along the proof of the decomposition lemma:
/// nilpotent v returns (v, 0, 0); otherwise v is normalized by 1/lambda,
/// rotated to an adapted real orthonormal basis where v_12 = +-i and
/// v_34 = 0, and u is the (1,2)-block.
Rank2Split decompose_rank2(const ComplexBivector& v, double tol = kRankTol);

/// Matrix of w -> v w - w v on wedge coordinates (N x N, N = n(n-1)/2).
Eigen::MatrixXcd ad_matrix(const ComplexBivector& v);
Eigen::MatrixXd ad_matrix(const RealBivector& v);

/// The invariant sets S_1..S_5 of so(n, C): all of so(n,C); tr(v^2) = 0;
/// rank 2 with v^2 = 0; rank 2 with v^3 = 0; rank 2.
enum class SKind { S1, S2, S3, S4, S5 };

/// Unit-norm element of S_i from a fixed-seed generator.
ComplexBivector sample_set(SKind kind, int n, std::uint64_t seed);

/// Max residuals used by tests and samplers.
double antisymmetry_residual(const Eigen::MatrixXcd& m);
double set_membership_residual(SKind kind, const ComplexBivector& v);

}  // namespace ricci
