#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "ricci/bivector.hpp"
#include "ricci/wedge.hpp"

namespace ricci {

struct SymmetricTwoTensor {
  int n = 0;
  Eigen::MatrixXd m;

  SymmetricTwoTensor() = default;
  SymmetricTwoTensor(int n_, Eigen::MatrixXd m_) : n(n_), m(std::move(m_)) {}
  static SymmetricTwoTensor identity(int n) {
    return {n, Eigen::MatrixXd::Identity(n, n)};
  }
};

/// Algebraic curvature operator: symmetric bilinear form on Lambda^2 R^n in
/// the orthonormal wedge basis, satisfying the first Bianchi identity.
struct CurvatureOperator {
  int n = 0;
  Eigen::MatrixXd form;  // N x N symmetric, N = n(n-1)/2

  CurvatureOperator() = default;
  CurvatureOperator(int n_, Eigen::MatrixXd f) : n(n_), form(std::move(f)) {}

  int N() const { return wedge_dim(n); }
  double norm() const { return form.norm(); }
};

/// The constant curvature operator of scalar curvature n(n-1); identity in
/// the wedge basis.
CurvatureOperator identity_operator(int n);

/// (0,4)-tensor entry Rm_{ijkl} for arbitrary indices, from the wedge form.
double tensor_entry(const CurvatureOperator& rm, int i, int j, int k, int l);

/// Full (0,4) tensor <-> wedge form. All index conversions in the library go
/// through these two routines.
Eigen::VectorXd to_tensor4(const CurvatureOperator& rm);
CurvatureOperator form_from_tensor4(int n, const Eigen::VectorXd& t);

/// Orthogonal projection of a symmetric form onto the Bianchi subspace
/// S^2_B(so(n)); identity on inputs already satisfying Bianchi.
CurvatureOperator bianchi_project(int n, const Eigen::MatrixXd& sym);

/// Max cyclic-sum residual |Rm_{ijkl} + Rm_{iklj} + Rm_{iljk}|.
double bianchi_residual(const CurvatureOperator& rm);

/// Complex-bilinear extension evaluated at (v, conj v); real by symmetry.
double evaluate(const CurvatureOperator& rm, const ComplexBivector& v);
double evaluate(const CurvatureOperator& rm, const Eigen::VectorXcd& coords);

SymmetricTwoTensor ricci_tensor(const CurvatureOperator& rm);
double scalar_curv(const CurvatureOperator& rm);

/// Kulkarni-Nomizu product
/// (A ^^ B)_{ijkl} = A_ik B_jl + A_jl B_ik - A_il B_jk - A_jk B_il.
CurvatureOperator kn_product(const SymmetricTwoTensor& a,
                             const SymmetricTwoTensor& b);

/// Rm^#(u,v) = -1/2 tr(ad_u Rm ad_v Rm) in the wedge basis.
CurvatureOperator sharp(const CurvatureOperator& rm);

/// sharp(Rm)(v, conj v) without assembling the full form.
double sharp_value(const CurvatureOperator& rm, const ComplexBivector& v);

/// Q(Rm) = Rm^2 + Rm^#, the reaction term of the curvature evolution.
CurvatureOperator reaction_Q(const CurvatureOperator& rm);

/// Q(Rm)(v, conj v) = |form c(v)|^2 + sharp_value.
double q_value(const CurvatureOperator& rm, const ComplexBivector& v);

/// Standard-normal symmetric form, Bianchi-projected; optionally normalized
/// to unit Frobenius norm.
CurvatureOperator random_bianchi(int n, std::uint64_t seed,
                                 bool normalize = true);

/// JSON document {n, basis:"lex", form:[[...]]}; bit-exact round-trip.
std::string to_json_string(const CurvatureOperator& rm);
CurvatureOperator operator_from_json(const std::string& text);

}  // namespace ricci
