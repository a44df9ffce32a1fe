#include "ricci/curvature.hpp"

#include <json.hpp>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ricci/rng.hpp"

namespace ricci {

namespace {

inline int t4_index(int n, int i, int j, int k, int l) {
  return ((i * n + j) * n + k) * n + l;
}

}  // namespace

CurvatureOperator identity_operator(int n) {
  return {n, Eigen::MatrixXd::Identity(wedge_dim(n), wedge_dim(n))};
}

double tensor_entry(const CurvatureOperator& rm, int i, int j, int k, int l) {
  if (i == j || k == l) return 0.0;
  double sign = 1.0;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (k > l) {
    std::swap(k, l);
    sign = -sign;
  }
  return sign * rm.form(wedge_index(rm.n, i, j), wedge_index(rm.n, k, l));
}

Eigen::VectorXd to_tensor4(const CurvatureOperator& rm) {
  const int n = rm.n;
  Eigen::VectorXd t(n * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          t[t4_index(n, i, j, k, l)] = tensor_entry(rm, i, j, k, l);
  return t;
}

CurvatureOperator form_from_tensor4(int n, const Eigen::VectorXd& t) {
  const int N = wedge_dim(n);
  Eigen::MatrixXd f(N, N);
  for (int a = 0; a < N; ++a) {
    auto [i, j] = wedge_pair(n, a);
    for (int b = 0; b < N; ++b) {
      auto [k, l] = wedge_pair(n, b);
      f(a, b) = t[t4_index(n, i, j, k, l)];
    }
  }
  return {n, f};
}

CurvatureOperator bianchi_project(int n, const Eigen::MatrixXd& sym) {
  const int N = wedge_dim(n);
  if (sym.rows() != N || sym.cols() != N)
    throw std::invalid_argument("bianchi_project: wrong form size");
  if ((sym - sym.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, sym.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("bianchi_project: form must be symmetric");

  CurvatureOperator rm{n, 0.5 * (sym + sym.transpose())};
  Eigen::VectorXd t = to_tensor4(rm);
  // subtract the fully antisymmetric (Lambda^4) component
  Eigen::VectorXd p(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double b = (t[t4_index(n, i, j, k, l)] +
                            t[t4_index(n, i, k, l, j)] +
                            t[t4_index(n, i, l, j, k)]) /
                           3.0;
          p[t4_index(n, i, j, k, l)] = t[t4_index(n, i, j, k, l)] - b;
        }
  return form_from_tensor4(n, p);
}

double bianchi_residual(const CurvatureOperator& rm) {
  const int n = rm.n;
  double r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r = std::max(r, std::abs(tensor_entry(rm, i, j, k, l) +
                                   tensor_entry(rm, i, k, l, j) +
                                   tensor_entry(rm, i, l, j, k)));
  return r;
}

double evaluate(const CurvatureOperator& rm, const Eigen::VectorXcd& c) {
  const Complex val = (c.transpose() * rm.form * c.conjugate())(0);
  return val.real();
}

double evaluate(const CurvatureOperator& rm, const ComplexBivector& v) {
  if (v.n != rm.n) throw std::invalid_argument("evaluate: dimension mismatch");
  return evaluate(rm, v.coords());
}

SymmetricTwoTensor ricci_tensor(const CurvatureOperator& rm) {
  const int n = rm.n;
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += tensor_entry(rm, i, j, k, j);
      r(i, k) = s;
      r(k, i) = s;
    }
  return {n, r};
}

double scalar_curv(const CurvatureOperator& rm) { return ricci_tensor(rm).m.trace(); }

CurvatureOperator kn_product(const SymmetricTwoTensor& a,
                             const SymmetricTwoTensor& b) {
  if (a.n != b.n) throw std::invalid_argument("kn_product: dimension mismatch");
  const int n = a.n, N = wedge_dim(n);
  const Eigen::MatrixXd &A = a.m, &B = b.m;
  Eigen::MatrixXd f(N, N);
  for (int p = 0; p < N; ++p) {
    auto [i, j] = wedge_pair(n, p);
    for (int q = p; q < N; ++q) {
      auto [k, l] = wedge_pair(n, q);
      const double v = A(i, k) * B(j, l) + A(j, l) * B(i, k) -
                       A(i, l) * B(j, k) - A(j, k) * B(i, l);
      f(p, q) = v;
      f(q, p) = v;
    }
  }
  return {n, f};
}

namespace {

// ad-matrices of the wedge basis elements, cached per dimension.
const std::vector<Eigen::MatrixXd>& basis_ad_matrices(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Eigen::MatrixXd>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const int N = wedge_dim(n);
  std::vector<Eigen::MatrixXd> ads;
  ads.reserve(N);
  for (int a = 0; a < N; ++a) {
    auto [i, j] = wedge_pair(n, a);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    e(i, j) = 1.0;
    e(j, i) = -1.0;
    ads.push_back(ad_matrix(RealBivector(e)));
  }
  return cache.emplace(n, std::move(ads)).first->second;
}

}  // namespace

CurvatureOperator sharp(const CurvatureOperator& rm) {
  const int n = rm.n, N = rm.N();
  const auto& ads = basis_ad_matrices(n);
  // M_a = ad_a * form; sharp_ab = -1/2 tr(M_a M_b)
  std::vector<Eigen::MatrixXd> m(N);
  for (int a = 0; a < N; ++a) m[a] = ads[a] * rm.form;
  Eigen::MatrixXd f(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      const double v = -0.5 * m[a].cwiseProduct(m[b].transpose()).sum();
      f(a, b) = v;
      f(b, a) = v;
    }
  return {n, f};
}

double sharp_value(const CurvatureOperator& rm, const ComplexBivector& v) {
  const Eigen::MatrixXcd av = ad_matrix(v);
  const Eigen::MatrixXcd m = av * rm.form;
  // sharp(v, conj v) = -1/2 tr(ad_v Rm ad_conj(v) Rm)
  const Complex t = -0.5 * m.cwiseProduct(m.conjugate().transpose()).sum();
  return t.real();
}

CurvatureOperator reaction_Q(const CurvatureOperator& rm) {
  CurvatureOperator s = sharp(rm);
  return {rm.n, Eigen::MatrixXd(rm.form * rm.form + s.form)};
}

double q_value(const CurvatureOperator& rm, const ComplexBivector& v) {
  const Eigen::VectorXcd fc = rm.form * v.coords();
  return fc.squaredNorm() + sharp_value(rm, v);
}

CurvatureOperator random_bianchi(int n, std::uint64_t seed, bool normalize) {
  Rng rng(seed);
  const int N = wedge_dim(n);
  Eigen::MatrixXd s(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      s(a, b) = rng.normal();
      s(b, a) = s(a, b);
    }
  CurvatureOperator rm = bianchi_project(n, s);
  if (normalize && rm.norm() > 0) rm.form /= rm.norm();
  return rm;
}

std::string to_json_string(const CurvatureOperator& rm) {
  nlohmann::json j;
  j["n"] = rm.n;
  j["basis"] = "lex";
  std::vector<std::vector<double>> rows;
  for (int a = 0; a < rm.N(); ++a)
    rows.emplace_back(rm.form.row(a).begin(), rm.form.row(a).end());
  j["form"] = rows;
  return j.dump();
}

CurvatureOperator operator_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  if (j.at("basis").get<std::string>() != "lex")
    throw std::invalid_argument("operator_from_json: unknown basis");
  const auto rows = j.at("form").get<std::vector<std::vector<double>>>();
  const int N = wedge_dim(n);
  if (static_cast<int>(rows.size()) != N)
    throw std::invalid_argument("operator_from_json: wrong form size");
  Eigen::MatrixXd f(N, N);
  for (int a = 0; a < N; ++a) {
    if (static_cast<int>(rows[a].size()) != N)
      throw std::invalid_argument("operator_from_json: ragged form");
    for (int b = 0; b < N; ++b) f(a, b) = rows[a][b];
  }
  return {n, f};
}

}  // namespace ricci
