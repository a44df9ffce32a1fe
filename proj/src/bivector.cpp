#include "ricci/bivector.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ricci/rng.hpp"

namespace ricci {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double antisymmetry_residual(const Eigen::MatrixXcd& m) {
  return (m + m.transpose()).cwiseAbs().maxCoeff();
}

ComplexBivector::ComplexBivector(Eigen::MatrixXcd m) : entries(std::move(m)) {
  require(entries.rows() == entries.cols(), "bivector: matrix must be square");
  n = static_cast<int>(entries.rows());
  require(n >= 2, "bivector: dimension must be >= 2");
  const double scale = entries.cwiseAbs().maxCoeff();
  require(antisymmetry_residual(entries) <= 1e-12 * std::max(1.0, scale),
          "bivector: matrix must be antisymmetric");
  // store exact antisymmetry
  entries = 0.5 * (entries - entries.transpose().eval());
}

RealBivector::RealBivector(Eigen::MatrixXd m) : entries(std::move(m)) {
  require(entries.rows() == entries.cols(), "bivector: matrix must be square");
  n = static_cast<int>(entries.rows());
  require(n >= 2, "bivector: dimension must be >= 2");
  const double scale = entries.cwiseAbs().maxCoeff();
  require((entries + entries.transpose()).cwiseAbs().maxCoeff() <=
              1e-12 * std::max(1.0, scale),
          "bivector: matrix must be antisymmetric");
  entries = 0.5 * (entries - entries.transpose().eval());
}

ComplexBivector wedge(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  require(x.size() == y.size(), "wedge: dimension mismatch");
  require(x.size() >= 2, "wedge: dimension must be >= 2");
  ComplexBivector v(Eigen::MatrixXcd(x * y.transpose() - y * x.transpose()));
  v.cert = Rank2Certificate{x, y, bilinear_dot(x, x), bilinear_dot(x, y),
                            bilinear_dot(y, y)};
  return v;
}

ComplexBivector wedge_basis_element(int n, int i, int j) {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n), y = Eigen::VectorXcd::Zero(n);
  x[i] = 1.0;
  y[j] = 1.0;
  return wedge(x, y);
}

Complex herm_inner(const ComplexBivector& v, const ComplexBivector& w) {
  require(v.n == w.n, "herm_inner: dimension mismatch");
  return -0.5 * (v.entries * w.entries.conjugate()).trace();
}

std::vector<double> eigen_norms(const ComplexBivector& v) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(v.entries, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigen_norms: eigensolver did not converge");
  std::vector<double> norms(v.n);
  for (int i = 0; i < v.n; ++i) norms[i] = std::abs(es.eigenvalues()[i]);
  std::sort(norms.begin(), norms.end());
  return norms;
}

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] <= 0.0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > tol * s[0]) ++r;
  return r;
}

namespace {

// Deterministic phase normalization: the largest-modulus entry becomes real
// and positive.
Eigen::VectorXcd phase_normalize(const Eigen::VectorXcd& x) {
  int imax = 0;
  x.cwiseAbs().maxCoeff(&imax);
  Complex p = x[imax] / std::abs(x[imax]);
  return x / p;
}

// Gram-Schmidt appends the projection-orthogonalized vector if it is
// numerically independent.
void gs_append(std::vector<Eigen::VectorXd>& basis, Eigen::VectorXd v,
               double tol) {
  for (const auto& b : basis) v -= b.dot(v) * b;
  const double nv = v.norm();
  if (nv > tol) basis.push_back(v / nv);
}

}  // namespace

Rank2Split decompose_rank2(const ComplexBivector& v, double tol) {
  const int n = v.n;
  const double scale = v.norm();
  if (scale == 0.0) throw std::invalid_argument("decompose_rank2: zero input");
  if (numerical_rank(v.entries, tol) != 2)
    throw std::invalid_argument("decompose_rank2: rank(v) != 2");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(v.entries, true);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("decompose_rank2: eigensolver failure");

  // Eigenvalues come in +-lambda pairs; alpha is the common norm.
  int imax = 0;
  es.eigenvalues().cwiseAbs().maxCoeff(&imax);
  const double alpha = std::abs(es.eigenvalues()[imax]);
  if (alpha <= tol * scale) {
    // nilpotent case: u = v, w = 0
    return {v, ComplexBivector(Eigen::MatrixXcd::Zero(n, n)), 0.0};
  }

  // Pick lambda deterministically among +-: Re > 0, ties by Im > 0.
  Complex lambda = es.eigenvalues()[imax];
  if (lambda.real() < -tol * alpha ||
      (std::abs(lambda.real()) <= tol * alpha && lambda.imag() < 0.0))
    lambda = -lambda;

  // v' = v / lambda has eigenvalues exactly +-1.
  const Eigen::MatrixXcd vp = v.entries / lambda;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> esp(vp, true);
  if (esp.info() != Eigen::Success)
    throw std::runtime_error("decompose_rank2: eigensolver failure");

  int iplus = -1, iminus = -1;
  double dplus = 1e300, dminus = 1e300;
  for (int i = 0; i < n; ++i) {
    const double dp = std::abs(esp.eigenvalues()[i] - 1.0);
    const double dm = std::abs(esp.eigenvalues()[i] + 1.0);
    if (dp < dplus) dplus = dp, iplus = i;
    if (dm < dminus) dminus = dm, iminus = i;
  }
  if (dplus > 1e-6 || dminus > 1e-6)
    throw std::runtime_error("decompose_rank2: +-1 eigenvalues not resolved");

  const Eigen::VectorXcd xp = phase_normalize(esp.eigenvectors().col(iplus));
  const Eigen::VectorXcd xm = phase_normalize(esp.eigenvectors().col(iminus));

  // Adapted real basis: real/imaginary parts of x+ span the first two
  // directions, x- extends to at most four.
  std::vector<Eigen::VectorXd> basis;
  gs_append(basis, xp.real(), 1e-8);
  gs_append(basis, xp.imag(), 1e-8);
  if (basis.size() != 2)
    throw std::runtime_error("decompose_rank2: degenerate +1 eigenvector");
  gs_append(basis, xm.real(), 1e-8);
  gs_append(basis, xm.imag(), 1e-8);
  for (int k = 0; k < n && static_cast<int>(basis.size()) < n; ++k)
    gs_append(basis, Eigen::VectorXd::Unit(n, k), 1e-8);
  if (static_cast<int>(basis.size()) != n)
    throw std::runtime_error("decompose_rank2: basis completion failed");

  Eigen::MatrixXd F(n, n);
  for (int k = 0; k < n; ++k) F.col(k) = basis[k];

  const Eigen::MatrixXcd vt = F.transpose() * vp * F;

  // In the adapted basis: vt_12 = +-i, vt_34 = 0 and the matrix is
  // supported on the leading 4x4 block.
  if (std::abs(std::abs(vt(0, 1)) - 1.0) > 1e-7)
    throw std::runtime_error("decompose_rank2: adapted basis not reached");
  if (n >= 4 && std::abs(vt(2, 3)) > 1e-7)
    throw std::runtime_error("decompose_rank2: adapted basis not reached");

  Eigen::MatrixXcd ut = Eigen::MatrixXcd::Zero(n, n);
  ut(0, 1) = vt(0, 1);
  ut(1, 0) = -vt(0, 1);
  const Eigen::MatrixXcd wt = vt - ut;

  ComplexBivector u(Eigen::MatrixXcd(lambda * F * ut * F.transpose()));
  ComplexBivector w(Eigen::MatrixXcd(lambda * F * wt * F.transpose()));
  return {u, w, alpha};
}

Eigen::MatrixXcd ad_matrix(const ComplexBivector& v) {
  const int n = v.n, N = wedge_dim(n);
  Eigen::MatrixXcd A(N, N);
  for (int a = 0; a < N; ++a) {
    auto [i, j] = wedge_pair(n, a);
    // [v, e_i ^ e_j] has columns built from rows/columns of v
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
    e.col(j) = v.entries.col(i);
    e.col(i) = -v.entries.col(j);
    Eigen::MatrixXcd b = e - e.transpose().eval();
    A.col(a) = wedge_coords(b);
  }
  return A;
}

Eigen::MatrixXd ad_matrix(const RealBivector& v) {
  const int n = v.n, N = wedge_dim(n);
  Eigen::MatrixXd A(N, N);
  for (int a = 0; a < N; ++a) {
    auto [i, j] = wedge_pair(n, a);
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    e.col(j) = v.entries.col(i);
    e.col(i) = -v.entries.col(j);
    Eigen::MatrixXd b = e - e.transpose().eval();
    A.col(a) = wedge_coords(b);
  }
  return A;
}

namespace {

// Orthonormal frame of k vectors in R^n from a seeded Gaussian draw.
std::vector<Eigen::VectorXd> random_frame(Rng& rng, int n, int k) {
  std::vector<Eigen::VectorXd> frame;
  int guard = 0;
  while (static_cast<int>(frame.size()) < k) {
    if (++guard > 64)
      throw std::runtime_error("sample_set: frame generation failed");
    gs_append(frame, rng.normal_vector(n), 1e-6);
  }
  return frame;
}

Eigen::MatrixXcd random_antisymmetric(Rng& rng, int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = rng.cnormal();
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace

ComplexBivector sample_set(SKind kind, int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_set: n must be >= 2");
  if ((kind == SKind::S3 || kind == SKind::S4) && n < 4)
    throw std::invalid_argument("sample_set: S3/S4 require n >= 4");
  Rng rng(seed);

  for (int attempt = 0; attempt < 32; ++attempt) {
    ComplexBivector v;
    switch (kind) {
      case SKind::S1: {
        v = ComplexBivector(random_antisymmetric(rng, n));
        break;
      }
      case SKind::S2: {
        // correct tr(v^2) = 0 by mixing in an orthogonal direction:
        // solve tr((v0 + tau w)^2) = 0 for complex tau
        Eigen::MatrixXcd v0 = random_antisymmetric(rng, n);
        const Eigen::MatrixXcd w = random_antisymmetric(rng, n);
        const Complex a = (w * w).trace();
        const Complex b = (v0 * w).trace();
        const Complex c = (v0 * v0).trace();
        if (std::abs(a) < 1e-12) continue;
        const Complex disc = std::sqrt(b * b - a * c);
        const Complex t1 = (-b + disc) / a, t2 = (-b - disc) / a;
        const Complex tau = std::abs(t1) <= std::abs(t2) ? t1 : t2;
        v = ComplexBivector(Eigen::MatrixXcd(v0 + tau * w));
        break;
      }
      case SKind::S5: {
        v = wedge(rng.cnormal_vector(n), rng.cnormal_vector(n));
        break;
      }
      case SKind::S4: {
        // zeta isotropic (one isotropic vector), b(zeta, eta) = 0
        auto f = random_frame(rng, n, 2);
        Eigen::VectorXcd zeta = f[0].cast<Complex>() +
                                Complex(0, 1) * f[1].cast<Complex>();
        Eigen::VectorXcd eta = rng.cnormal_vector(n);
        const Complex bze = bilinear_dot(zeta, eta);
        const Complex bzc = bilinear_dot(zeta, zeta.conjugate());
        eta -= (bze / bzc) * zeta.conjugate();
        v = wedge(zeta, eta);
        break;
      }
      case SKind::S3: {
        // totally isotropic 2-plane from an orthonormal 4-frame
        auto f = random_frame(rng, n, 4);
        Eigen::VectorXcd zeta =
            f[0].cast<Complex>() + Complex(0, 1) * f[1].cast<Complex>();
        Eigen::VectorXcd eta =
            f[2].cast<Complex>() + Complex(0, 1) * f[3].cast<Complex>();
        v = wedge(zeta, eta);
        break;
      }
    }
    const double nv = v.norm();
    if (nv < 1e-8) continue;
    auto cert = v.cert;
    v = ComplexBivector(Eigen::MatrixXcd(v.entries / nv));
    if (cert) {
      // certificate for the normalized bivector: zeta scaled by 1/norm
      cert->zeta /= nv;
      cert->b_zz /= nv * nv;
      cert->b_ze /= nv;
      v.cert = cert;
    }
    return v;
  }
  throw std::runtime_error("sample_set: degenerate draws exhausted retries");
}

double set_membership_residual(SKind kind, const ComplexBivector& v) {
  const double s = std::max(1.0, v.norm());
  switch (kind) {
    case SKind::S1:
      return 0.0;
    case SKind::S2:
      return std::abs((v.entries * v.entries).trace()) / (s * s);
    case SKind::S5: {
      return numerical_rank(v.entries) == 2 ? 0.0 : 1.0;
    }
    case SKind::S4: {
      const Eigen::MatrixXcd v3 = v.entries * v.entries * v.entries;
      double r = v3.cwiseAbs().maxCoeff() / (s * s * s);
      if (numerical_rank(v.entries) != 2) r = std::max(r, 1.0);
      return r;
    }
    case SKind::S3: {
      const Eigen::MatrixXcd v2 = v.entries * v.entries;
      double r = v2.cwiseAbs().maxCoeff() / (s * s);
      if (numerical_rank(v.entries) != 2) r = std::max(r, 1.0);
      return r;
    }
  }
  return 1.0;
}

}  // namespace ricci
