#include "entdeg/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

#include "entdeg/error.hpp"

namespace entdeg::gaussian {

namespace {

const Eigen::Matrix4cd& ladder_map() {
  static const Eigen::Matrix4cd L = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = r;
    m(0, 1) = i * r;
    m(1, 2) = r;
    m(1, 3) = i * r;
    m(2, 0) = r;
    m(2, 1) = -i * r;
    m(3, 2) = r;
    m(3, 3) = -i * r;
    return m;
  }();
  return L;
}

Eigen::Matrix4cd commutator_metric() {
  return Eigen::Vector4cd(1.0, 1.0, -1.0, -1.0).asDiagonal();
}

double g_entropy(double nu) {
  if (nu <= 0.5) return 0.0;
  const double a = nu + 0.5;
  const double b = nu - 0.5;
  return a * std::log(a) - (b > 0.0 ? b * std::log(b) : 0.0);
}

}  // namespace

VarianceMatrix GenericForm::matrix() const {
  VarianceMatrix V;
  V.v.setZero();
  V.v(0, 0) = V.v(1, 1) = x;
  V.v(2, 2) = V.v(3, 3) = y;
  V.v(0, 2) = V.v(2, 0) = z1;
  V.v(1, 3) = V.v(3, 1) = z2;
  return V;
}

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d om = Eigen::Matrix4d::Zero();
  om.block<2, 2>(0, 0) = single_mode_j();
  om.block<2, 2>(2, 2) = single_mode_j();
  return om;
}

Eigen::Matrix2d single_mode_j() {
  Eigen::Matrix2d j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

VarianceMatrix tmsv_variance(cplx xi) {
  const double r = std::abs(xi);
  const double phi = std::arg(xi);
  const double c = std::cosh(2.0 * r);
  const double s1 = std::sinh(2.0 * r) * std::cos(phi);
  const double s2 = std::sinh(2.0 * r) * std::sin(phi);
  VarianceMatrix V;
  V.v << c / 2, 0, -s1 / 2, -s2 / 2,
         0, c / 2, -s2 / 2, s1 / 2,
         -s1 / 2, -s2 / 2, c / 2, 0,
         -s2 / 2, s1 / 2, 0, c / 2;
  return V;
}

VarianceMatrix thermal_variance(double n1, double n2) {
  if (n1 < 0.0 || n2 < 0.0) throw Error(ErrorCode::DomainError, "thermal photon numbers must be >= 0");
  return GenericForm{n1 + 0.5, n2 + 0.5, 0.0, 0.0}.matrix();
}

namespace {

// The entries of V already carry rounding of order eps |V|, which moves nu by
// up to about eps |V|^2. Values that close to 1/2 are not distinguishable
// from a pure mode and are reported as exactly 1/2.
std::array<double, 2> snap_pure(std::array<double, 2> nu, const VarianceMatrix& V) {
  const double scale = std::max(1.0, V.v.cwiseAbs().maxCoeff());
  const double tol = 16.0 * std::numeric_limits<double>::epsilon() * scale * scale;
  for (double& n : nu)
    if (std::abs(n - 0.5) <= tol) n = 0.5;
  return nu;
}

std::array<double, 2> raw_symplectic_eigenvalues(const VarianceMatrix& V) {
  const Eigen::Matrix4cd iom = cplx{0.0, 1.0} * symplectic_form().cast<cplx>();
  // With V = L L^T the Hermitian matrix L^T (i Omega) L shares the spectrum
  // +-nu of i Omega V; its eigenvalues carry an absolute error of order
  // eps |V| instead of the eps |V|^2 of the determinant invariants.
  Eigen::LLT<Eigen::Matrix4d> llt(V.v);
  if (llt.info() == Eigen::Success) {
    const Eigen::Matrix4cd L = Eigen::Matrix4d(llt.matrixL()).cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(L.transpose() * iom * L, Eigen::EigenvaluesOnly);
    const Eigen::Vector4d e = es.eigenvalues();
    return {0.5 * (e(2) - e(1)), 0.5 * (e(3) - e(0))};
  }
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(iom * V.v.cast<cplx>(), false);
  std::array<double, 4> a{};
  for (int i = 0; i < 4; ++i) a[i] = std::abs(es.eigenvalues()(i));
  std::sort(a.begin(), a.end());
  return {0.5 * (a[0] + a[1]), 0.5 * (a[2] + a[3])};
}

}  // namespace

std::array<double, 2> symplectic_eigenvalues(const VarianceMatrix& V) {
  return snap_pure(raw_symplectic_eigenvalues(V), V);
}

bool is_physical(const VarianceMatrix& V, double tol) {
  if (!V.v.isApprox(V.v.transpose(), 1e-12)) return false;
  return symplectic_eigenvalues(V)[0] >= 0.5 - tol;
}

double gaussian_entropy(const VarianceMatrix& V) {
  const auto nu = symplectic_eigenvalues(V);
  if (nu[0] < 0.5 - kPhysicalTolerance)
    throw Error(ErrorCode::NotPhysical, "symplectic eigenvalue " + std::to_string(nu[0]) + " < 1/2");
  return g_entropy(nu[0]) + g_entropy(nu[1]);
}

double mode_entropy(const Eigen::Matrix2d& X) {
  const double nu = std::sqrt(std::max(0.0, X.determinant()));
  if (nu < 0.5 - kPhysicalTolerance) throw Error(ErrorCode::NotPhysical, "single-mode block violates uncertainty");
  return g_entropy(nu);
}

Eigen::Matrix4cd ladder_covariance(const VarianceMatrix& V) {
  const Eigen::Matrix4cd& L = ladder_map();
  return L * V.v.cast<cplx>() * L.adjoint();
}

VarianceMatrix from_ladder_covariance(const Eigen::Matrix4cd& D) {
  const Eigen::Matrix4cd& L = ladder_map();
  VarianceMatrix V;
  V.v = (L.adjoint() * D * L).real();
  V.v = 0.5 * (V.v + V.v.transpose()).eval();
  return V;
}

ExponentialForm exponential_form(const VarianceMatrix& V, double eps_pure) {
  const auto nu = symplectic_eigenvalues(V);
  if (nu[0] <= 0.5 + eps_pure)
    throw Error(ErrorCode::PureStateDivergence,
                "symplectic eigenvalue " + std::to_string(nu[0]) + " too close to 1/2");
  ExponentialForm f;
  f.D = ladder_covariance(V);
  const Eigen::Matrix4cd J = commutator_metric();
  const Eigen::Matrix4cd I = Eigen::Matrix4cd::Identity();
  const Eigen::Matrix4cd DJ2 = 2.0 * f.D * J;
  // Eigenvalues of the ratio are (2nu+1)/(2nu-1) and its inverse, all
  // positive reals, so the principal logarithm is the right branch.
  const Eigen::Matrix4cd ratio = (DJ2 + I) * (DJ2 - I).inverse();
  f.M = J * ratio.log();
  f.M = 0.5 * (f.M + f.M.adjoint()).eval();
  f.norm = 1.0;
  for (int k = 0; k < 2; ++k) {
    f.theta[k] = std::log((nu[k] + 0.5) / (nu[k] - 0.5));
    f.norm *= 2.0 * std::sinh(0.5 * f.theta[k]);
  }
  return f;
}

Eigen::Matrix4cd ladder_covariance_from_exponent(const Eigen::Matrix4cd& M) {
  const Eigen::Matrix4cd J = commutator_metric();
  const Eigen::Matrix4cd half = 0.5 * (J * M);
  const Eigen::Matrix4cd e = half.exp();
  const Eigen::Matrix4cd einv = (-half).exp();
  // coth(X) = (e^X + e^-X)(e^X - e^-X)^-1
  const Eigen::Matrix4cd coth = (e + einv) * (e - einv).inverse();
  return 0.5 * coth * J;
}

double separability_margin(const VarianceMatrix& V) {
  const Eigen::Matrix2d X = V.X();
  const Eigen::Matrix2d Y = V.Y();
  const Eigen::Matrix2d Z = V.Z();
  const Eigen::Matrix2d J = single_mode_j();
  const double dx = X.determinant();
  const double dy = Y.determinant();
  const double dz = Z.determinant();
  const double t = 0.25 - std::abs(dz);
  const double tr = (X * J * Z * J * Y * J * Z.transpose() * J).trace();
  return dx * dy + t * t - tr - 0.25 * (dx + dy);
}

double generic_margin(const GenericForm& g) {
  const double xy = g.x * g.y;
  return 4.0 * (xy - g.z1 * g.z1) * (xy - g.z2 * g.z2) - (g.x * g.x + g.y * g.y) -
         2.0 * std::abs(g.z1 * g.z2) + 0.25;
}

SeparabilityVerdict separability_criterion(const VarianceMatrix& V, double tau) {
  const double mu = separability_margin(V);
  if (mu >= tau) return {Side::Separable, mu};
  if (mu <= -tau) return {Side::Inseparable, mu};
  return {Side::Boundary, mu};
}

const char* to_string(Side side) {
  switch (side) {
    case Side::Separable:
      return "separable";
    case Side::Inseparable:
      return "inseparable";
    case Side::Boundary:
      return "boundary";
  }
  return "?";
}

double separability_length(double xi, double n_th) {
  if (n_th <= 0.0)
    throw Error(ErrorCode::DomainError, "ground-state fibers never reach the separability boundary");
  if (xi < 0.0) throw Error(ErrorCode::DomainError, "squeeze modulus must be >= 0");
  return 0.5 * std::log1p(-std::expm1(-2.0 * xi) / (2.0 * n_th));
}

VarianceMatrix apply_local(const VarianceMatrix& V, const Eigen::Matrix2d& S1, const Eigen::Matrix2d& S2) {
  Eigen::Matrix4d S = Eigen::Matrix4d::Zero();
  S.block<2, 2>(0, 0) = S1;
  S.block<2, 2>(2, 2) = S2;
  VarianceMatrix out;
  out.v = S * V.v * S.transpose();
  return out;
}

GenericForm standard_form(const VarianceMatrix& V) {
  // Symmetric normalizers (det X)^{1/4} X^{-1/2} turn X, Y into multiples of I.
  auto normalizer = [](const Eigen::Matrix2d& A) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(A);
    const Eigen::Vector2d ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0) throw Error(ErrorCode::NotPhysical, "local block is not positive definite");
    const double scale = std::pow(ev(0) * ev(1), 0.25);
    return Eigen::Matrix2d(es.eigenvectors() * (scale * ev.cwiseInverse().cwiseSqrt()).asDiagonal() *
                           es.eigenvectors().transpose());
  };
  const Eigen::Matrix2d S1 = normalizer(V.X());
  const Eigen::Matrix2d S2 = normalizer(V.Y());
  const VarianceMatrix W = apply_local(V, S1, S2);

  // Rotations (which commute with multiples of I) diagonalize Z.
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(W.Z(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d U = svd.matrixU();
  Eigen::Matrix2d R = svd.matrixV();
  Eigen::Vector2d d = svd.singularValues();
  if (U.determinant() < 0.0) {
    U.col(1) *= -1.0;
    d(1) *= -1.0;
  }
  if (R.determinant() < 0.0) {
    R.col(1) *= -1.0;
    d(1) *= -1.0;
  }
  GenericForm g;
  g.x = 0.5 * (W.v(0, 0) + W.v(1, 1));
  g.y = 0.5 * (W.v(2, 2) + W.v(3, 3));
  g.z1 = d(0);
  g.z2 = d(1);
  // Entangled states keep z1 < 0 < z2, matching the TMSV orientation.
  if (g.z1 * g.z2 < 0.0 && g.z1 > 0.0) std::swap(g.z1, g.z2);
  return g;
}

}  // namespace entdeg::gaussian
