#pragma once

// Zero-mean two-mode Gaussian states in the variance-matrix picture.
// Quadratures are x = (a + a^+)/sqrt2, p = (a - a^+)/(i sqrt2), ordered
// (x1, p1, x2, p2); the vacuum has V = I/2.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace entdeg {

using cplx = std::complex<double>;

namespace gaussian {

inline constexpr double kPureEpsilon = 1e-9;
inline constexpr double kPhysicalTolerance = 1e-8;

struct VarianceMatrix {
  Eigen::Matrix4d v = 0.5 * Eigen::Matrix4d::Identity();

  Eigen::Matrix2d X() const { return v.block<2, 2>(0, 0); }
  Eigen::Matrix2d Y() const { return v.block<2, 2>(2, 2); }
  Eigen::Matrix2d Z() const { return v.block<2, 2>(0, 2); }
};

/// Block-diagonal standard form diag-pattern (x, x, y, y) with Z = diag(z1, z2).
struct GenericForm {
  double x = 0.5;
  double y = 0.5;
  double z1 = 0.0;
  double z2 = 0.0;

  VarianceMatrix matrix() const;
};

/// rho = N exp(-1/2 A^+ M A) with A = (a1, a2, a1^+, a2^+), and
/// D_ij = 1/2 <{A_i, A_j^+}> the matching characteristic-function matrix.
struct ExponentialForm {
  Eigen::Matrix4cd M;
  Eigen::Matrix4cd D;
  std::array<double, 2> theta{};
  double norm = 1.0;
};

/// Symplectic form Omega for the (x1, p1, x2, p2) ordering.
Eigen::Matrix4d symplectic_form();

/// Single-mode symplectic unit [[0, 1], [-1, 0]].
Eigen::Matrix2d single_mode_j();

VarianceMatrix tmsv_variance(cplx xi);

/// Thermal product state with mean photon numbers n1, n2.
VarianceMatrix thermal_variance(double n1, double n2);

/// Sorted symplectic eigenvalues. Values within the rounding floor
/// ~eps |V|^2 of 1/2 are returned as exactly 1/2.
std::array<double, 2> symplectic_eigenvalues(const VarianceMatrix& V);

bool is_physical(const VarianceMatrix& V, double tol = kPhysicalTolerance);

/// sum g(nu), g(nu) = (nu + 1/2) ln(nu + 1/2) - (nu - 1/2) ln(nu - 1/2).
/// Throws NotPhysical if nu_min < 1/2 - 1e-8.
double gaussian_entropy(const VarianceMatrix& V);

/// Entropy g(sqrt(det X)) of a single-mode block; for a pure two-mode state
/// this is the entanglement.
double mode_entropy(const Eigen::Matrix2d& X);

/// D = L V L^+ where A = L zeta.
Eigen::Matrix4cd ladder_covariance(const VarianceMatrix& V);
VarianceMatrix from_ladder_covariance(const Eigen::Matrix4cd& D);

/// Throws PureStateDivergence when some nu <= 1/2 + eps_pure.
ExponentialForm exponential_form(const VarianceMatrix& V, double eps_pure = kPureEpsilon);

/// Characteristic-function matrix rebuilt from an exponent matrix M:
/// D = 1/2 coth(JM/2) J.
Eigen::Matrix4cd ladder_covariance_from_exponent(const Eigen::Matrix4cd& M);

/// Margin of the Simon/Duan inequality: left minus right hand side.
double separability_margin(const VarianceMatrix& V);

/// Same for the generic form; equals 4 times the general margin.
double generic_margin(const GenericForm& g);

enum class Side { Separable, Inseparable, Boundary };

struct SeparabilityVerdict {
  Side side = Side::Boundary;
  double margin = 0.0;
};

SeparabilityVerdict separability_criterion(const VarianceMatrix& V, double tau = 1e-12);

const char* to_string(Side side);

/// Length (in units of l_A) at which a TMSV sent through two equal
/// thermal fibers reaches the separability boundary:
///   l_S / l_A = 1/2 ln[1 + (1 - e^{-2 xi}) / (2 n_th)].
double separability_length(double xi, double n_th);

/// Local Sp(2) x Sp(2) reduction of V to the generic form.
GenericForm standard_form(const VarianceMatrix& V);

/// Applies S1 (+) S2 to V: V -> S V S^T.
VarianceMatrix apply_local(const VarianceMatrix& V, const Eigen::Matrix2d& S1, const Eigen::Matrix2d& S2);

}  // namespace gaussian
}  // namespace entdeg
