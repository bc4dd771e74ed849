#include "entdeg/devices.hpp"

#include <cmath>

#include "entdeg/error.hpp"

namespace entdeg::devices {

namespace {

struct Polar {
  Eigen::Matrix2cd positive;
  Eigen::Matrix2cd unitary;
};

// m = positive * unitary.
Polar left_polar(const Eigen::Matrix2cd& m) {
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(0) < 1e-14) return {Eigen::Matrix2cd::Zero(), Eigen::Matrix2cd::Identity()};
  const Eigen::Matrix2cd& w = svd.matrixU();
  return {w * s.cast<cplx>().asDiagonal() * w.adjoint(), w * svd.matrixV().adjoint()};
}

}  // namespace

Eigen::Matrix2cd bs_matrix(const BeamSplitterTR& bs) {
  const double sum = std::norm(bs.T) + std::norm(bs.R);
  if (std::abs(sum - 1.0) > 1e-12)
    throw Error(ErrorCode::NotLossless, "|T|^2 + |R|^2 = " + std::to_string(sum));
  Eigen::Matrix2cd m;
  m << bs.T, bs.R, -std::conj(bs.R), std::conj(bs.T);
  return m;
}

cplx xi12(cplx q1, cplx q2, const BeamSplitterTR& bs) {
  return -q1 * bs.T * std::conj(bs.R) + q2 * bs.R * std::conj(bs.T);
}

SlabCoefficients slab_coefficients(const PlateSpec& spec) {
  if (spec.n.imag() < 0.0) throw Error(ErrorCode::DomainError, "plate index must have Im(n) >= 0");
  if (spec.phase_thickness < 0.0) throw Error(ErrorCode::DomainError, "plate thickness must be >= 0");
  const cplx r12 = (1.0 - spec.n) / (1.0 + spec.n);
  const cplx beta = spec.n * spec.phase_thickness;
  const cplx e1 = std::exp(cplx{0.0, 1.0} * beta);
  const cplx e2 = e1 * e1;
  const cplx denom = 1.0 - r12 * r12 * e2;
  return {(1.0 - r12 * r12) * e1 / denom, r12 * (1.0 - e2) / denom};
}

Eigen::Matrix2cd positive_sqrt(const Eigen::Matrix2cd& h, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
  Eigen::Vector2d ev = es.eigenvalues();
  for (int i = 0; i < 2; ++i) {
    if (ev(i) < -tol) throw Error(ErrorCode::NonPhysical, "negative eigenvalue " + std::to_string(ev(i)));
    ev(i) = std::sqrt(std::max(0.0, ev(i)));
  }
  return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

DeviceMatrices plate_matrices(const PlateSpec& spec) {
  const auto [t, r] = slab_coefficients(spec);
  DeviceMatrices dev;
  dev.transmission << t, r, r, t;
  const Eigen::Matrix2cd defect = Eigen::Matrix2cd::Identity() - dev.transmission * dev.transmission.adjoint();
  dev.absorption = positive_sqrt(0.5 * (defect + defect.adjoint()));
  dev.lambda = assemble_lambda(dev.transmission, dev.absorption);
  return dev;
}

Eigen::Matrix4cd assemble_lambda(const Eigen::Matrix2cd& T, const Eigen::Matrix2cd& A) {
  const Eigen::Matrix2cd defect = T * T.adjoint() + A * A.adjoint() - Eigen::Matrix2cd::Identity();
  if (defect.cwiseAbs().maxCoeff() > 1e-10)
    throw Error(ErrorCode::DomainError, "T T^+ + A A^+ != I; no unitary completion");
  const Polar pt = left_polar(T);
  const Polar pa = left_polar(A);
  Eigen::Matrix4cd lambda;
  lambda.topLeftCorner<2, 2>() = T;
  lambda.topRightCorner<2, 2>() = A;
  lambda.bottomLeftCorner<2, 2>() = -pa.positive * pt.unitary;
  lambda.bottomRightCorner<2, 2>() = pt.positive * pa.unitary;
  return lambda;
}

DeviceMatrices lossless_device(const Eigen::Matrix2cd& T) {
  DeviceMatrices dev;
  dev.transmission = T;
  dev.absorption = Eigen::Matrix2cd::Zero();
  dev.lambda = assemble_lambda(T, dev.absorption);
  return dev;
}

DeviceMatrices fiber_pair_device(cplx T1, cplx T2) {
  if (std::abs(T1) > 1.0 || std::abs(T2) > 1.0) throw Error(ErrorCode::DomainError, "|T_i| must be <= 1");
  DeviceMatrices dev;
  dev.transmission << T1, 0.0, 0.0, T2;
  dev.absorption << std::sqrt(1.0 - std::norm(T1)), 0.0, 0.0, std::sqrt(1.0 - std::norm(T2));
  dev.lambda = assemble_lambda(dev.transmission, dev.absorption);
  return dev;
}

cplx fiber_T(const FiberSpec& spec) {
  if (spec.length < 0.0) throw Error(ErrorCode::DomainError, "fiber length must be >= 0");
  if (spec.absorption_length <= 0.0) throw Error(ErrorCode::DomainError, "absorption length must be > 0");
  const double phase = spec.n_real * spec.omega_over_c * spec.length;
  return std::polar(std::exp(-spec.length / spec.absorption_length), phase);
}

}  // namespace entdeg::devices
