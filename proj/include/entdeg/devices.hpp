#pragma once

// Optical device models: beam splitters, dielectric plates and fibers.
// Lengths enter only as dimensionless phases (omega l / c) or ratios l / l_A.

#include <complex>

#include <Eigen/Dense>

namespace entdeg {

using cplx = std::complex<double>;

namespace devices {

/// Complex transmission and reflection coefficient at the mid-frequency.
struct BeamSplitterTR {
  cplx T{1.0, 0.0};
  cplx R{0.0, 0.0};
};

/// Single dielectric slab: complex refractive index and thickness given as the
/// vacuum phase omega l / c.
struct PlateSpec {
  cplx n{1.0, 0.0};
  double phase_thickness = 0.0;
};

struct FiberSpec {
  double length = 0.0;
  double absorption_length = 1.0;
  double n_real = 1.0;
  double omega_over_c = 0.0;
};

/// Characteristic transmission matrix, absorption matrix and the unitary
/// field/device mixing matrix built from them.
struct DeviceMatrices {
  Eigen::Matrix2cd transmission;
  Eigen::Matrix2cd absorption;
  Eigen::Matrix4cd lambda;
};

/// [[T, R], [-R*, T*]]; throws NotLossless unless |T|^2 + |R|^2 = 1.
Eigen::Matrix2cd bs_matrix(const BeamSplitterTR& bs);

/// Entanglement control parameter -q1 T R* + q2 R T*. Zero means the
/// squeezed inputs leave the splitter in a product state.
cplx xi12(cplx q1, cplx q2, const BeamSplitterTR& bs);

/// Fresnel amplitude coefficients of a symmetric slab in vacuum.
struct SlabCoefficients {
  cplx t;
  cplx r;
};
SlabCoefficients slab_coefficients(const PlateSpec& spec);

/// T = [[t, r], [r, t]] from the slab formulas, A = +sqrt(I - T T^+),
/// Lambda assembled from both. Throws NonPhysical if I - T T^+ is not PSD.
DeviceMatrices plate_matrices(const PlateSpec& spec);

/// Unitary completion
///   [[ T,  A ], [ -S C^-1 T,  C S^-1 A ]],  C = sqrt(T T^+), S = sqrt(A A^+),
/// written through the polar factors T = C U_T, A = S U_A so that singular C
/// or S need no inversion. A vanishing T or A gets the identity as polar
/// factor. Throws DomainError unless T T^+ + A A^+ = I to 1e-10.
Eigen::Matrix4cd assemble_lambda(const Eigen::Matrix2cd& T, const Eigen::Matrix2cd& A);

/// Lossless device: Lambda = diag(T, I).
DeviceMatrices lossless_device(const Eigen::Matrix2cd& T);

/// Two independent lossy channels with field transmissions T1, T2.
DeviceMatrices fiber_pair_device(cplx T1, cplx T2);

/// Lambert-Beer transmission exp(i n_R omega l / c) exp(-l / l_A).
cplx fiber_T(const FiberSpec& spec);

/// Positive semidefinite square root of a Hermitian 2x2 matrix. Eigenvalues in
/// (-tol, 0) are clamped; anything below -tol throws NonPhysical.
Eigen::Matrix2cd positive_sqrt(const Eigen::Matrix2cd& h, double tol = 1e-10);

}  // namespace devices
}  // namespace entdeg
