#pragma once

// State transformations through beam splitters and fibers, in the Fock
// picture (density matrices) and the Gaussian picture (variance matrices).

#include <complex>

#include <Eigen/Dense>

#include "entdeg/devices.hpp"
#include "entdeg/fock.hpp"
#include "entdeg/gaussian.hpp"

namespace entdeg {

using cplx = std::complex<double>;

namespace channels {

/// q_i = tanh|xi_i| e^{i phi_i}.
struct SqueezedInputPair {
  cplx q1{0.0, 0.0};
  cplx q2{0.0, 0.0};
};

struct FiberChannelSpec {
  cplx T1{1.0, 0.0};
  cplx T2{1.0, 0.0};
  double n_th1 = 0.0;
  double n_th2 = 0.0;
  /// Input-coupling reflections; only the Gaussian path uses them.
  cplx R1{0.0, 0.0};
  cplx R2{0.0, 0.0};
};

/// F = |F1| e^{i phi1} a1 + |F2| e^{i phi2} a2 + H.c.
struct QuadratureForm {
  double F1 = 1.0;
  double F2 = 1.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

struct TruncationOptions {
  /// Allowed 1 - trace of the output.
  double budget = 1e-6;
  /// Device-mode sums stop once a new shell adds less than this.
  double device_increment = 1e-10;
  int device_cap = 60;
};

/// Field state behind a (possibly lossy) four-port device fed with two
/// squeezed vacua; the device starts in its ground state and is traced out.
fock::FockState2 lossy_bs_output(const SqueezedInputPair& in, const devices::DeviceMatrices& dev, int cutoff,
                                 const TruncationOptions& opts = {});

/// TMSV with parameter q through two ground-state fibers with perfect
/// coupling. Elements
///   <m+k, m+l|rho|k, l> = (1-|q|^2) (-q T1 T2)^m K_{k,l,m}
/// and their conjugates; K is evaluated with 2F1.
fock::FockState2 fiber_output(cplx q, const FiberChannelSpec& chan, int cutoff, const TruncationOptions& opts = {});

/// K_{k,l,m} for the fiber channel, computed in log space.
double fiber_k(int k, int l, int m, double q_abs2, double t1_abs2, double t2_abs2);

inline constexpr int kOracleCutoff = 12;
inline constexpr int kOracleInputCutoff = 40;

/// Independent oracle: applies a_i^+ -> sum_j Lambda_ji a_j^+ to the input
/// polynomial in the four-mode Fock space, then traces out the device modes.
/// Throws MemoryCap beyond the oracle cutoffs.
fock::FockState2 brute_force_channel(const fock::PureState2& psi_in, const Eigen::Matrix4cd& lambda, int cutoff);

/// Variance matrix of two squeezed vacua after a device in its ground state.
/// Normally ordered moments transform as <a a^T> -> T <a a^T> T^T and
/// <a^+ a^T> -> T* <a^+ a^T> T^T; the vacuum device noise adds nothing to them.
gaussian::VarianceMatrix device_output_variance(const SqueezedInputPair& in, const devices::DeviceMatrices& dev);

/// Output variance matrix of a phi = 0 TMSV sent through two fibers coupled
/// to thermal reservoirs.
gaussian::VarianceMatrix gaussian_fiber_variance(double xi, const FiberChannelSpec& chan);

/// Normally ordered variance <:(Delta F)^2:> of the fiber output.
double normally_ordered_variance(double xi, const FiberChannelSpec& chan, const QuadratureForm& F);

/// Phase-minimized version for equal fibers and equal amplitudes:
///   4|F|^2 [n_th (1 - |T|^2) - |T|^2 sinh(xi) e^{-xi}].
double min_squeezing_variance(double xi, const FiberChannelSpec& chan, const QuadratureForm& F);

/// Symmetrized second moments of a Fock-space state as a variance matrix
/// (first moments subtracted).
gaussian::VarianceMatrix quadrature_variance(const fock::FockState2& state);

}  // namespace channels
}  // namespace entdeg
