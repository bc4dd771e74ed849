#pragma once

// Entanglement quantifiers: exact TMSV value, single-pure-state extraction
// estimate, convexity upper bound and the relative-entropy distance to
// separable Gaussian states on the separability boundary.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "entdeg/fock.hpp"
#include "entdeg/gaussian.hpp"

namespace entdeg {

using cplx = std::complex<double>;

namespace entanglement {

/// -ln(1 - |q|^2) - |q|^2/(1 - |q|^2) ln|q|^2.
double tmsv_entanglement(cplx q);

/// Mean photon number of a TMSV, |q|^2 / (1 - |q|^2).
double tmsv_mean_photons(cplx q);

/// |q| for a TMSV with mean photon number nbar per mode.
double q_from_mean_photons(double nbar);

/// (1 - lambda) E(|Psi>) for the pure state extracted from the fiber output,
/// written in terms of w = y / (1 - x)^2:
///   1 - lambda = (1 - |q|^2) / ((1 - x)(1 - w)),
///   E(|Psi>) = -ln(1 - w) - w ln w / (1 - w).
double extraction_estimate(cplx q, cplx T1, cplx T2);

/// Amplitudes sqrt(1 - lambda) <n, n|Psi> of the extracted state.
fock::PureState2 extracted_state(cplx q, cplx T1, cplx T2, int cutoff);

enum class BoundRoute { LadderBlocks, Spectral };

struct ConvexityBound {
  double value = 0.0;
  BoundRoute route = BoundRoute::LadderBlocks;
  int terms = 0;
  double weight_used = 0.0;
};

/// Weighted sum of component entanglements over a convex decomposition.
/// Ladder-structured states use their Schmidt blocks; anything else falls
/// back to the eigen-decomposition into pure components.
ConvexityBound convexity_bound_detailed(const fock::FockState2& state, double weight_tail = 1e-8);
double convexity_bound(const fock::FockState2& state);

/// Point on the separability boundary: z2 solves the equality for given
/// (x, y, z1).
struct BoundarySeparableParams {
  double x = 0.5;
  double y = 0.5;
  double z1 = 0.0;
  double z2 = 0.0;

  gaussian::GenericForm form() const { return {x, y, z1, z2}; }
};

/// All boundary points above (x, y, z1): z2 = -sign(z1) u, and both signs
/// when z1 = 0. Throws NoRealRoot when none exists.
std::vector<BoundarySeparableParams> boundary_candidates(double x, double y, double z1);

/// The z1 z2 <= 0 root (z2 >= 0 when z1 = 0).
BoundarySeparableParams boundary_embed(double x, double y, double z1);

/// S(rho || sigma) = -S(rho) - ln N_sigma + 1/2 Tr(M_sigma D_rho).
double gaussian_relative_entropy(const gaussian::VarianceMatrix& rho, const gaussian::VarianceMatrix& sigma);

struct MinimizerOptions {
  int restarts = 8;
  double perturbation = 0.2;
  std::uint64_t seed = 20010601;
  double x_tol = 1e-8;
  double f_tol = 1e-10;
  int max_evaluations = 20000;
  /// Throw MinimizerFailure when no restart converges.
  bool strict = true;
};

struct MinimizerDiagnostics {
  int iterations = 0;
  int evaluations = 0;
  int restarts_used = 0;
  int restarts_converged = 0;
  double simplex_size = 0.0;
  bool converged = true;
  bool short_circuit = false;
};

struct DistanceResult {
  double value = 0.0;
  BoundarySeparableParams argmin;
  MinimizerDiagnostics diag;
};

/// Minimum of the Gaussian relative entropy over the separability boundary,
/// searched in (x, y, z1) after reducing rho to its standard form.
DistanceResult distance_to_separable_gaussians(const gaussian::VarianceMatrix& rho,
                                               const MinimizerOptions& opts = {});

struct EntanglementReport {
  std::optional<double> e_exact_pure;
  std::optional<double> e_estimate;
  std::optional<double> e_bound;
  std::optional<double> e_distance;
  gaussian::SeparabilityVerdict separable;
  std::optional<DistanceResult> distance;
  double truncation_deficit = 0.0;
};

struct FiberComparison {
  int cutoff = fock::kDefaultCutoff;
  bool with_bound = true;
  bool with_estimate = true;
  bool with_distance = true;
  MinimizerOptions minimizer{};
};

/// All quantifiers for a TMSV with real q > 0 sent through two equal
/// ground-state fibers of field transmission T.
EntanglementReport fiber_report(double q, double T, const FiberComparison& cfg = {});

}  // namespace entanglement
}  // namespace entdeg
