#pragma once

// Truncated two-mode Fock-space states. Basis index of |n1, n2> is
// n1 * (cutoff + 1) + n2.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entdeg {

using cplx = std::complex<double>;

namespace fock {

inline constexpr int kDefaultCutoff = 30;
inline constexpr double kEigenvalueFloor = 1e-14;

struct FockState2 {
  int cutoff = 0;
  Eigen::MatrixXcd rho;
  /// Probability weight known to lie beyond the cutoff.
  double truncation_deficit = 0.0;

  int modes_dim() const { return cutoff + 1; }
  int dim() const { return (cutoff + 1) * (cutoff + 1); }
  int index(int n1, int n2) const { return n1 * (cutoff + 1) + n2; }
  cplx element(int m1, int m2, int n1, int n2) const { return rho(index(m1, m2), index(n1, n2)); }
  double trace() const { return rho.trace().real(); }
};

/// Pure state with amplitude matrix amp(n1, n2) = <n1, n2|psi>.
struct PureState2 {
  int cutoff = 0;
  Eigen::MatrixXcd amp;
  double truncation_deficit = 0.0;

  double norm_squared() const { return amp.squaredNorm(); }
  Eigen::VectorXcd vector() const;
  FockState2 density() const;
};

FockState2 zero_state(int cutoff);

/// Two-mode squeezed vacuum sqrt(1-|q|^2) sum_n (-q)^n |n, n>.
PureState2 tmsv(cplx q, int cutoff);

/// Product of single-mode squeezed vacua (1-|q|^2)^{1/4} exp(-q a^{+2}/2)|0>
/// in each mode.
PureState2 squeezed_pair(cplx q1, cplx q2, int cutoff);

/// Reduced single-mode density matrix; `keep` is 1 or 2.
Eigen::MatrixXcd partial_trace(const FockState2& state, int keep);

/// -sum lambda ln lambda over eigenvalues above `floor` (nats). Throws NotPSD
/// when an eigenvalue is below -1e-8.
double von_neumann_entropy(const Eigen::MatrixXcd& dm, double floor = kEigenvalueFloor);

/// Entropy of entanglement of a pure state (reduced entropy of mode 1).
double pure_entanglement(const PureState2& psi);

/// Relative-entropy entanglement of a state supported on one Schmidt family,
/// given its coefficient matrix C in that family:
///   E = -sum_n C_nn ln C_nn - S(C).
double schmidt_form_entanglement(const Eigen::MatrixXcd& coeffs);

/// Same for a full two-mode state; the support must lie on a single ladder
/// family {|k+d, k>} or {|k, k+d>}, otherwise NotSchmidtForm is thrown.
double schmidt_form_entanglement(const FockState2& state);

/// Photon-number difference n1 - n2 shared by every member of a ladder family.
struct SchmidtBlock {
  int offset = 0;
  double weight = 0.0;
  /// Normalized coefficients on the family members, k = 0 .. cutoff - |offset|.
  Eigen::MatrixXcd coeffs;

  FockState2 embed(int cutoff) const;
};

/// Convex decomposition rho = sum_d p_d rho_d into ladder-family blocks.
struct SchmidtBlockDecomposition {
  int cutoff = 0;
  std::vector<SchmidtBlock> blocks;

  double total_weight() const;
  FockState2 reassemble() const;
};

/// Basis state of the ladder family with offset d and member index k.
inline std::pair<int, int> ladder_member(int offset, int k) {
  return offset >= 0 ? std::pair{k + offset, k} : std::pair{k, k - offset};
}

/// Splits a state whose only nonzero elements are <k+d, k|rho|l+d, l> into
/// its ladder blocks. Throws StructureViolation if an element coupling two
/// different offsets exceeds `tol`.
SchmidtBlockDecomposition block_decompose(const FockState2& state, double tol = 1e-12);

}  // namespace fock
}  // namespace entdeg
