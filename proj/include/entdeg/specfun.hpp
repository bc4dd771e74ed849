#pragma once

// Special-function kernel: factorials in log space, Hermite numbers, the
// Gauss hypergeometric series and multivariable Hermite polynomials of zero
// argument.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace entdeg {

using cplx = std::complex<double>;

namespace specfun {

/// ln(n!) for n >= 0. Memoized for n < 4096, std::lgamma beyond.
double log_factorial(int n);

/// H_m(0) of the physicists' Hermite polynomial.
double hermite1_zero(int m);

struct Hyp2F1Options {
  double rel_tol = 1e-13;
  long max_terms = 1'000'000;
};

/// 2F1(a, b; c; z) for real parameters and 0 <= z < 1 by direct summation.
/// Throws DomainError outside that range and NonConvergence when the term
/// cap is hit.
double gauss_2f1(double a, double b, double c, double z, const Hyp2F1Options& opts = {});

/// Symmetric complex 4x4 matrix; only the upper triangle is stored so
/// M(i, j) == M(j, i) holds exactly.
class SymmetricComplexMatrix4 {
 public:
  SymmetricComplexMatrix4() { upper_.fill(cplx{0.0, 0.0}); }
  /// Takes the upper triangle of `m`.
  explicit SymmetricComplexMatrix4(const Eigen::Matrix4cd& m);

  cplx operator()(int i, int j) const { return upper_[slot(i, j)]; }
  void set(int i, int j, cplx v) { upper_[slot(i, j)] = v; }
  Eigen::Matrix4cd dense() const;

 private:
  static int slot(int i, int j) {
    if (i > j) std::swap(i, j);
    return i * 4 - i * (i - 1) / 2 + (j - i);
  }
  std::array<cplx, 10> upper_;
};

/// Excitation counts (m1, m2, g1, g2).
struct MultiIndex4 {
  std::array<int, 4> n{0, 0, 0, 0};

  int order() const { return n[0] + n[1] + n[2] + n[3]; }
};

inline constexpr int kDefaultHermiteOrderCap = 120;

/// H^M_{m1,m2,g1,g2}(0): the mixed derivative of exp(-1/2 l^T M l) at l = 0,
/// evaluated by multinomial expansion of the single surviving power of the
/// quadratic form. Terms are accumulated in log space. Throws OrderCap when
/// the total order exceeds `max_order`.
cplx hermite_multi_zero(const SymmetricComplexMatrix4& M, const MultiIndex4& idx,
                        int max_order = kDefaultHermiteOrderCap);

/// Table of normalized values H^M_alpha(0) / sqrt(alpha!) over the box
/// 0 <= alpha_i < extent_i, filled by the three-term derivative recurrence
///   h_{a+e_i} sqrt(a_i + 1) = -sum_j M_ij sqrt(a_j) h_{a-e_j}.
/// Normalized values stay O(1) where the raw polynomials grow factorially,
/// which is what the Fock-space channel assembly needs.
class HermiteTable {
 public:
  HermiteTable(const SymmetricComplexMatrix4& M, std::array<int, 4> extents);

  const std::array<int, 4>& extents() const { return extents_; }
  cplx normalized(int i0, int i1, int i2, int i3) const {
    return data_[linear(i0, i1, i2, i3)];
  }
  /// Un-normalized H^M_alpha(0).
  cplx value(int i0, int i1, int i2, int i3) const;

 private:
  std::size_t linear(int i0, int i1, int i2, int i3) const {
    return ((static_cast<std::size_t>(i0) * extents_[1] + i1) * extents_[2] + i2) * extents_[3] + i3;
  }
  std::array<int, 4> extents_;
  std::vector<cplx> data_;
};

}  // namespace specfun
}  // namespace entdeg
