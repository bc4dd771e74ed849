#include "entdeg/fock.hpp"

#include <cmath>
#include <map>

#include "entdeg/error.hpp"
#include "entdeg/specfun.hpp"

namespace entdeg::fock {

namespace {

void check_cutoff(int cutoff) {
  if (cutoff < 0) throw Error(ErrorCode::DomainError, "cutoff must be non-negative");
}

// Single-mode squeezed vacuum amplitudes; returns the weight beyond cutoff.
Eigen::VectorXcd squeezed_vacuum(cplx q, int cutoff, double& deficit) {
  if (std::abs(q) >= 1.0) throw Error(ErrorCode::DomainError, "squeeze parameter requires |q| < 1");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff + 1);
  const double norm = std::pow(1.0 - std::norm(q), 0.25);
  // <2k|psi> = norm (-q/2)^k sqrt((2k)!) / k!
  for (int k = 0; 2 * k <= cutoff; ++k) {
    const double mag = std::exp(0.5 * specfun::log_factorial(2 * k) - specfun::log_factorial(k));
    v(2 * k) = norm * mag * std::pow(-q / 2.0, k);
  }
  deficit = std::max(0.0, 1.0 - v.squaredNorm());
  return v;
}

}  // namespace

Eigen::VectorXcd PureState2::vector() const {
  const int d = cutoff + 1;
  Eigen::VectorXcd v(d * d);
  for (int n1 = 0; n1 < d; ++n1)
    for (int n2 = 0; n2 < d; ++n2) v(n1 * d + n2) = amp(n1, n2);
  return v;
}

FockState2 PureState2::density() const {
  const Eigen::VectorXcd v = vector();
  return FockState2{cutoff, v * v.adjoint(), truncation_deficit};
}

FockState2 zero_state(int cutoff) {
  check_cutoff(cutoff);
  const int d = (cutoff + 1) * (cutoff + 1);
  return FockState2{cutoff, Eigen::MatrixXcd::Zero(d, d), 0.0};
}

PureState2 tmsv(cplx q, int cutoff) {
  check_cutoff(cutoff);
  if (std::abs(q) >= 1.0) throw Error(ErrorCode::DomainError, "tmsv requires |q| < 1");
  PureState2 psi{cutoff, Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1), 0.0};
  const double norm = std::sqrt(1.0 - std::norm(q));
  cplx power{1.0, 0.0};
  for (int n = 0; n <= cutoff; ++n) {
    psi.amp(n, n) = norm * power;
    power *= -q;
  }
  psi.truncation_deficit = std::pow(std::norm(q), cutoff + 1);
  return psi;
}

PureState2 squeezed_pair(cplx q1, cplx q2, int cutoff) {
  check_cutoff(cutoff);
  double d1 = 0.0;
  double d2 = 0.0;
  const Eigen::VectorXcd s1 = squeezed_vacuum(q1, cutoff, d1);
  const Eigen::VectorXcd s2 = squeezed_vacuum(q2, cutoff, d2);
  PureState2 psi{cutoff, s1 * s2.transpose(), 0.0};
  psi.truncation_deficit = d1 + d2 - d1 * d2;
  return psi;
}

Eigen::MatrixXcd partial_trace(const FockState2& state, int keep) {
  if (keep != 1 && keep != 2) throw Error(ErrorCode::DomainError, "keep must be 1 or 2");
  const int d = state.modes_dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      cplx acc{0.0, 0.0};
      for (int k = 0; k < d; ++k)
        acc += keep == 1 ? state.element(m, k, n, k) : state.element(k, m, k, n);
      out(m, n) = acc;
    }
  }
  return out;
}

double von_neumann_entropy(const Eigen::MatrixXcd& dm, double floor) {
  if (dm.rows() != dm.cols()) throw Error(ErrorCode::DomainError, "density matrix must be square");
  if (dm.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dm, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam < -1e-8) throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(lam));
    if (lam > floor) s -= lam * std::log(lam);
  }
  return s;
}

double pure_entanglement(const PureState2& psi) {
  return von_neumann_entropy(psi.amp * psi.amp.adjoint());
}

double schmidt_form_entanglement(const Eigen::MatrixXcd& coeffs) {
  double diag_entropy = 0.0;
  for (Eigen::Index n = 0; n < coeffs.rows(); ++n) {
    const double c = coeffs(n, n).real();
    if (c > kEigenvalueFloor) diag_entropy -= c * std::log(c);
  }
  // Relative entropy to the dephased state is non-negative; clamp round-off.
  return std::max(0.0, diag_entropy - von_neumann_entropy(coeffs));
}

namespace {

// Offsets n1 - n2 of basis states touched by a nonzero element.
std::map<int, bool> support_offsets(const FockState2& state, double tol) {
  std::map<int, bool> offsets;
  const int d = state.modes_dim();
  for (int i = 0; i < state.dim(); ++i) {
    bool used = false;
    for (int j = 0; j < state.dim() && !used; ++j) used = std::abs(state.rho(i, j)) > tol;
    if (used) offsets[i / d - i % d] = true;
  }
  return offsets;
}

Eigen::MatrixXcd extract_block(const FockState2& state, int offset) {
  const int size = state.cutoff + 1 - std::abs(offset);
  Eigen::MatrixXcd c(size, size);
  for (int k = 0; k < size; ++k) {
    const auto [a1, a2] = ladder_member(offset, k);
    for (int l = 0; l < size; ++l) {
      const auto [b1, b2] = ladder_member(offset, l);
      c(k, l) = state.element(a1, a2, b1, b2);
    }
  }
  return c;
}

}  // namespace

double schmidt_form_entanglement(const FockState2& state) {
  const auto offsets = support_offsets(state, 1e-14);
  if (offsets.empty()) return 0.0;
  if (offsets.size() > 1) throw Error(ErrorCode::NotSchmidtForm, "support spans several ladder families");
  return schmidt_form_entanglement(extract_block(state, offsets.begin()->first));
}

FockState2 SchmidtBlock::embed(int cutoff) const {
  FockState2 out = zero_state(cutoff);
  for (Eigen::Index k = 0; k < coeffs.rows(); ++k) {
    const auto [a1, a2] = ladder_member(offset, static_cast<int>(k));
    for (Eigen::Index l = 0; l < coeffs.cols(); ++l) {
      const auto [b1, b2] = ladder_member(offset, static_cast<int>(l));
      out.rho(out.index(a1, a2), out.index(b1, b2)) = coeffs(k, l);
    }
  }
  return out;
}

double SchmidtBlockDecomposition::total_weight() const {
  double w = 0.0;
  for (const auto& b : blocks) w += b.weight;
  return w;
}

FockState2 SchmidtBlockDecomposition::reassemble() const {
  FockState2 out = zero_state(cutoff);
  for (const auto& b : blocks) {
    for (Eigen::Index k = 0; k < b.coeffs.rows(); ++k) {
      const auto [a1, a2] = ladder_member(b.offset, static_cast<int>(k));
      for (Eigen::Index l = 0; l < b.coeffs.cols(); ++l) {
        const auto [b1, b2] = ladder_member(b.offset, static_cast<int>(l));
        out.rho(out.index(a1, a2), out.index(b1, b2)) += b.weight * b.coeffs(k, l);
      }
    }
  }
  return out;
}

SchmidtBlockDecomposition block_decompose(const FockState2& state, double tol) {
  const int d = state.modes_dim();
  auto offset_of = [d](int i) { return i / d - i % d; };
  for (int i = 0; i < state.dim(); ++i) {
    for (int j = 0; j < state.dim(); ++j) {
      if (offset_of(i) != offset_of(j) && std::abs(state.rho(i, j)) > tol)
        throw Error(ErrorCode::StructureViolation,
                    "element couples photon-number offsets " + std::to_string(offset_of(i)) + " and " +
                        std::to_string(offset_of(j)));
    }
  }

  SchmidtBlockDecomposition out{state.cutoff, {}};
  for (int offset = -state.cutoff; offset <= state.cutoff; ++offset) {
    Eigen::MatrixXcd c = extract_block(state, offset);
    const double w = c.trace().real();
    if (w <= 0.0) continue;
    out.blocks.push_back(SchmidtBlock{offset, w, c / w});
  }
  return out;
}

}  // namespace entdeg::fock
