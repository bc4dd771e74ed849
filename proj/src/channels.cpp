#include "entdeg/channels.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "entdeg/error.hpp"
#include "entdeg/specfun.hpp"

namespace entdeg::channels {

namespace {

void check_q(cplx q) {
  if (std::abs(q) >= 1.0) throw Error(ErrorCode::DomainError, "squeeze parameter requires |q| < 1");
}

void check_budget(const fock::FockState2& s, const TruncationOptions& opts) {
  const double deficit = 1.0 - s.trace();
  if (deficit > opts.budget)
    throw Error(ErrorCode::TruncationError, "trace deficit " + std::to_string(deficit) + " at cutoff " +
                                                std::to_string(s.cutoff) + " exceeds budget");
}

// Field amplitudes psi(m1, m2; g1, g2) as a (N+1)^2 x (G+1)^2 matrix.
Eigen::MatrixXcd device_amplitudes(const specfun::HermiteTable& table, int N, int G, double prefactor) {
  const int d = N + 1;
  const int gd = G + 1;
  Eigen::MatrixXcd psi(d * d, gd * gd);
  for (int m1 = 0; m1 < d; ++m1)
    for (int m2 = 0; m2 < d; ++m2)
      for (int g1 = 0; g1 < gd; ++g1)
        for (int g2 = 0; g2 < gd; ++g2) psi(m1 * d + m2, g1 * gd + g2) = prefactor * table.normalized(m1, m2, g1, g2);
  return psi;
}

// Four-mode Fock states of fixed total photon number t, stored compactly.
// Tuples (a, b, c, d) with a + b + c + d = t are ordered lexicographically.
class Shell {
 public:
  explicit Shell(int t) : t_(t), offset_a_(t + 2, 0) {
    for (int a = 0; a <= t; ++a) {
      const long u = t - a;
      offset_a_[a + 1] = offset_a_[a] + (u + 2) * (u + 1) / 2;
    }
    data_.assign(static_cast<std::size_t>(offset_a_[t + 1]), cplx{0.0, 0.0});
  }

  int total() const { return t_; }
  std::size_t index(int a, int b, int c) const {
    const long u = t_ - a;
    return static_cast<std::size_t>(offset_a_[a] + b * (u + 1) - static_cast<long>(b) * (b - 1) / 2 + c);
  }
  cplx& at(int a, int b, int c) { return data_[index(a, b, c)]; }
  cplx at(int a, int b, int c) const { return data_[index(a, b, c)]; }

  template <class F>
  void for_each(F&& f) const {
    for (int a = 0; a <= t_; ++a)
      for (int b = 0; a + b <= t_; ++b)
        for (int c = 0; a + b + c <= t_; ++c) f(std::array<int, 4>{a, b, c, t_ - a - b - c}, at(a, b, c));
  }

 private:
  int t_;
  std::vector<long> offset_a_;
  std::vector<cplx> data_;
};

// Applies sum_j coef_j a_j^+ to a shell state.
Shell raise(const Shell& s, const std::array<cplx, 4>& coef, double scale) {
  Shell out(s.total() + 1);
  s.for_each([&](const std::array<int, 4>& n, cplx v) {
    if (v == cplx{0.0, 0.0}) return;
    const cplx w = v * scale;
    for (int j = 0; j < 4; ++j) {
      if (coef[j] == cplx{0.0, 0.0}) continue;
      std::array<int, 4> m = n;
      ++m[j];
      out.at(m[0], m[1], m[2]) += coef[j] * std::sqrt(static_cast<double>(m[j])) * w;
    }
  });
  return out;
}

}  // namespace

fock::FockState2 lossy_bs_output(const SqueezedInputPair& in, const devices::DeviceMatrices& dev, int cutoff,
                                 const TruncationOptions& opts) {
  check_q(in.q1);
  check_q(in.q2);
  if (cutoff < 0) throw Error(ErrorCode::DomainError, "cutoff must be non-negative");
  const Eigen::Matrix4cd& L = dev.lambda;
  const Eigen::Matrix4cd Md =
      in.q1 * L.col(0) * L.col(0).transpose() + in.q2 * L.col(1) * L.col(1).transpose();
  const specfun::SymmetricComplexMatrix4 M(Md);
  const double prefactor = std::pow((1.0 - std::norm(in.q1)) * (1.0 - std::norm(in.q2)), 0.25);
  const int N = cutoff;

  // Grow the device box until one more step adds no weight.
  int G = 0;
  double previous = -1.0;
  Eigen::MatrixXcd psi;
  for (;;) {
    const specfun::HermiteTable table(M, {N + 1, N + 1, G + 1, G + 1});
    psi = device_amplitudes(table, N, G, prefactor);
    const double weight = psi.squaredNorm();
    if (previous >= 0.0 && weight - previous < opts.device_increment) break;
    if (G >= opts.device_cap) break;
    previous = weight;
    G = std::min(opts.device_cap, G + 4);
  }

  fock::FockState2 out{N, psi * psi.adjoint(), 0.0};
  out.truncation_deficit = std::max(0.0, 1.0 - out.trace());
  check_budget(out, opts);
  return out;
}

double fiber_k(int k, int l, int m, double q_abs2, double t1_abs2, double t2_abs2) {
  using specfun::log_factorial;
  const int a = std::max(k, l);
  const int d = std::abs(k - l);
  const double r1 = 1.0 - t1_abs2;
  const double r2 = 1.0 - t2_abs2;
  double log_k = 0.0;
  // base^exp with 0^0 = 1 and 0^positive = 0.
  auto add_power = [&log_k](double base, int exp) {
    if (exp == 0) return true;
    if (base <= 0.0) return false;
    log_k += exp * std::log(base);
    return true;
  };
  if (!add_power(q_abs2, a) || !add_power(t1_abs2, k) || !add_power(t2_abs2, l) || !add_power(r1, a - k) ||
      !add_power(r2, a - l))
    return 0.0;
  log_k += log_factorial(a) + log_factorial(a + m) - log_factorial(d) -
           0.5 * (log_factorial(k) + log_factorial(l) + log_factorial(k + m) + log_factorial(l + m));
  const double x = q_abs2 * r1 * r2;
  const double f = specfun::gauss_2f1(a + 1.0, a + m + 1.0, d + 1.0, x);
  return std::exp(log_k) * f;
}

fock::FockState2 fiber_output(cplx q, const FiberChannelSpec& chan, int cutoff, const TruncationOptions& opts) {
  check_q(q);
  if (chan.n_th1 != 0.0 || chan.n_th2 != 0.0)
    throw Error(ErrorCode::DomainError, "Fock fiber channel needs ground-state fibers");
  if (chan.R1 != cplx{0.0, 0.0} || chan.R2 != cplx{0.0, 0.0})
    throw Error(ErrorCode::DomainError, "Fock fiber channel assumes perfect input coupling");
  if (std::abs(chan.T1) > 1.0 || std::abs(chan.T2) > 1.0)
    throw Error(ErrorCode::DomainError, "|T_i| must be <= 1");

  fock::FockState2 out = fock::zero_state(cutoff);
  const int N = cutoff;
  const double q2 = std::norm(q);
  const double t1 = std::norm(chan.T1);
  const double t2 = std::norm(chan.T2);
  const cplx step = -q * chan.T1 * chan.T2;
  cplx phase{1.0, 0.0};
  for (int m = 0; m <= N; ++m) {
    const cplx pre = (1.0 - q2) * phase;
    for (int k = 0; k + m <= N; ++k)
      for (int l = 0; l + m <= N; ++l) {
        const double K = fiber_k(k, l, m, q2, t1, t2);
        if (K == 0.0) continue;
        const cplx v = pre * K;
        const int row = out.index(m + k, m + l);
        const int col = out.index(k, l);
        out.rho(row, col) = v;
        if (m > 0) out.rho(col, row) = std::conj(v);
      }
    phase *= step;
  }
  out.truncation_deficit = std::max(0.0, 1.0 - out.trace());
  check_budget(out, opts);
  return out;
}

fock::FockState2 brute_force_channel(const fock::PureState2& psi_in, const Eigen::Matrix4cd& lambda, int cutoff) {
  if (cutoff < 0) throw Error(ErrorCode::DomainError, "cutoff must be non-negative");
  if (cutoff > kOracleCutoff || psi_in.cutoff > kOracleInputCutoff)
    throw Error(ErrorCode::MemoryCap, "oracle limited to output cutoff " + std::to_string(kOracleCutoff) +
                                          " and input cutoff " + std::to_string(kOracleInputCutoff));
  const int Nin = psi_in.cutoff;
  const int N = cutoff;
  const int gd = 2 * Nin + 1;
  const int d = N + 1;
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(d * d, gd * gd);

  std::array<cplx, 4> b1, b2;
  for (int j = 0; j < 4; ++j) {
    b1[j] = lambda(j, 0);
    b2[j] = lambda(j, 1);
  }

  auto accumulate = [&](const Shell& s, cplx c) {
    s.for_each([&](const std::array<int, 4>& n, cplx v) {
      if (n[0] > N || n[1] > N || v == cplx{0.0, 0.0}) return;
      psi(n[0] * d + n[1], n[2] * gd + n[3]) += c * v;
    });
  };

  Shell base(0);
  base.at(0, 0, 0) = 1.0;
  for (int n2 = 0; n2 <= Nin; ++n2) {
    if (n2 > 0) base = raise(base, b2, 1.0 / std::sqrt(static_cast<double>(n2)));
    Shell cur = base;
    for (int n1 = 0; n1 <= Nin; ++n1) {
      if (n1 > 0) cur = raise(cur, b1, 1.0 / std::sqrt(static_cast<double>(n1)));
      const cplx c = psi_in.amp(n1, n2);
      if (c != cplx{0.0, 0.0}) accumulate(cur, c);
    }
  }

  fock::FockState2 out{N, psi * psi.adjoint(), 0.0};
  out.truncation_deficit = std::max(0.0, 1.0 - out.trace());
  return out;
}

gaussian::VarianceMatrix device_output_variance(const SqueezedInputPair& in, const devices::DeviceMatrices& dev) {
  check_q(in.q1);
  check_q(in.q2);
  // Single-mode squeezed vacuum with q = tanh(r) e^{i theta}:
  // <a a> = -e^{i theta} sinh r cosh r, <a^+ a> = sinh^2 r.
  Eigen::Matrix2cd aa = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd ad_a = Eigen::Matrix2cd::Zero();
  const std::array<cplx, 2> qs{in.q1, in.q2};
  for (int i = 0; i < 2; ++i) {
    const double r = std::atanh(std::abs(qs[i]));
    aa(i, i) = -std::polar(std::sinh(r) * std::cosh(r), std::arg(qs[i]));
    ad_a(i, i) = std::sinh(r) * std::sinh(r);
  }
  const Eigen::Matrix2cd& T = dev.transmission;
  const Eigen::Matrix2cd aa_out = T * aa * T.transpose();
  const Eigen::Matrix2cd ad_a_out = T.conjugate() * ad_a * T.transpose();
  // D_ij = 1/2 <{A_i, A_j^+}> with A = (a1, a2, a1^+, a2^+).
  Eigen::Matrix4cd D;
  const Eigen::Matrix2cd half = 0.5 * Eigen::Matrix2cd::Identity();
  D.topLeftCorner<2, 2>() = ad_a_out.transpose() + half;
  D.topRightCorner<2, 2>() = aa_out;
  D.bottomLeftCorner<2, 2>() = aa_out.conjugate();
  D.bottomRightCorner<2, 2>() = ad_a_out + half;
  return gaussian::from_ladder_covariance(D);
}

gaussian::VarianceMatrix gaussian_fiber_variance(double xi, const FiberChannelSpec& chan) {
  const double loss1 = 1.0 - std::norm(chan.T1) - std::norm(chan.R1);
  const double loss2 = 1.0 - std::norm(chan.T2) - std::norm(chan.R2);
  if (loss1 < -1e-12 || loss2 < -1e-12) throw Error(ErrorCode::DomainError, "|T_i|^2 + |R_i|^2 > 1");
  if (chan.n_th1 < 0.0 || chan.n_th2 < 0.0) throw Error(ErrorCode::DomainError, "n_th must be >= 0");
  const double c = std::cosh(2.0 * xi);
  const double s = std::sinh(2.0 * xi);
  const double x = 0.5 * c * std::norm(chan.T1) + 0.5 * std::norm(chan.R1) + (chan.n_th1 + 0.5) * loss1;
  const double y = 0.5 * c * std::norm(chan.T2) + 0.5 * std::norm(chan.R2) + (chan.n_th2 + 0.5) * loss2;
  const cplx tt = chan.T1 * chan.T2;
  gaussian::VarianceMatrix V;
  V.v.setZero();
  V.v(0, 0) = V.v(1, 1) = x;
  V.v(2, 2) = V.v(3, 3) = y;
  Eigen::Matrix2d Z;
  Z << -0.5 * s * tt.real(), -0.5 * s * tt.imag(), -0.5 * s * tt.imag(), 0.5 * s * tt.real();
  V.v.block<2, 2>(0, 2) = Z;
  V.v.block<2, 2>(2, 0) = Z.transpose();
  return V;
}

double normally_ordered_variance(double xi, const FiberChannelSpec& chan, const QuadratureForm& F) {
  if (chan.R1 != cplx{0.0, 0.0} || chan.R2 != cplx{0.0, 0.0})
    throw Error(ErrorCode::DomainError, "squeezing variance assumes perfect input coupling");
  const double r = std::abs(xi);
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double t1 = std::norm(chan.T1);
  const double t2 = std::norm(chan.T2);
  const double phase = F.phi1 + F.phi2 + std::arg(chan.T1) + std::arg(chan.T2) + (xi < 0.0 ? M_PI : 0.0);
  return 2.0 * F.F1 * F.F1 * (t1 * sh2 + chan.n_th1 * (1.0 - t1)) +
         2.0 * F.F2 * F.F2 * (t2 * sh2 + chan.n_th2 * (1.0 - t2)) -
         2.0 * F.F1 * F.F2 * std::abs(chan.T1 * chan.T2) * std::sinh(2.0 * r) * std::cos(phase);
}

double min_squeezing_variance(double xi, const FiberChannelSpec& chan, const QuadratureForm& F) {
  const double t = std::norm(chan.T1);
  if (std::abs(t - std::norm(chan.T2)) > 1e-12 || std::abs(chan.n_th1 - chan.n_th2) > 1e-12 ||
      std::abs(F.F1 - F.F2) > 1e-12)
    throw Error(ErrorCode::DomainError, "minimum form needs equal fibers and equal amplitudes");
  const double r = std::abs(xi);
  // sinh(r) e^{-r} = (1 - e^{-2r}) / 2
  return 4.0 * F.F1 * F.F1 * (chan.n_th1 * (1.0 - t) + 0.5 * t * std::expm1(-2.0 * r));
}

gaussian::VarianceMatrix quadrature_variance(const fock::FockState2& state) {
  const int N = state.cutoff;
  const int d = N + 1;
  // Ladder operators A = (a1, a2, a1^+, a2^+) acting on |n1, n2>; returns
  // false when the result leaves the truncated space or vanishes.
  auto apply = [N](int op, int& n1, int& n2, double& coef) {
    int& n = (op % 2 == 0) ? n1 : n2;
    if (op < 2) {
      if (n == 0) return false;
      coef *= std::sqrt(static_cast<double>(n));
      --n;
    } else {
      if (n == N) return false;
      ++n;
      coef *= std::sqrt(static_cast<double>(n));
    }
    return true;
  };
  auto dagger = [](int op) { return (op + 2) % 4; };
  // Tr(rho O) for O = op_first op_second (op_second acts first); op_first < 0 means none.
  auto expect = [&](int op_first, int op_second) {
    cplx sum{0.0, 0.0};
    for (int n1 = 0; n1 < d; ++n1)
      for (int n2 = 0; n2 < d; ++n2) {
        int m1 = n1;
        int m2 = n2;
        double coef = 1.0;
        if (!apply(op_second, m1, m2, coef)) continue;
        if (op_first >= 0 && !apply(op_first, m1, m2, coef)) continue;
        sum += coef * state.rho(n1 * d + n2, m1 * d + m2);
      }
    return sum;
  };

  std::array<cplx, 4> mean;
  for (int i = 0; i < 4; ++i) mean[i] = expect(-1, i);
  Eigen::Matrix4cd D;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx sym = 0.5 * (expect(i, dagger(j)) + expect(dagger(j), i));
      D(i, j) = sym - mean[i] * std::conj(mean[j]);
    }
  return gaussian::from_ladder_covariance(D);
}

}  // namespace entdeg::channels
