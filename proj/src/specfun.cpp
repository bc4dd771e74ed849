#include "entdeg/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entdeg/error.hpp"

namespace entdeg::specfun {

namespace {

constexpr int kLogFactTableSize = 4096;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogFactTableSize);
    t[0] = 0.0;
    for (int n = 1; n < kLogFactTableSize; ++n) t[n] = t[n - 1] + std::log(static_cast<double>(n));
    return t;
  }();
  return table;
}

// Streaming sum of complex terms given as (log magnitude, phase), rescaled
// against the running maximum so nothing overflows before the final exp.
class LogSum {
 public:
  void add(double log_mag, double phase) {
    if (empty_) {
      max_ = log_mag;
      empty_ = false;
    } else if (log_mag > max_) {
      acc_ *= std::exp(max_ - log_mag);
      max_ = log_mag;
    }
    acc_ += std::polar(std::exp(log_mag - max_), phase);
  }
  cplx value() const { return empty_ ? cplx{0.0, 0.0} : acc_ * std::exp(max_); }

 private:
  bool empty_ = true;
  double max_ = 0.0;
  cplx acc_{0.0, 0.0};
};

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "log_factorial of negative argument");
  if (n < kLogFactTableSize) return log_factorial_table()[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double hermite1_zero(int m) {
  if (m < 0) throw Error(ErrorCode::DomainError, "negative Hermite order");
  if (m % 2 != 0) return 0.0;
  const int k = m / 2;
  const double mag = std::exp(log_factorial(m) - log_factorial(k));
  return (k % 2 == 0) ? mag : -mag;
}

double gauss_2f1(double a, double b, double c, double z, const Hyp2F1Options& opts) {
  if (!(z >= 0.0 && z < 1.0)) throw Error(ErrorCode::DomainError, "gauss_2f1 requires 0 <= z < 1");
  if (c <= 0.0 && c == std::floor(c))
    throw Error(ErrorCode::DomainError, "gauss_2f1: c is a non-positive integer");
  if (z == 0.0) return 1.0;

  double sum = 1.0;
  double term = 1.0;
  for (long n = 0; n < opts.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    const double ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    // Once the ratio has dropped below one the remaining tail is bounded by a
    // geometric series.
    const double r = std::abs(ratio);
    if (r < 1.0 && std::abs(term) * r / (1.0 - r) <= opts.rel_tol * std::abs(sum)) return sum;
  }
  throw Error(ErrorCode::NonConvergence, "gauss_2f1 exceeded term cap; z too close to 1");
}

SymmetricComplexMatrix4::SymmetricComplexMatrix4(const Eigen::Matrix4cd& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) upper_[slot(i, j)] = m(i, j);
}

Eigen::Matrix4cd SymmetricComplexMatrix4::dense() const {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = (*this)(i, j);
  return out;
}

cplx hermite_multi_zero(const SymmetricComplexMatrix4& M, const MultiIndex4& idx, int max_order) {
  for (int v : idx.n)
    if (v < 0) throw Error(ErrorCode::DomainError, "negative multi-index component");
  const int m = idx.order();
  if (m > max_order) throw Error(ErrorCode::OrderCap, "multivariable Hermite order " + std::to_string(m));
  if (m % 2 != 0) return {0.0, 0.0};
  if (m == 0) return {1.0, 0.0};

  // exp(-1/2 l^T M l): only (-1/2 l^T M l)^k / k! with k = m/2 contributes.
  // l^T M l = sum_i M_ii l_i^2 + sum_{i<j} 2 M_ij l_i l_j; its k-th power is
  // expanded multinomially over those ten monomials and the coefficient of
  // l^alpha is multiplied by alpha!.
  const auto& a = idx.n;
  const int k = m / 2;
  double log_alpha_fact = 0.0;
  for (int v : a) log_alpha_fact += log_factorial(v);

  std::array<double, 10> log_abs{};
  std::array<double, 10> arg{};
  std::array<bool, 10> is_zero{};
  // Slots 0..3: diagonal, 4..9: pairs (01,02,03,12,13,23).
  const std::array<std::pair<int, int>, 10> pairs{{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (int p = 0; p < 10; ++p) {
    cplx coeff = M(pairs[p].first, pairs[p].second);
    if (p >= 4) coeff *= 2.0;
    is_zero[p] = (coeff == cplx{0.0, 0.0});
    log_abs[p] = is_zero[p] ? 0.0 : std::log(std::abs(coeff));
    arg[p] = is_zero[p] ? 0.0 : std::arg(coeff);
  }

  LogSum sum;
  std::array<int, 10> e{};
  auto emit = [&] {
    double lm = 0.0;
    double ph = 0.0;
    for (int p = 0; p < 10; ++p) {
      if (e[p] == 0) continue;
      if (is_zero[p]) return;
      lm += e[p] * log_abs[p] - log_factorial(e[p]);
      ph += e[p] * arg[p];
    }
    sum.add(lm, ph);
  };

  // Off-diagonal exponents are enumerated; diagonal ones follow from parity.
  for (e[4] = 0; e[4] <= std::min(a[0], a[1]); ++e[4]) {
    for (e[5] = 0; e[5] <= std::min(a[0] - e[4], a[2]); ++e[5]) {
      for (e[6] = 0; e[6] <= std::min(a[0] - e[4] - e[5], a[3]); ++e[6]) {
        const int r0 = a[0] - e[4] - e[5] - e[6];
        if (r0 % 2 != 0) continue;
        e[0] = r0 / 2;
        for (e[7] = 0; e[7] <= std::min(a[1] - e[4], a[2] - e[5]); ++e[7]) {
          for (e[8] = 0; e[8] <= std::min(a[1] - e[4] - e[7], a[3] - e[6]); ++e[8]) {
            const int r1 = a[1] - e[4] - e[7] - e[8];
            if (r1 % 2 != 0) continue;
            e[1] = r1 / 2;
            for (e[9] = 0; e[9] <= std::min(a[2] - e[5] - e[7], a[3] - e[6] - e[8]); ++e[9]) {
              const int r2 = a[2] - e[5] - e[7] - e[9];
              const int r3 = a[3] - e[6] - e[8] - e[9];
              if (r2 % 2 != 0 || r3 % 2 != 0) continue;
              e[2] = r2 / 2;
              e[3] = r3 / 2;
              emit();
            }
          }
        }
      }
    }
  }

  // Prefactor alpha! (-1/2)^k.
  const double log_pref = log_alpha_fact - k * std::numbers::ln2;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_pref) * sum.value();
}

HermiteTable::HermiteTable(const SymmetricComplexMatrix4& M, std::array<int, 4> extents)
    : extents_(extents) {
  for (int e : extents_)
    if (e < 1) throw Error(ErrorCode::DomainError, "HermiteTable extents must be positive");
  data_.assign(static_cast<std::size_t>(extents_[0]) * extents_[1] * extents_[2] * extents_[3], cplx{0.0, 0.0});
  data_[0] = 1.0;

  const Eigen::Matrix4cd Md = M.dense();
  const std::array<std::size_t, 4> stride{
      static_cast<std::size_t>(extents_[1]) * extents_[2] * extents_[3],
      static_cast<std::size_t>(extents_[2]) * extents_[3], static_cast<std::size_t>(extents_[3]), 1};

  std::array<int, 4> b{};
  for (std::size_t lin = 1; lin < data_.size(); ++lin) {
    // Advance the multi-index b to match `lin`.
    for (int d = 3; d >= 0; --d) {
      if (++b[d] < extents_[d]) break;
      b[d] = 0;
    }
    int i = 3;
    while (b[i] == 0) --i;
    // alpha = b - e_i; h_b = -(1/sqrt(b_i)) sum_j M_ij sqrt(alpha_j) h_{alpha - e_j}
    const std::size_t alpha_lin = lin - stride[i];
    cplx acc{0.0, 0.0};
    for (int j = 0; j < 4; ++j) {
      const int aj = b[j] - (j == i ? 1 : 0);
      if (aj == 0) continue;
      acc += Md(i, j) * std::sqrt(static_cast<double>(aj)) * data_[alpha_lin - stride[j]];
    }
    data_[lin] = -acc / std::sqrt(static_cast<double>(b[i]));
  }
}

cplx HermiteTable::value(int i0, int i1, int i2, int i3) const {
  const double lf = log_factorial(i0) + log_factorial(i1) + log_factorial(i2) + log_factorial(i3);
  return normalized(i0, i1, i2, i3) * std::exp(0.5 * lf);
}

}  // namespace entdeg::specfun
