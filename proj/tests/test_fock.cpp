#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/QR>

#include "entdeg/error.hpp"
#include "entdeg/fock.hpp"

using namespace entdeg;
using namespace entdeg::fock;

namespace {

Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ();
}

Eigen::MatrixXcd random_density(std::mt19937_64& rng, int n, int rank) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) a(i, j) = {g(rng), g(rng)};
  Eigen::MatrixXcd rho = a * a.adjoint();
  return rho / rho.trace();
}

PureState2 random_pure(std::mt19937_64& rng, int cutoff) {
  std::normal_distribution<double> g;
  PureState2 psi{cutoff, Eigen::MatrixXcd(cutoff + 1, cutoff + 1), 0.0};
  for (int i = 0; i <= cutoff; ++i)
    for (int j = 0; j <= cutoff; ++j) psi.amp(i, j) = {g(rng), g(rng)};
  psi.amp /= std::sqrt(psi.norm_squared());
  return psi;
}

double shannon(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (double v : p)
    if (v > 0) s -= v * std::log(v);
  return s;
}

}  // namespace

TEST_CASE("tmsv amplitudes") {
  const auto vac = tmsv(0.0, 3);
  CHECK(vac.amp(0, 0) == cplx{1.0, 0.0});
  CHECK(vac.norm_squared() == doctest::Approx(1.0));

  const auto s = tmsv(0.5, 2);
  const double c0 = std::sqrt(0.75);
  CHECK(std::abs(s.amp(0, 0) - c0) < 1e-15);
  CHECK(std::abs(s.amp(1, 1) + 0.5 * c0) < 1e-15);
  CHECK(std::abs(s.amp(2, 2) - 0.25 * c0) < 1e-15);
  CHECK(std::abs(s.amp(1, 0)) == 0.0);

  const auto big = tmsv(0.5, 30);
  CHECK(big.truncation_deficit == doctest::Approx(std::pow(0.5, 62)).epsilon(1e-6));
  CHECK_THROWS_AS(tmsv(1.0, 3), Error);
}

TEST_CASE("tmsv series oracle: exp(-q a1^+ a2^+) on vacuum") {
  // coefficient of |n,n> in exp(-q a1^+ a2^+)|0,0> is (-q)^n (n!)^2 / n! / n! = (-q)^n
  const cplx q = std::polar(0.6, 0.7);
  const auto s = tmsv(q, 15);
  for (int n = 0; n <= 15; ++n) CHECK(std::abs(s.amp(n, n) - std::sqrt(1.0 - std::norm(q)) * std::pow(-q, n)) < 1e-14);
}

TEST_CASE("partial trace examples") {
  FockState2 prod = zero_state(2);
  prod.rho(prod.index(1, 0), prod.index(1, 0)) = 1.0;
  const auto r1 = partial_trace(prod, 1);
  CHECK(std::abs(r1(1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(r1.sum() - 1.0) < 1e-15);

  const auto s = tmsv(0.5, 20).density();
  const auto red = partial_trace(s, 1);
  for (int n = 0; n <= 20; ++n) CHECK(std::abs(red(n, n) - 0.75 * std::pow(0.25, n)) < 1e-14);
  CHECK(std::abs(red(0, 1)) < 1e-15);

  PureState2 bell{1, Eigen::MatrixXcd::Zero(2, 2), 0.0};
  bell.amp(0, 1) = bell.amp(1, 0) = 1.0 / std::sqrt(2.0);
  const auto r2 = partial_trace(bell.density(), 2);
  CHECK((r2 - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);
  CHECK_THROWS_AS(partial_trace(prod, 3), Error);
}

TEST_CASE("entropy examples") {
  Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2);
  p0(0, 0) = 1.0;
  CHECK(von_neumann_entropy(p0) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(0.5 * Eigen::MatrixXcd::Identity(2, 2)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  // |q|^2 = 1/2: thermal diagonal p_n = 2^-(n+1)
  const int N = 80;
  const auto s = tmsv(std::sqrt(0.5), N).density();
  Eigen::VectorXd p(N + 1);
  for (int n = 0; n <= N; ++n) p(n) = std::pow(0.5, n + 1);
  CHECK(von_neumann_entropy(partial_trace(s, 1)) == doctest::Approx(shannon(p)).epsilon(1e-12));
  CHECK(von_neumann_entropy(partial_trace(s, 1)) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  bad(1, 1) = -0.1;
  CHECK_THROWS_AS(von_neumann_entropy(bad), Error);
}

TEST_CASE("pure_entanglement examples") {
  CHECK(pure_entanglement(tmsv(0.0, 4)) == doctest::Approx(0.0));
  CHECK(pure_entanglement(tmsv(std::sqrt(0.5), 80)) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  PureState2 bell{1, Eigen::MatrixXcd::Zero(2, 2), 0.0};
  bell.amp(0, 1) = bell.amp(1, 0) = 1.0 / std::sqrt(2.0);
  CHECK(pure_entanglement(bell) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("schmidt_form_entanglement examples") {
  const cplx q = 0.6;
  CHECK(schmidt_form_entanglement(tmsv(q, 60).density()) ==
        doctest::Approx(pure_entanglement(tmsv(q, 60))).epsilon(1e-12));

  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(3, 3);
  diag.diagonal() << 0.5, 0.3, 0.2;
  CHECK(std::abs(schmidt_form_entanglement(diag)) < 1e-14);

  Eigen::MatrixXcd c(2, 2);
  c << 0.6, 0.3, 0.3, 0.4;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(c.real());
  const double expect = -0.6 * std::log(0.6) - 0.4 * std::log(0.4) - shannon(es.eigenvalues());
  CHECK(schmidt_form_entanglement(c) == doctest::Approx(expect).epsilon(1e-13));

  FockState2 mixed = zero_state(2);
  mixed.rho(mixed.index(0, 0), mixed.index(0, 0)) = 0.5;
  mixed.rho(mixed.index(1, 0), mixed.index(1, 0)) = 0.5;
  CHECK_THROWS_AS(schmidt_form_entanglement(mixed), Error);
}

TEST_CASE("block_decompose examples") {
  const auto t04 = tmsv(0.4, 10).density();
  auto d = block_decompose(t04);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].offset == 0);
  CHECK(d.blocks[0].weight == doctest::Approx(t04.trace()).epsilon(1e-14));

  d = block_decompose(zero_state(3));
  CHECK(d.blocks.empty());
  FockState2 vac = zero_state(3);
  vac.rho(0, 0) = 1.0;
  d = block_decompose(vac);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].weight == 1.0);

  PureState2 bell{1, Eigen::MatrixXcd::Zero(2, 2), 0.0};
  bell.amp(0, 0) = bell.amp(1, 0) = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(block_decompose(bell.density()), Error);
}

TEST_CASE("property: Schmidt symmetry of reduced entropies") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 250; ++i) {
    const auto psi = random_pure(rng, 1 + static_cast<int>(rng() % 5));
    const auto rho = psi.density();
    CHECK(std::abs(von_neumann_entropy(partial_trace(rho, 1)) - von_neumann_entropy(partial_trace(rho, 2))) < 1e-10);
  }
}

TEST_CASE("property: decompose then reassemble is the identity") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 250; ++i) {
    const int cutoff = 1 + static_cast<int>(rng() % 5);
    SchmidtBlockDecomposition src{cutoff, {}};
    double total = 0.0;
    for (int off = -cutoff; off <= cutoff; ++off) {
      if (u(rng) < 0.4) continue;
      const int size = cutoff + 1 - std::abs(off);
      const double w = u(rng);
      src.blocks.push_back({off, w, random_density(rng, size, 1 + static_cast<int>(rng() % size))});
      total += w;
    }
    if (src.blocks.empty()) continue;
    for (auto& b : src.blocks) b.weight /= total;
    const auto state = src.reassemble();
    const auto back = block_decompose(state).reassemble();
    CHECK((back.rho - state.rho).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(state.trace() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("property: entropy is unitarily invariant") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 250; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto rho = random_density(rng, n, 1 + static_cast<int>(rng() % n));
    const auto U = random_unitary(rng, n);
    const Eigen::MatrixXcd rot = U * rho * U.adjoint();
    CHECK(std::abs(von_neumann_entropy(rho) - von_neumann_entropy(rot)) < 1e-10);
  }
}

TEST_CASE("property: Schmidt-form entanglement of pure ladder states equals reduced entropy") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  for (int i = 0; i < 250; ++i) {
    const int cutoff = 1 + static_cast<int>(rng() % 6);
    const int off = static_cast<int>(rng() % (2 * cutoff + 1)) - cutoff;
    PureState2 psi{cutoff, Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1), 0.0};
    for (int k = 0; k <= cutoff - std::abs(off); ++k) {
      const auto [a, b] = ladder_member(off, k);
      psi.amp(a, b) = {g(rng), g(rng)};
    }
    psi.amp /= std::sqrt(psi.norm_squared());
    CHECK(std::abs(schmidt_form_entanglement(psi.density()) - pure_entanglement(psi)) < 1e-10);
  }
}
