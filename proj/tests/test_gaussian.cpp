#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "entdeg/channels.hpp"
#include "entdeg/error.hpp"
#include "entdeg/fock.hpp"
#include "entdeg/gaussian.hpp"

using namespace entdeg;
using namespace entdeg::gaussian;

namespace {

double g(double nu) {
  const double a = nu + 0.5, b = nu - 0.5;
  return a * std::log(a) - (b > 0 ? b * std::log(b) : 0.0);
}

Eigen::Matrix2d random_sp2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-M_PI, M_PI), sq(-1.0, 1.0);
  auto rot = [](double t) {
    Eigen::Matrix2d r;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    return r;
  };
  const double s = sq(rng);
  const Eigen::Matrix2d d = Eigen::Vector2d(std::exp(s), std::exp(-s)).asDiagonal();
  return rot(ang(rng)) * d * rot(ang(rng));
}

Eigen::Matrix4d random_sp4(std::mt19937_64& rng) {
  // product of local symplectics and passive two-mode mixers
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  Eigen::Matrix4d S = Eigen::Matrix4d::Identity();
  for (int k = 0; k < 3; ++k) {
    Eigen::Matrix4d L = Eigen::Matrix4d::Zero();
    L.topLeftCorner<2, 2>() = random_sp2(rng);
    L.bottomRightCorner<2, 2>() = random_sp2(rng);
    const double t = ang(rng);
    Eigen::Matrix4d B = Eigen::Matrix4d::Zero();
    B.topLeftCorner<2, 2>() = B.bottomRightCorner<2, 2>() = std::cos(t) * Eigen::Matrix2d::Identity();
    B.topRightCorner<2, 2>() = std::sin(t) * Eigen::Matrix2d::Identity();
    B.bottomLeftCorner<2, 2>() = -std::sin(t) * Eigen::Matrix2d::Identity();
    S = B * L * S;
  }
  return S;
}

// Random physical mixed state: S diag(nu1, nu1, nu2, nu2) S^T.
VarianceMatrix random_mixed(std::mt19937_64& rng, double nu_min = 0.5 + 1e-3) {
  std::uniform_real_distribution<double> u(nu_min, 4.0);
  const Eigen::Matrix4d S = random_sp4(rng);
  const double a = u(rng), b = u(rng);
  const Eigen::Matrix4d D = Eigen::Vector4d(a, a, b, b).asDiagonal();
  return {S * D * S.transpose()};
}

}  // namespace

TEST_CASE("symplectic form") {
  const auto O = symplectic_form();
  CHECK((O * O + Eigen::Matrix4d::Identity()).norm() == 0.0);
  CHECK(O(0, 1) == 1.0);
  CHECK(single_mode_j()(0, 1) == 1.0);
}

TEST_CASE("tmsv variance") {
  CHECK((tmsv_variance(0.0).v - 0.5 * Eigen::Matrix4d::Identity()).norm() < 1e-15);
  const auto V = tmsv_variance(0.5);
  CHECK(V.v(0, 0) == doctest::Approx(std::cosh(1.0) / 2).epsilon(1e-15));
  CHECK(V.v(0, 0) == doctest::Approx(0.7716).epsilon(1e-4));
  CHECK(V.v(1, 1) == V.v(0, 0));
  CHECK(V.v(2, 2) == V.v(0, 0));
  CHECK(V.v(0, 2) == doctest::Approx(-std::sinh(1.0) / 2).epsilon(1e-15));
  CHECK(V.v(1, 3) == doctest::Approx(std::sinh(1.0) / 2).epsilon(1e-15));
}

TEST_CASE("tmsv variance with phase matches Fock moments") {
  const cplx xi = std::polar(0.4, 1.1);
  const auto fv = channels::quadrature_variance(fock::tmsv(std::polar(std::tanh(0.4), 1.1), 40).density());
  CHECK((tmsv_variance(xi).v - fv.v).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("symplectic eigenvalue examples") {
  auto nu = symplectic_eigenvalues(VarianceMatrix{});
  CHECK(nu[0] == doctest::Approx(0.5));
  CHECK(nu[1] == doctest::Approx(0.5));
  nu = symplectic_eigenvalues(thermal_variance(1.0, 0.0));
  CHECK(nu[0] == doctest::Approx(0.5));
  CHECK(nu[1] == doctest::Approx(1.5));
  for (double xi : {0.1, 1.0, 3.0, 5.0}) {
    nu = symplectic_eigenvalues(tmsv_variance(xi));
    CHECK(std::abs(nu[0] - 0.5) < 1e-8);
    CHECK(std::abs(nu[1] - 0.5) < 1e-8);
  }
}

TEST_CASE("property: symplectic eigenvalues equal moduli of eig(i Omega V)") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 250; ++i) {
    const auto V = random_mixed(rng);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(cplx{0.0, 1.0} * symplectic_form().cast<cplx>() * V.v.cast<cplx>());
    std::vector<double> mods;
    for (int k = 0; k < 4; ++k) mods.push_back(std::abs(es.eigenvalues()(k).real()));
    std::sort(mods.begin(), mods.end());
    const auto nu = symplectic_eigenvalues(V);
    CHECK(nu[0] == doctest::Approx(mods[0]).epsilon(1e-8));
    CHECK(nu[1] == doctest::Approx(mods[3]).epsilon(1e-8));
  }
}

TEST_CASE("entropy examples") {
  CHECK(gaussian_entropy(VarianceMatrix{}) == doctest::Approx(0.0));
  CHECK(gaussian_entropy(thermal_variance(1.0, 0.0)) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  // Fock diagonal cross-check: -sum p ln p with p_n = nbar^n / (nbar + 1)^(n+1)
  const double nbar = 2.5;
  double s = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const double p = std::pow(nbar, n) / std::pow(nbar + 1, n + 1);
    if (p > 0) s -= p * std::log(p);
  }
  CHECK(gaussian_entropy(thermal_variance(nbar, 0.0)) == doctest::Approx(s).epsilon(1e-12));
  CHECK(std::abs(gaussian_entropy(tmsv_variance(1.0))) < 1e-9);
  VarianceMatrix bad;
  bad.v(0, 0) = 0.1;
  CHECK_THROWS_AS(gaussian_entropy(bad), Error);
  CHECK(mode_entropy(tmsv_variance(std::atanh(std::sqrt(0.5))).X()) == doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("property: pure TMSV has zero entropy") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> ux(0.0, 4.0), ph(-M_PI, M_PI);
  for (int i = 0; i < 250; ++i) CHECK(std::abs(gaussian_entropy(tmsv_variance(std::polar(ux(rng), ph(rng))))) < 1e-9);
}

TEST_CASE("exponential form examples") {
  const auto th = exponential_form(thermal_variance(1.0, 1.0));
  CHECK(th.theta[0] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(th.theta[1] == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  const auto two = exponential_form(thermal_variance(1.0, 2.0));
  const double expect = 2 * std::sinh(0.5 * std::log(2.0)) * 2 * std::sinh(0.5 * std::log(1.5));
  CHECK(two.norm == doctest::Approx(expect).epsilon(1e-12));

  CHECK_THROWS_AS(exponential_form(thermal_variance(1e-12, 1.0)), Error);
  CHECK_THROWS_AS(exponential_form(tmsv_variance(0.5)), Error);
}

TEST_CASE("property: exponential form round trip") {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 250; ++i) {
    const auto V = random_mixed(rng, 0.52);
    const auto E = exponential_form(V);
    const Eigen::Matrix4cd D = ladder_covariance_from_exponent(E.M);
    CHECK((D - E.D).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, E.D.cwiseAbs().maxCoeff()));
    CHECK((from_ladder_covariance(D).v - V.v).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, V.v.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("ladder covariance round trip and vacuum") {
  const Eigen::Matrix4cd D = ladder_covariance(VarianceMatrix{});
  CHECK((D - 0.5 * Eigen::Matrix4cd::Identity()).norm() < 1e-15);
  std::mt19937_64 rng(97);
  for (int i = 0; i < 20; ++i) {
    const auto V = random_mixed(rng);
    CHECK((from_ladder_covariance(ladder_covariance(V)).v - V.v).cwiseAbs().maxCoeff() < 1e-12 * V.v.norm());
  }
}

TEST_CASE("separability examples") {
  auto v = separability_criterion(VarianceMatrix{});
  CHECK(v.side == Side::Boundary);
  CHECK(std::abs(generic_margin({0.5, 0.5, 0.0, 0.0})) < 1e-15);

  v = separability_criterion(tmsv_variance(0.5));
  CHECK(v.side == Side::Inseparable);
  // generic form: LHS 1/4 vs RHS cosh(2)/2 - 1/4
  const auto gf = standard_form(tmsv_variance(0.5));
  CHECK(generic_margin(gf) == doctest::Approx(0.25 - (std::cosh(2.0) / 2 - 0.25)).epsilon(1e-12));
  CHECK(std::cosh(2.0) / 2 - 0.25 == doctest::Approx(1.631).epsilon(1e-3));

  v = separability_criterion(thermal_variance(1.0, 1.0));
  CHECK(v.side == Side::Separable);
  CHECK(generic_margin({1.5, 1.5, 0.0, 0.0}) > 0.0);
  CHECK(std::string(to_string(Side::Separable)) != to_string(Side::Inseparable));
}

TEST_CASE("separability length") {
  CHECK(separability_length(0.0, 1.0) == 0.0);
  // corrected closed form 1/2 ln(1 + (1 - e^-2)/2)
  CHECK(separability_length(1.0, 1.0) == doctest::Approx(0.5 * std::log(1 + (1 - std::exp(-2.0)) / 2)).epsilon(1e-14));
  CHECK(separability_length(1.0, 1.0) == doctest::Approx(0.179652).epsilon(1e-5));
  CHECK(separability_length(1.0, 1e12) < 1e-12);
  CHECK_THROWS_AS(separability_length(1.0, 0.0), Error);
}

TEST_CASE("criterion root agrees with the closed form") {
  for (double xi : {0.2, 0.5, 1.0})
    for (double nth : {0.5, 1.0, 2.0}) {
      auto margin = [&](double l) {
        const double t = std::exp(-l);
        return separability_margin(channels::gaussian_fiber_variance(xi, {t, t, nth, nth}));
      };
      double lo = 0.0, hi = 5.0;
      REQUIRE(margin(1e-9) < 0.0);
      REQUIRE(margin(hi) > 0.0);
      for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
        const double mid = 0.5 * (lo + hi);
        (margin(mid) < 0.0 ? lo : hi) = mid;
      }
      const double ls = separability_length(xi, nth);
      CHECK(std::abs(0.5 * (lo + hi) - ls) <= 1e-8 * ls);
    }
}

TEST_CASE("property: local symplectic invariance") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> ux(0.0, 1.5), ut(0.0, 1.0), un(0.0, 2.0);
  for (int i = 0; i < 250; ++i) {
    VarianceMatrix V;
    if (i % 2) {
      V = random_mixed(rng);
    } else {
      const double t = ut(rng);
      V = channels::gaussian_fiber_variance(ux(rng), {t, ut(rng), un(rng), un(rng)});
    }
    const auto W = apply_local(V, random_sp2(rng), random_sp2(rng));
    const auto a = symplectic_eigenvalues(V), b = symplectic_eigenvalues(W);
    CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-8));
    CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-8));
    CHECK(gaussian_entropy(V) == doctest::Approx(gaussian_entropy(W)).epsilon(1e-8).scale(1.0));
    const auto sv = separability_criterion(V, 1e-9), sw = separability_criterion(W, 1e-9);
    CHECK(sv.side == sw.side);
    CHECK(sv.margin == doctest::Approx(sw.margin).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("property: standard form preserves invariants and has the generic pattern") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 250; ++i) {
    const auto V = random_mixed(rng);
    const auto gf = standard_form(V);
    const auto W = gf.matrix();
    CHECK(W.X().determinant() == doctest::Approx(V.X().determinant()).epsilon(1e-8));
    CHECK(W.Y().determinant() == doctest::Approx(V.Y().determinant()).epsilon(1e-8));
    CHECK(W.Z().determinant() == doctest::Approx(V.Z().determinant()).epsilon(1e-7).scale(1.0));
    CHECK(generic_margin(gf) == doctest::Approx(4.0 * separability_margin(V)).epsilon(1e-7).scale(1.0));
    CHECK(gf.x >= 0.5 - 1e-9);
    CHECK(gf.y >= 0.5 - 1e-9);
    if (gf.z1 * gf.z2 < 0) CHECK(gf.z1 <= 0.0);
  }
}

TEST_CASE("is_physical") {
  CHECK(is_physical(VarianceMatrix{}));
  CHECK(is_physical(tmsv_variance(2.0)));
  VarianceMatrix bad;
  bad.v(0, 0) = bad.v(1, 1) = 0.3;
  CHECK_FALSE(is_physical(bad));
}
