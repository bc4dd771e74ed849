#include "entdeg/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "entdeg/channels.hpp"
#include "entdeg/error.hpp"
#include "entdeg/simplex.hpp"

namespace entdeg::entanglement {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// -w ln w / (1 - w), continuous at w = 1.
double xlogx_ratio(double w) {
  const double eps = 1.0 - w;
  if (std::abs(eps) < 1e-6) return 1.0 - eps / 2.0 - eps * eps / 6.0;
  if (w <= 0.0) return 0.0;
  return -w * std::log(w) / eps;
}

}  // namespace

double tmsv_entanglement(cplx q) {
  const double x = std::norm(q);
  if (x >= 1.0) throw Error(ErrorCode::DomainError, "tmsv_entanglement requires |q| < 1");
  if (x == 0.0) return 0.0;
  return -std::log1p(-x) + xlogx_ratio(x);
}

double tmsv_mean_photons(cplx q) {
  const double x = std::norm(q);
  if (x >= 1.0) throw Error(ErrorCode::DomainError, "mean photon number requires |q| < 1");
  return x / (1.0 - x);
}

double q_from_mean_photons(double nbar) {
  if (nbar < 0.0) throw Error(ErrorCode::DomainError, "mean photon number must be >= 0");
  return std::sqrt(nbar / (nbar + 1.0));
}

double extraction_estimate(cplx q, cplx T1, cplx T2) {
  const double q2 = std::norm(q);
  if (q2 >= 1.0) throw Error(ErrorCode::DomainError, "extraction_estimate requires |q| < 1");
  if (std::abs(T1) > 1.0 || std::abs(T2) > 1.0) throw Error(ErrorCode::DomainError, "|T_i| must be <= 1");
  if (q2 == 0.0) return 0.0;
  const double t1 = std::norm(T1);
  const double t2 = std::norm(T2);
  const double x = q2 * (1.0 - t1) * (1.0 - t2);
  const double y = q2 * t1 * t2;
  const double w = y / ((1.0 - x) * (1.0 - x));
  if (w == 0.0) return 0.0;
  const double e_pure = -std::log1p(-w) + xlogx_ratio(w);
  const double weight = (1.0 - q2) / ((1.0 - x) * (1.0 - w));
  return weight * e_pure;
}

fock::PureState2 extracted_state(cplx q, cplx T1, cplx T2, int cutoff) {
  const double q2 = std::norm(q);
  if (q2 >= 1.0) throw Error(ErrorCode::DomainError, "extracted_state requires |q| < 1");
  const double t1 = std::norm(T1);
  const double t2 = std::norm(T2);
  fock::PureState2 psi{cutoff, Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1), 0.0};
  const double k000 = channels::fiber_k(0, 0, 0, q2, t1, t2);
  const cplx step = -q * T1 * T2;
  cplx phase{1.0, 0.0};
  for (int n = 0; n <= cutoff; ++n) {
    psi.amp(n, n) = std::sqrt((1.0 - q2) / k000) * channels::fiber_k(0, 0, n, q2, t1, t2) * phase;
    phase *= step;
  }
  return psi;
}

ConvexityBound convexity_bound_detailed(const fock::FockState2& state, double weight_tail) {
  ConvexityBound out;
  try {
    fock::SchmidtBlockDecomposition dec = fock::block_decompose(state);
    std::sort(dec.blocks.begin(), dec.blocks.end(),
              [](const fock::SchmidtBlock& a, const fock::SchmidtBlock& b) { return a.weight > b.weight; });
    const double total = dec.total_weight();
    out.route = BoundRoute::LadderBlocks;
    for (const auto& block : dec.blocks) {
      if (out.weight_used > total - weight_tail) break;
      if (block.weight <= 0.0) continue;
      out.value += block.weight * fock::schmidt_form_entanglement(block.coeffs);
      out.weight_used += block.weight;
      ++out.terms;
    }
    return out;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StructureViolation) throw;
  }

  // Pure components from the spectral decomposition.
  out.route = BoundRoute::Spectral;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (state.rho + state.rho.adjoint()));
  const Eigen::VectorXd& ev = es.eigenvalues();
  const int d = state.modes_dim();
  for (int i = static_cast<int>(ev.size()) - 1; i >= 0; --i) {
    if (ev(i) <= fock::kEigenvalueFloor) break;
    fock::PureState2 psi{state.cutoff, Eigen::MatrixXcd(d, d), 0.0};
    const Eigen::VectorXcd v = es.eigenvectors().col(i);
    for (int n1 = 0; n1 < d; ++n1)
      for (int n2 = 0; n2 < d; ++n2) psi.amp(n1, n2) = v(n1 * d + n2);
    out.value += ev(i) * fock::pure_entanglement(psi);
    out.weight_used += ev(i);
    ++out.terms;
  }
  return out;
}

double convexity_bound(const fock::FockState2& state) { return convexity_bound_detailed(state).value; }

std::vector<BoundarySeparableParams> boundary_candidates(double x, double y, double z1) {
  if (x < 0.5 || y < 0.5) throw Error(ErrorCode::NoRealRoot, "boundary states need x, y >= 1/2");
  const double P = x * y - z1 * z1;
  if (P <= 0.0) throw Error(ErrorCode::NoRealRoot, "x y - z1^2 must be positive");
  // 4P u^2 + 2|z1| u - c0 = 0 for u = |z2|.
  const double c0 = 4.0 * P * x * y - x * x - y * y + 0.25;
  if (c0 < 0.0) throw Error(ErrorCode::NoRealRoot, "no z2 puts (x, y, z1) on the boundary");
  const double a = std::abs(z1);
  // Rationalized root, stable when 4 P c0 << z1^2.
  const double denom = a + std::sqrt(a * a + 4.0 * P * c0);
  const double u = denom > 0.0 ? c0 / denom : 0.0;
  if (z1 == 0.0) {
    if (u == 0.0) return {{x, y, 0.0, 0.0}};
    return {{x, y, 0.0, u}, {x, y, 0.0, -u}};
  }
  return {{x, y, z1, z1 > 0.0 ? -u : u}};
}

BoundarySeparableParams boundary_embed(double x, double y, double z1) { return boundary_candidates(x, y, z1).front(); }

double gaussian_relative_entropy(const gaussian::VarianceMatrix& rho, const gaussian::VarianceMatrix& sigma) {
  const double s_rho = gaussian::gaussian_entropy(rho);
  const gaussian::ExponentialForm f = gaussian::exponential_form(sigma);
  const Eigen::Matrix4cd D = gaussian::ladder_covariance(rho);
  const double cross = 0.5 * (f.M * D).trace().real();
  return -s_rho - std::log(f.norm) + cross;
}

DistanceResult distance_to_separable_gaussians(const gaussian::VarianceMatrix& rho, const MinimizerOptions& opts) {
  if (!gaussian::is_physical(rho)) throw Error(ErrorCode::NotPhysical, "rho is not a physical variance matrix");
  DistanceResult result;
  const gaussian::SeparabilityVerdict verdict = gaussian::separability_criterion(rho);
  if (verdict.side != gaussian::Side::Inseparable) {
    const gaussian::GenericForm g = gaussian::standard_form(rho);
    result.argmin = {g.x, g.y, g.z1, g.z2};
    result.diag.short_circuit = true;
    return result;
  }

  const gaussian::GenericForm g = gaussian::standard_form(rho);
  const gaussian::VarianceMatrix target = g.matrix();

  auto objective_at = [&](double x, double y, double z1, BoundarySeparableParams* arg) {
    std::vector<BoundarySeparableParams> cands;
    try {
      cands = boundary_candidates(x, y, z1);
    } catch (const Error&) {
      return kInf;
    }
    double best = kInf;
    for (const auto& c : cands) {
      const gaussian::VarianceMatrix sigma = c.form().matrix();
      if (!gaussian::is_physical(sigma, 0.0)) continue;
      double v = kInf;
      try {
        v = gaussian_relative_entropy(target, sigma);
      } catch (const Error&) {
        continue;
      }
      if (v < best) {
        best = v;
        if (arg) *arg = c;
      }
    }
    return best;
  };
  const simplex::Objective f = [&](const std::vector<double>& p) { return objective_at(p[0], p[1], p[2], nullptr); };

  // Pull a point into the feasible region by shrinking z1 and lifting x, y
  // off the pure edge.
  auto project = [&](std::vector<double> p) {
    p[0] = std::max(p[0], 0.5 + 1e-3);
    p[1] = std::max(p[1], 0.5 + 1e-3);
    const double z1 = p[2];
    for (int k = 0; k <= 40; ++k) {
      p[2] = z1 * (1.0 - k / 40.0);
      if (std::isfinite(f(p))) return p;
    }
    p[0] += 0.1;
    p[1] += 0.1;
    return p;
  };

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-opts.perturbation, opts.perturbation);
  simplex::Options so;
  so.x_tol = opts.x_tol;
  so.f_tol = opts.f_tol;
  so.max_evaluations = opts.max_evaluations;

  result.value = kInf;
  simplex::Result best_run;
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> p{g.x, g.y, g.z1};
    if (r > 0)
      for (double& c : p) c *= 1.0 + jitter(rng);
    p = project(p);
    std::vector<double> step(3);
    for (int i = 0; i < 3; ++i) step[i] = 0.1 * std::max(std::abs(p[i]), 0.1);
    // The z1 step points toward the feasible interior.
    step[2] = p[2] <= 0.0 ? step[2] : -step[2];
    const simplex::Result run = simplex::nelder_mead(f, p, step, so);
    ++result.diag.restarts_used;
    result.diag.iterations += run.iterations;
    result.diag.evaluations += run.evaluations;
    if (run.converged) ++result.diag.restarts_converged;
    if (run.value < result.value) {
      result.value = run.value;
      best_run = run;
    }
  }

  if (!std::isfinite(result.value))
    throw Error(ErrorCode::MinimizerFailure, "no feasible boundary state found");
  objective_at(best_run.x[0], best_run.x[1], best_run.x[2], &result.argmin);
  result.diag.simplex_size = best_run.diameter;
  result.diag.converged = result.diag.restarts_converged > 0;
  if (!result.diag.converged && opts.strict)
    throw Error(ErrorCode::MinimizerFailure,
                "no restart converged; best value " + std::to_string(result.value));
  return result;
}

EntanglementReport fiber_report(double q, double T, const FiberComparison& cfg) {
  EntanglementReport rep;
  const channels::FiberChannelSpec chan{T, T};
  if (T == 1.0) rep.e_exact_pure = tmsv_entanglement(q);
  if (cfg.with_estimate) rep.e_estimate = extraction_estimate(q, T, T);
  if (cfg.with_bound) {
    const fock::FockState2 out = channels::fiber_output(q, chan, cfg.cutoff);
    rep.truncation_deficit = out.truncation_deficit;
    rep.e_bound = convexity_bound(out);
  }
  const gaussian::VarianceMatrix V = channels::gaussian_fiber_variance(std::atanh(q), chan);
  rep.separable = gaussian::separability_criterion(V);
  if (cfg.with_distance) {
    rep.distance = distance_to_separable_gaussians(V, cfg.minimizer);
    rep.e_distance = rep.distance->value;
  }
  return rep;
}

}  // namespace entdeg::entanglement
