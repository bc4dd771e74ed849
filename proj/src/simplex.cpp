#include "entdeg/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "entdeg/error.hpp"

namespace entdeg::simplex {

namespace {

using Point = std::vector<double>;

Point combine(const Point& a, double wa, const Point& b, double wb) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = wa * a[i] + wb * b[i];
  return out;
}

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

Result nelder_mead(const Objective& f, const Point& x0, const Point& step, const Options& opts) {
  const std::size_t n = x0.size();
  if (n == 0 || step.size() != n) throw Error(ErrorCode::DomainError, "simplex dimension mismatch");

  Result res;
  std::vector<Point> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  auto eval = [&](const Point& p) {
    ++res.evaluations;
    const double v = f(p);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<std::size_t> order(n + 1);
  for (;;) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[n - 1];

    double diam = 0.0;
    for (std::size_t i = 0; i <= n; ++i) diam = std::max(diam, distance(pts[i], pts[best]));
    res.diameter = diam;
    const double spread = vals[worst] - vals[best];
    if (diam < opts.x_tol && std::isfinite(vals[best]) && spread < opts.f_tol) {
      res.converged = true;
      break;
    }
    if (res.evaluations >= opts.max_evaluations) break;
    ++res.iterations;

    Point centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);

    const Point xr = combine(centroid, 2.0, pts[worst], -1.0);
    const double fr = eval(xr);
    if (fr < vals[best]) {
      const Point xe = combine(centroid, 3.0, pts[worst], -2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    // Contraction, outside if the reflection improved on the worst point.
    const bool outside = fr < vals[worst];
    const Point xc = outside ? combine(centroid, 1.5, pts[worst], -0.5) : combine(centroid, 0.5, pts[worst], 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = combine(pts[best], 0.5, pts[i], 0.5);
      vals[i] = eval(pts[i]);
    }
  }

  const auto it = std::min_element(vals.begin(), vals.end());
  res.value = *it;
  res.x = pts[static_cast<std::size_t>(it - vals.begin())];
  return res;
}

}  // namespace entdeg::simplex
