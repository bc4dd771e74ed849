#pragma once

// Nelder-Mead simplex search for small unconstrained problems. Infeasible
// points are expected to return +inf.

#include <functional>
#include <vector>

namespace entdeg::simplex {

struct Options {
  double x_tol = 1e-8;  // simplex diameter
  double f_tol = 1e-10; // spread of objective values
  int max_evaluations = 20000;
};

struct Result {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  double diameter = 0.0;
  bool converged = false;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Starts from x0 with the initial simplex x0 + step_i e_i.
Result nelder_mead(const Objective& f, const std::vector<double>& x0, const std::vector<double>& step,
                   const Options& opts = {});

}  // namespace entdeg::simplex
