#pragma once

// One-dimensional solvers shared by the conjugate transform and the norm
// solvers: golden-section minimization on a bracket, plus bracket expansion
// for unimodal objectives. Objectives may return +inf (overflow regions);
// comparisons still order correctly.

#include <cmath>
#include <stdexcept>

namespace oll {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScalarMin {
  double x = 0.0;
  double value = 0.0;
  long iterations = 0;
};

// minimize unimodal h on [a, b]; stops when the bracket width drops below
// rel_tol * max(1, |x|)
template <class F>
ScalarMin golden_min(F&& h, double a, double b, double rel_tol, long max_iter = 500) {
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = h(x1), f2 = h(x2);
  long n = 2;
  while ((b - a) > rel_tol * std::max(1.0, std::fabs(a) + std::fabs(b)) && n < max_iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = h(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = h(x2);
    }
    ++n;
  }
  double x = f1 <= f2 ? x1 : x2;
  return {x, std::min(f1, f2), n};
}

}  // namespace oll
