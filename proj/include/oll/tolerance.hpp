#pragma once

#include <algorithm>
#include <cmath>

namespace oll {

// Comparison policy used wherever an algorithm branches on equality of
// computed quantities (ratio ties, constraint boundaries, route checks).
// Relative with an absolute floor; both knobs are overridable per call site
// and from the CLI.
struct Tol {
  double rel = 1e-12;
  double abs = 1e-15;

  double slack(double a, double b) const {
    return std::max(abs, rel * std::max(std::fabs(a), std::fabs(b)));
  }
  bool eq(double a, double b) const { return std::fabs(a - b) <= slack(a, b); }
  bool le(double a, double b) const { return a <= b + slack(a, b); }
  bool lt(double a, double b) const { return a < b - slack(a, b); }
};

}  // namespace oll
