#pragma once

// Level decomposition of a decreasing step function f against a weight w.
//
// Write F, W for the cumulatives of f and w at the breakpoints t_0 = 0 < t_1
// < ... < t_n of f. Starting from the cut c = 0, the next cut is the LARGEST
// index attaining
//
//   lambda = min_{i > c} (W(t_i) - W(t_c)) / (F(t_i) - F(t_c)),
//
// and the block [t_c, t_next) gets the chord slope lambda as its scale; the
// scan repeats from t_next until it reaches t_n. Equivalently, the cuts are
// the vertices of the greatest convex minorant of the points (F(t_i), W(t_i))
// taken left to right; the O(n^2) rescan below is deliberate, n stays tiny.
//
// Scaling f by lambda_j on the j-th block produces a decreasing function g
// whose cumulative G satisfies G <= W everywhere with equality at every cut
// (in particular G(t_n) = W(t_n)). Among all h submajorized by w, g minimizes
// int phi(f/h) h for EVERY convex phi simultaneously, which is why nothing
// here takes an Orlicz function. The blocks are exactly the maximal level
// intervals of f relative to w, R_j = 1/lambda_j is the height ratio of the
// j-th level, and the associated level function is R_j * w on each block.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "scalar_solve.hpp"
#include "step_function.hpp"
#include "tolerance.hpp"
#include "weight.hpp"

namespace oll {

struct LevelDecomposition {
  // cuts are indices into f.breakpoints(): 0 = cuts[0] < ... < cuts[m] = n
  std::vector<std::size_t> cuts;
  std::vector<double> cut_times;
  std::vector<double> lambda;  // chord slope per block, strictly increasing
  std::vector<double> ratio;   // R_j = 1/lambda_j, strictly decreasing
  std::vector<double> f_mass;  // F-mass of each block
  std::vector<double> w_mass;  // W-mass of each block
  // interior breakpoints where the minimizer's cumulative touches W without
  // being cuts (tolerance ties); diagnostic only, blocks are never merged
  std::vector<std::size_t> contacts;

  std::size_t blocks() const { return lambda.size(); }
};

namespace detail {

inline void require_decreasing_positive(const StepFunction& f, const Weight& w) {
  if (f.is_zero())
    throw std::invalid_argument("level: function must be nonzero");
  if (!f.is_decreasing())
    throw std::invalid_argument("level: function must be decreasing");
  if (f.values().back() <= 0.0)
    throw std::invalid_argument("level: function must be strictly positive on its support");
  if (!w.positive_on(f.support_end()))
    throw std::invalid_argument("level: weight must be positive on the support of f");
}

}  // namespace detail

inline LevelDecomposition level_decompose(const StepFunction& f, const Weight& w,
                                          const Tol& tol = {}) {
  detail::require_decreasing_positive(f, w);
  const auto cum = cumulatives(f, w);
  const std::size_t n = f.pieces();

  LevelDecomposition d;
  d.cuts.push_back(0);
  d.cut_times.push_back(0.0);

  std::size_t c = 0;
  while (c < n) {
    double lambda_min = HUGE_VAL;
    for (std::size_t i = c + 1; i <= n; ++i) {
      double r = (cum.W[i] - cum.W[c]) / (cum.F[i] - cum.F[c]);
      if (r < lambda_min) lambda_min = r;
    }
    std::size_t next = c + 1;
    for (std::size_t i = c + 1; i <= n; ++i) {
      double r = (cum.W[i] - cum.W[c]) / (cum.F[i] - cum.F[c]);
      if (tol.eq(r, lambda_min)) next = i;  // largest tolerance-equal attainer
    }
    for (std::size_t i = c + 1; i < next; ++i) {
      double r = (cum.W[i] - cum.W[c]) / (cum.F[i] - cum.F[c]);
      if (tol.eq(r, lambda_min)) d.contacts.push_back(i);
    }
    double fm = cum.F[next] - cum.F[c];
    double wm = cum.W[next] - cum.W[c];
    double lam = wm / fm;  // chord slope of the whole block
    if (!d.lambda.empty() && !(lam > d.lambda.back()))
      throw SolverError("level: block scales failed to increase; comparison tolerance too loose");
    d.cuts.push_back(next);
    d.cut_times.push_back(cum.t[next]);
    d.lambda.push_back(lam);
    d.ratio.push_back(fm / wm);
    d.f_mass.push_back(fm);
    d.w_mass.push_back(wm);
    c = next;
  }
  return d;
}

// g = lambda_j * f on the j-th block: the common minimizer described above
inline StepFunction level_minimizer(const StepFunction& f, const LevelDecomposition& d) {
  std::vector<double> values;
  values.reserve(f.pieces());
  for (std::size_t j = 0; j + 1 < d.cuts.size(); ++j)
    for (std::size_t i = d.cuts[j]; i < d.cuts[j + 1]; ++i)
      values.push_back(d.lambda[j] * f.values()[i]);
  // the exact minimizer is nonincreasing; rounding of lambda_j * a_i can break
  // that by an ulp at block joins (flat-weight singleton runs), clamp it away
  for (std::size_t i = 1; i < values.size(); ++i)
    values[i] = std::min(values[i], values[i - 1]);
  return StepFunction(f.breakpoints(), std::move(values));
}

// f^o = R_j * w on the j-th block, 0 past the support of f
struct LevelFunction {
  struct Piece {
    double lo, hi, ratio;
  };
  std::vector<Piece> pieces;  // ratios strictly decrease
  double support_end = 0.0;

  double eval(const Weight& w, double t) const {
    if (t < 0.0 || t >= support_end) return 0.0;
    for (const auto& p : pieces)
      if (t < p.hi) return p.ratio * w.density(t);
    return 0.0;
  }
};

inline LevelFunction level_function(const StepFunction& f, const Weight& w,
                                    const Tol& tol = {}) {
  LevelDecomposition d = level_decompose(f, w, tol);
  LevelFunction out;
  out.support_end = f.support_end();
  for (std::size_t j = 0; j < d.blocks(); ++j)
    out.pieces.push_back({d.cut_times[j], d.cut_times[j + 1], d.ratio[j]});
  return out;
}

// w^f = f / R_j on the j-th block and w itself past the support. On the
// support this equals the level minimizer (f / R_j = lambda_j f), and the
// total masses match: W^f(t_n) = W(t_n).
struct InverseLevelWeight {
  StepFunction on_support;
  Weight beyond;
  double support_end = 0.0;

  double eval(double t) const {
    return t < support_end ? on_support(t) : beyond.density(t);
  }

  // full step form; needs a step weight so the tail stays a step function
  StepFunction as_step() const {
    const StepFunction& tail = beyond.step_density();
    std::vector<double> breaks = on_support.breakpoints();
    std::vector<double> values = on_support.values();
    for (std::size_t i = 0; i < tail.pieces(); ++i) {
      double hi = tail.breakpoints()[i + 1];
      if (hi <= support_end) continue;
      values.push_back(tail.values()[i]);
      breaks.push_back(hi);
    }
    return StepFunction(std::move(breaks), std::move(values));
  }
};

inline InverseLevelWeight inverse_level_weight(const StepFunction& f, const Weight& w,
                                               const Tol& tol = {}) {
  LevelDecomposition d = level_decompose(f, w, tol);
  return {level_minimizer(f, d), w, f.support_end()};
}

// (a, b) is a level interval when the head ratios never beat the full one:
// R(a, t_k) <= R(a, b) for every breakpoint t_k inside, and R(a, b) > 0.
// Both endpoints must be breakpoints of f with b inside the support.
inline bool is_level_interval(const StepFunction& f, const Weight& w, double a, double b,
                              const Tol& tol = {}) {
  detail::require_decreasing_positive(f, w);
  const auto cum = cumulatives(f, w);
  auto locate = [&](double x) -> std::size_t {
    for (std::size_t i = 0; i < cum.t.size(); ++i)
      if (tol.eq(cum.t[i], x)) return i;
    throw std::invalid_argument("level interval: endpoint is not a breakpoint of f");
  };
  std::size_t ia = locate(a), ib = locate(b);
  if (ia >= ib) throw std::invalid_argument("level interval: endpoints must be ordered");
  double wm = cum.W[ib] - cum.W[ia];
  if (!(wm > 0.0))
    throw std::invalid_argument("level interval: weight carries no mass there");
  double full = (cum.F[ib] - cum.F[ia]) / wm;
  if (!(full > 0.0)) return false;
  for (std::size_t k = ia + 1; k < ib; ++k) {
    double head = (cum.F[k] - cum.F[ia]) / (cum.W[k] - cum.W[ia]);
    if (!tol.le(head, full)) return false;
  }
  return true;
}

}  // namespace oll
