#pragma once

// Independent checks for the P modular, used by tests and the CLI verify op.
// None of this consults the level machinery.
//
// brute_force_min searches the feasible polytope directly: heights b_1 >= ...
// >= b_n > 0 with partial sums sum_{j<=k} b_j |A_j| <= W(t_k). Per-coordinate
// grids of 20 points span (0, U_i] with U_i the implied feasible cap
// min(W(t_n)/|A_i|, W(t_i)/t_i, U_{i-1}); each refinement re-grids the best
// cell plus its immediate neighbourhood (+-1.5 steps) at a 5x finer step.
// Every phi(a/b) b summand is strictly decreasing in b (phi convex through the
// origin), so minima sit where constraints bind; on top of the plain grid each
// coordinate therefore also samples its largest feasible value exactly, and
// the last coordinate takes it outright. That closes the gap a shrinking grid
// leaves along active constraint surfaces (proportional point, head cap and
// equal-heights vertices all land on sampled points).

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "orlicz_function.hpp"
#include "step_function.hpp"
#include "tolerance.hpp"
#include "weight.hpp"

namespace oll {

struct BruteForceResult {
  double value = 0.0;
  std::vector<double> argmin;  // heights on the pieces of f*
};

namespace detail {

struct GridSearch {
  const OrliczFunction& phi;
  const std::vector<double>& a;    // heights of f*
  const std::vector<double>& len;  // piece lengths
  const std::vector<double>& Wt;   // W at the breakpoints t_1..t_n
  std::vector<double> lo, hi;      // current per-coordinate window
  std::vector<double> point;
  double best = HUGE_VAL;
  std::vector<double> best_point;

  void scan(std::size_t i, double prev, double partial_mass, double partial_value,
            int npoints) {
    if (i == a.size()) {
      if (partial_value < best) {
        best = partial_value;
        best_point = point;
      }
      return;
    }
    // largest height still feasible here; monotonicity keeps the implied
    // pointwise caps satisfied once the partial-sum cap holds
    double room = (Wt[i] * (1.0 + 1e-12) + 1e-15 - partial_mass) / len[i];
    double top = std::min(prev, room);
    if (!(top > 0.0)) return;
    auto try_height = [&](double b) {
      double value = partial_value + phi(a[i] / b) * b * len[i];
      if (value >= best) return;  // the summands only grow
      point[i] = b;
      scan(i + 1, b, partial_mass + b * len[i], value, npoints);
    };
    try_height(top);
    if (i + 1 == a.size()) return;  // the last summand decreases in b: top wins
    double step = (hi[i] - lo[i]) / npoints;
    for (int k = npoints; k >= 1; --k) {
      double b = lo[i] + step * k;
      if (b >= top) continue;
      if (b <= 0.0) break;
      try_height(b);
    }
  }
};

}  // namespace detail

inline BruteForceResult brute_force_min(const OrliczFunction& phi, const Weight& w,
                                        const StepFunction& f, int depth = 6) {
  StepFunction fs = rearrange(f);
  if (fs.is_zero()) return {};
  const std::size_t n = fs.pieces();
  if (n > 6)
    throw std::invalid_argument("brute force: more than 6 pieces is unguarded");
  if (!w.positive_on(fs.support_end()))
    throw std::invalid_argument("brute force: weight must be positive on the support");

  std::vector<double> a = fs.values(), len(n), Wt(n);
  for (std::size_t i = 0; i < n; ++i) {
    len[i] = fs.length(i);
    Wt[i] = w.mass(0.0, fs.breakpoints()[i + 1]);
  }
  std::vector<double> cap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cap[i] = std::min(Wt[n - 1] / len[i], Wt[i] / fs.breakpoints()[i + 1]);
    if (i > 0) cap[i] = std::min(cap[i], cap[i - 1]);
  }

  detail::GridSearch gs{phi, a, len, Wt, cap, cap, std::vector<double>(n), HUGE_VAL, {}};
  gs.lo.assign(n, 0.0);
  gs.scan(0, HUGE_VAL, 0.0, 0.0, 20);
  if (gs.best_point.empty())
    throw SolverError("brute force: no feasible grid point");

  for (int pass = 1; pass <= depth; ++pass) {
    std::vector<double> steps(n);
    for (std::size_t i = 0; i < n; ++i)
      steps[i] = (gs.hi[i] - gs.lo[i]) / (pass == 1 ? 20.0 : 15.0);
    for (std::size_t i = 0; i < n; ++i) {
      gs.lo[i] = std::max(0.0, gs.best_point[i] - 1.5 * steps[i]);
      gs.hi[i] = std::min(cap[i], gs.best_point[i] + 1.5 * steps[i]);
    }
    gs.scan(0, HUGE_VAL, 0.0, 0.0, 15);
  }
  return {gs.best, gs.best_point};
}

// closed-form minimum for two pieces and phi(t) = t^2: heights a1 > a2 on
// lengths l1, l2 with W-values W1 = W(t_1), W2 = W(t_2). The mass constraint
// binds; either the proportional point (W2/F2) * (a1, a2) is feasible or the
// minimum sits at a vertex of the constraint segment.
struct TwoPieceResult {
  double value = 0.0;
  double b1 = 0.0, b2 = 0.0;
};

inline TwoPieceResult lagrange_two_piece(double a1, double a2, double l1, double l2,
                                         double W1, double W2) {
  if (!(a1 > a2) || !(a2 > 0.0))
    throw std::invalid_argument("two piece: heights must decrease and stay positive");
  if (!(l1 > 0.0) || !(l2 > 0.0))
    throw std::invalid_argument("two piece: lengths must be positive");
  if (!(W1 > 0.0) || !(W2 > W1))
    throw std::invalid_argument("two piece: weight masses must increase");

  auto psi = [&](double b1, double b2) {
    return a1 * a1 * l1 / b1 + a2 * a2 * l2 / b2;
  };
  TwoPieceResult out{HUGE_VAL, 0.0, 0.0};
  auto consider = [&](double b1, double b2) {
    if (!(b1 >= b2) || !(b2 > 0.0)) return;
    double v = psi(b1, b2);
    if (v < out.value) out = {v, b1, b2};
  };
  double t = W2 / (a1 * l1 + a2 * l2);
  if (t * a1 * l1 <= W1 * (1.0 + 1e-12)) consider(t * a1, t * a2);  // proportional
  consider(W1 / l1, (W2 - W1) / l2);                                // head cap binds
  consider(W2 / (l1 + l2), W2 / (l1 + l2));                         // equal heights
  return out;
}

// Jensen certificate: with lambda = (sum b_i |A_i|) / (sum a_i |A_i|), the
// proportional profile lambda*a can only lower the value, strictly so when b
// is not proportional to a.
inline bool jensen_certificate(const OrliczFunction& phi, const StepFunction& f,
                               const std::vector<double>& b) {
  StepFunction fs = rearrange(f);
  if (fs.pieces() != b.size())
    throw std::invalid_argument("jensen: need one height per piece of f*");
  double F = 0.0, G = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!(b[i] > 0.0)) throw std::invalid_argument("jensen: heights must be positive");
    F += fs.values()[i] * fs.length(i);
    G += b[i] * fs.length(i);
  }
  double lambda = G / F;
  double lhs = 0.0;
  bool proportional = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    lhs += phi(fs.values()[i] / b[i]) * b[i] * fs.length(i);
    if (std::fabs(b[i] - lambda * fs.values()[i]) > 1e-9 * b[i]) proportional = false;
  }
  double rhs = phi(1.0 / lambda) * lambda * F;
  double slack = 1e-12 * std::max(1.0, std::max(lhs, rhs));
  return proportional ? lhs >= rhs - slack : lhs > rhs - slack;
}

}  // namespace oll
