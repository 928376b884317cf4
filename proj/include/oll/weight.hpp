#pragma once

// Decreasing positive weight densities w on [0, inf) and their primitives
// W(t) = int_0^t w. Two families:
//
//   step:  a positive nonincreasing StepFunction; W is piecewise linear and
//          constant past the last breakpoint (the density vanishes there),
//   power: w(t) = c * t^(-alpha) with c > 0, 0 <= alpha < 1, so
//          W(t) = c * t^(1-alpha) / (1-alpha); always positive, W(inf) = inf.
//
// W is concave and increasing wherever the density is positive, which is what
// lets every comparison against W happen at finitely many breakpoints.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "step_function.hpp"
#include "tolerance.hpp"

namespace oll {

class Weight {
 public:
  enum class Kind { Step, Power };

  static Weight step(StepFunction density) {
    if (density.is_zero())
      throw std::invalid_argument("weight: step density must be nonzero");
    const auto& v = density.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] <= 0.0)
        throw std::invalid_argument("weight: step density must be strictly positive");
      if (i > 0 && v[i] > v[i - 1])
        throw std::invalid_argument("weight: step density must be nonincreasing");
    }
    Weight w;
    w.kind_ = Kind::Step;
    w.density_ = std::move(density);
    w.prefix_ = w.density_.cumulative();
    return w;
  }

  static Weight power_law(double c, double alpha) {
    if (!(c > 0.0) || !std::isfinite(c))
      throw std::invalid_argument("weight: power-law coefficient must be positive");
    if (!(alpha >= 0.0 && alpha < 1.0))
      throw std::invalid_argument("weight: power-law exponent must lie in [0,1)");
    Weight w;
    w.kind_ = Kind::Power;
    w.c_ = c;
    w.alpha_ = alpha;
    return w;
  }

  Kind kind() const { return kind_; }
  bool is_step() const { return kind_ == Kind::Step; }
  const StepFunction& step_density() const {
    if (!is_step()) throw std::logic_error("weight: not a step density");
    return density_;
  }
  double power_c() const { return c_; }
  double power_alpha() const { return alpha_; }

  double density(double t) const {
    if (is_step()) return density_(t);
    if (t <= 0.0) return alpha_ == 0.0 ? c_ : INFINITY;
    return c_ * std::pow(t, -alpha_);
  }

  double primitive(double t) const {  // W(t)
    if (t <= 0.0) return 0.0;
    if (is_step()) {
      const auto& br = density_.breakpoints();
      if (t >= br.back()) return prefix_.back();
      auto it = std::upper_bound(br.begin(), br.end(), t);
      std::size_t i = static_cast<std::size_t>(it - br.begin()) - 1;
      return prefix_[i] + density_.values()[i] * (t - br[i]);
    }
    return c_ * std::pow(t, 1.0 - alpha_) / (1.0 - alpha_);
  }

  double mass(double a, double b) const {  // W(b) - W(a)
    if (is_step()) return density_.integral(a, b);
    return primitive(b) - primitive(a);
  }

  // strictly positive density on all of (0, t)?
  bool positive_on(double t) const {
    return !is_step() || density_.support_end() >= t;
  }

 private:
  Kind kind_ = Kind::Power;
  StepFunction density_;         // step kind
  std::vector<double> prefix_;   // W at the density's breakpoints
  double c_ = 1.0, alpha_ = 0.0;
};

// cumulative pair (F, W) sampled at the breakpoints of f
struct Cumulatives {
  std::vector<double> t, F, W;
};

inline Cumulatives cumulatives(const StepFunction& f, const Weight& w) {
  Cumulatives c;
  c.t = f.breakpoints();
  c.F = f.cumulative();
  c.W.resize(c.t.size());
  c.W[0] = 0.0;
  for (std::size_t i = 1; i < c.t.size(); ++i)
    c.W[i] = c.W[i - 1] + w.mass(c.t[i - 1], c.t[i]);
  return c;
}

// g is submajorized by w when int_0^t g* <= W(t) for every t. The cumulative
// of g* is piecewise affine and W is concave, so checking at the breakpoints
// of g* decides the whole inequality.
inline bool submajorized(const StepFunction& g, const Weight& w, const Tol& tol = {}) {
  StepFunction gs = rearrange(g);
  auto c = cumulatives(gs, w);
  for (std::size_t i = 1; i < c.t.size(); ++i)
    if (!tol.le(c.F[i], c.W[i])) return false;
  return true;
}

// sup_t (int_0^t g*) / W(t); same breakpoint reduction as above. The value is
// <= 1 exactly when g is submajorized by w. Zero function maps to 0.
inline double marcinkiewicz_norm(const StepFunction& g, const Weight& w) {
  if (g.is_zero()) return 0.0;
  StepFunction gs = rearrange(g);
  auto c = cumulatives(gs, w);
  double best = 0.0;
  for (std::size_t i = 1; i < c.t.size(); ++i)
    best = std::max(best, c.F[i] / c.W[i]);  // W > 0 at every positive breakpoint
  return best;
}

}  // namespace oll
