#pragma once

// Nonnegative step functions with finitely many pieces on [0, inf):
//
//   f = sum_i values[i] * chi_[breaks[i], breaks[i+1]),   f == 0 past breaks.back().
//
// Canonical form maintained by the constructor: breakpoints start at 0 and
// strictly increase (zero-length pieces are dropped), adjacent pieces with
// equal values are merged, and trailing zero-valued pieces are absorbed into
// the implicit zero tail. Canonical form makes structural equality meaningful
// and guarantees that a decreasing function has strictly decreasing, strictly
// positive values.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oll {

class StepFunction {
 public:
  StepFunction() = default;  // the zero function

  StepFunction(std::vector<double> breakpoints, std::vector<double> values) {
    if (breakpoints.size() != values.size() + 1)
      throw std::invalid_argument("step function: need one more breakpoint than values");
    if (breakpoints.front() != 0.0)
      throw std::invalid_argument("step function: first breakpoint must be 0");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
      if (!(breakpoints[i + 1] >= breakpoints[i]) || !std::isfinite(breakpoints[i + 1]))
        throw std::invalid_argument("step function: breakpoints must be finite and nondecreasing");
    }
    for (double v : values) {
      if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument("step function: values must be finite and nonnegative");
    }
    breaks_.assign(1, 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (breakpoints[i + 1] == breakpoints[i]) continue;  // zero-length piece
      if (!values_.empty() && values_.back() == values[i]) {
        breaks_.back() = breakpoints[i + 1];  // merge with equal neighbour
      } else {
        values_.push_back(values[i]);
        breaks_.push_back(breakpoints[i + 1]);
      }
    }
    while (!values_.empty() && values_.back() == 0.0) {  // absorb zero tail
      values_.pop_back();
      breaks_.pop_back();
    }
  }

  static StepFunction zero() { return {}; }

  std::size_t pieces() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }
  const std::vector<double>& breakpoints() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }
  double support_end() const { return breaks_.back(); }
  double length(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }

  double operator()(double t) const {
    if (t < 0.0 || t >= breaks_.back()) return 0.0;
    // first breakpoint strictly above t, minus one, is the piece holding t
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
  }

  double integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * length(i);
    return s;
  }

  double integral(double a, double b) const {
    a = std::max(a, 0.0);
    b = std::min(b, support_end());
    if (!(a < b)) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      double lo = std::max(a, breaks_[i]);
      double hi = std::min(b, breaks_[i + 1]);
      if (lo < hi) s += values_[i] * (hi - lo);
    }
    return s;
  }

  // F(t_i) for every breakpoint t_i, F(0) = 0
  std::vector<double> cumulative() const {
    std::vector<double> F(breaks_.size(), 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i)
      F[i + 1] = F[i] + values_[i] * length(i);
    return F;
  }

  StepFunction scaled(double k) const {
    if (!(k >= 0.0) || !std::isfinite(k))
      throw std::invalid_argument("step function: scale must be finite and nonnegative");
    StepFunction out;
    if (k == 0.0 || is_zero()) return out;
    out.breaks_ = breaks_;
    out.values_ = values_;
    for (double& v : out.values_) v *= k;
    return out;
  }

  // canonical form has no equal neighbours, so decreasing means strictly
  // decreasing values (and hence strictly positive ones)
  bool is_decreasing() const {
    for (std::size_t i = 0; i + 1 < values_.size(); ++i)
      if (values_[i] <= values_[i + 1]) return false;
    return true;
  }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<double> breaks_{0.0};
  std::vector<double> values_{};
};

// Decreasing rearrangement: same distribution (value, total length) packed
// left in decreasing order. Equal values merge and zeros fall off the tail
// during canonicalization.
inline StepFunction rearrange(const StepFunction& f) {
  std::vector<std::pair<double, double>> pieces;  // (value, length)
  pieces.reserve(f.pieces());
  for (std::size_t i = 0; i < f.pieces(); ++i)
    pieces.emplace_back(f.values()[i], f.length(i));
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<double> breaks{0.0}, values;
  for (const auto& [v, len] : pieces) {
    values.push_back(v);
    breaks.push_back(breaks.back() + len);
  }
  return StepFunction(std::move(breaks), std::move(values));
}

inline double integrate(const StepFunction& f, double a, double b) {
  return f.integral(a, b);
}

// exact integral of f*g over the common refinement of both partitions
inline double integral_of_product(const StepFunction& f, const StepFunction& g) {
  double end = std::min(f.support_end(), g.support_end());
  if (f.is_zero() || g.is_zero() || end <= 0.0) return 0.0;
  std::vector<double> cuts;
  cuts.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (double t : f.breakpoints())
    if (t < end) cuts.push_back(t);
  for (double t : g.breakpoints())
    if (t < end) cuts.push_back(t);
  cuts.push_back(end);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double mid = cuts[i] + 0.5 * (cuts[i + 1] - cuts[i]);
    s += f(mid) * g(mid) * (cuts[i + 1] - cuts[i]);
  }
  return s;
}

}  // namespace oll
