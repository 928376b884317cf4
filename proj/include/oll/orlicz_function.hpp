#pragma once

// Orlicz functions: convex, strictly increasing on (0, inf), phi(0) = 0, with
// phi(t)/t -> 0 at 0 and -> inf at infinity. Built-in families:
//
//   power: phi(t) = c * t^p          (p > 1, c > 0)
//   expm:  phi(t) = exp(t) - t - 1
//
// plus opaque custom evaluators. The conjugate phi*(s) = sup_t (s t - phi(t))
// is returned in closed form for the power family and as a numeric supremum
// otherwise (golden section over a doubled bracket; the objective is concave
// in t, so the bracket is valid as soon as the right endpoint has stopped
// improving).

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "scalar_solve.hpp"

namespace oll {

class OrliczFunction {
 public:
  enum class Family { Power, ExpM, Custom };

  static OrliczFunction power(double p, double c = 1.0) {
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("orlicz: power exponent must exceed 1");
    if (!(c > 0.0) || !std::isfinite(c))
      throw std::invalid_argument("orlicz: power coefficient must be positive");
    OrliczFunction f;
    f.family_ = Family::Power;
    f.p_ = p;
    f.c_ = c;
    return f;
  }

  static OrliczFunction expm() {
    OrliczFunction f;
    f.family_ = Family::ExpM;
    return f;
  }

  static OrliczFunction custom(std::function<double(double)> eval,
                               std::string label = "custom") {
    if (!eval) throw std::invalid_argument("orlicz: custom evaluator must be callable");
    OrliczFunction f;
    f.family_ = Family::Custom;
    f.eval_ = std::move(eval);
    f.label_ = std::move(label);
    return f;
  }

  Family family() const { return family_; }
  double power_p() const { return p_; }
  double power_c() const { return c_; }
  const std::string& label() const { return label_; }

  double operator()(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("orlicz: argument must be nonnegative");
    switch (family_) {
      case Family::Power:
        return c_ * std::pow(t, p_);
      case Family::ExpM:
        return std::exp(t) - t - 1.0;  // overflows to +inf gracefully
      case Family::Custom:
        return eval_(t);
    }
    return 0.0;
  }

  // smallest t with phi(t) = y; bisection against a doubled bracket outside
  // the power family
  double inverse(double y) const {
    if (!(y >= 0.0)) throw std::invalid_argument("orlicz: inverse needs a nonnegative value");
    if (y == 0.0) return 0.0;
    if (family_ == Family::Power) return std::pow(y / c_, 1.0 / p_);
    double hi = 1.0;
    int guard = 0;
    while ((*this)(hi) < y) {
      hi *= 2.0;
      if (++guard > 400) throw SolverError("orlicz inverse: bracket expansion failed");
    }
    double lo = 0.0;
    while (hi - lo > 1e-14 * std::max(1.0, hi)) {
      double mid = 0.5 * (lo + hi);
      ((*this)(mid) < y ? lo : hi) = mid;
    }
    return hi;
  }

  OrliczFunction conjugate() const {
    if (family_ == Family::Power) {
      // c t^p = (cp) * t^p/p and (a psi)*(s) = a psi*(s/a) give
      // (c t^p)* = s^q / (q (cp)^(q-1)) with 1/p + 1/q = 1
      double q = p_ / (p_ - 1.0);
      double cq = 1.0 / (q * std::pow(c_ * p_, q - 1.0));
      return power(q, cq);
    }
    OrliczFunction base = *this;
    std::string label = (family_ == Family::ExpM ? "expm" : label_) + "*";
    return custom([base](double s) { return conjugate_value(base, s); }, std::move(label));
  }

  // sup_t (s t - phi(t)), evaluated numerically
  static double conjugate_value(const OrliczFunction& phi, double s) {
    if (!(s >= 0.0)) throw std::invalid_argument("orlicz: conjugate needs a nonnegative argument");
    if (s == 0.0) return 0.0;
    auto neg = [&](double t) { return phi(t) - s * t; };
    double hi = 1.0;
    int guard = 0;
    while (neg(hi) < neg(hi * 0.5)) {  // still descending at the right end
      hi *= 2.0;
      if (++guard > 400) throw SolverError("orlicz conjugate: bracket expansion failed");
    }
    ScalarMin m = golden_min(neg, 0.0, hi, 1e-10);
    return std::max(0.0, -m.value);  // t = 0 always yields 0
  }

 private:
  Family family_ = Family::Power;
  double p_ = 2.0, c_ = 1.0;
  std::function<double(double)> eval_;
  std::string label_;
};

}  // namespace oll
