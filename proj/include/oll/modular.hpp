#pragma once

// Modulars and norms. Two modulars share one ray representation:
//
//   I(f) = int phi(f*) w           heights a*_i   against the piece W-masses
//   P(f) = inf { int phi(f*/|g|)|g| : g submajorized by w }
//        = sum_j phi(R_j) * (block W-mass)   via the level decomposition
//
// Scaling f leaves the level cuts alone (chord slopes scale linearly), so
// rho(k f) = sum phi(k r_j) m_j for fixed heights r and masses m in both
// cases. The Luxemburg norm inf{eps : rho(f/eps) <= 1} is solved by bisection
// on that ray, the Amemiya norm inf_k (1 + rho(k f))/k by golden section in
// log k; (1 + rho(k))/k is the slope from (0,-1) to a convex curve through
// the origin, hence unimodal.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "level.hpp"
#include "orlicz_function.hpp"
#include "scalar_solve.hpp"
#include "step_function.hpp"
#include "tolerance.hpp"
#include "weight.hpp"

namespace oll {

enum class ModularKind { I, P };
enum class NormKind { Luxemburg, Amemiya };

struct NormReport {
  double value = 0.0;
  std::optional<double> scale;               // Luxemburg eps / Amemiya k
  std::optional<LevelDecomposition> levels;  // present when the P-route ran
  std::optional<StepFunction> minimizer;     // g attaining the P infimum for f*
  long iterations = 0;
};

inline double modular_i(const OrliczFunction& phi, const Weight& w, const StepFunction& f) {
  StepFunction fs = rearrange(f);
  double s = 0.0;
  for (std::size_t i = 0; i < fs.pieces(); ++i)
    s += phi(fs.values()[i]) * w.mass(fs.breakpoints()[i], fs.breakpoints()[i + 1]);
  return s;
}

// P evaluated twice: through the pointwise definition at the minimizer and
// through the level formula. The two must agree to within the comparison
// tolerance; a mismatch means the decomposition went wrong.
inline NormReport modular_p(const OrliczFunction& phi, const Weight& w, const StepFunction& f,
                            const Tol& tol = {}) {
  StepFunction fs = rearrange(f);
  if (fs.is_zero()) return {};
  LevelDecomposition d = level_decompose(fs, w, tol);
  StepFunction g = level_minimizer(fs, d);

  double pointwise = 0.0;
  for (std::size_t i = 0; i < fs.pieces(); ++i) {
    double gi = g(0.5 * (fs.breakpoints()[i] + fs.breakpoints()[i + 1]));
    pointwise += phi(fs.values()[i] / gi) * gi * fs.length(i);
  }
  double via_levels = 0.0;
  for (std::size_t j = 0; j < d.blocks(); ++j)
    via_levels += phi(d.ratio[j]) * d.w_mass[j];
  if (!tol.eq(pointwise, via_levels))
    throw SolverError("modular: level-formula and pointwise routes disagree");

  NormReport r;
  r.value = pointwise;
  r.levels = std::move(d);
  r.minimizer = std::move(g);
  return r;
}

// fixed heights/masses view of k -> rho(k f) along the ray through f*
struct RayModular {
  std::vector<double> r, m;
  const OrliczFunction* phi = nullptr;

  double operator()(double k) const {
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += (*phi)(k * r[j]) * m[j];
    return s;
  }
  bool trivial() const { return r.empty(); }
};

namespace detail {

inline RayModular make_ray(ModularKind kind, const OrliczFunction& phi, const Weight& w,
                           const StepFunction& fs, NormReport& report, const Tol& tol) {
  RayModular ray;
  ray.phi = &phi;
  if (fs.is_zero()) return ray;
  if (kind == ModularKind::I) {
    for (std::size_t i = 0; i < fs.pieces(); ++i) {
      double mass = w.mass(fs.breakpoints()[i], fs.breakpoints()[i + 1]);
      if (mass > 0.0) {
        ray.r.push_back(fs.values()[i]);
        ray.m.push_back(mass);
      }
    }
  } else {
    LevelDecomposition d = level_decompose(fs, w, tol);
    ray.r = d.ratio;
    ray.m = d.w_mass;
    report.minimizer = level_minimizer(fs, d);
    report.levels = std::move(d);
  }
  return ray;
}

}  // namespace detail

inline NormReport luxemburg_norm(ModularKind kind, const OrliczFunction& phi, const Weight& w,
                                 const StepFunction& f, const Tol& tol = {}) {
  NormReport report;
  StepFunction fs = rearrange(f);
  RayModular rho = detail::make_ray(kind, phi, w, fs, report, tol);
  if (rho.trivial()) return report;

  // seed at the L1(w) scale, then bracket rho(f/eps) around 1
  double eps0 = 0.0;
  for (std::size_t j = 0; j < rho.r.size(); ++j) eps0 += rho.r[j] * rho.m[j];
  long iter = 0;
  auto at = [&](double eps) {
    ++iter;
    return rho(1.0 / eps);
  };
  double hi = eps0;
  int guard = 0;
  while (at(hi) > 1.0) {
    hi *= 2.0;
    if (++guard > 300) throw SolverError("luxemburg: upper bracket expansion failed");
  }
  double lo = hi * 0.5;
  while (at(lo) <= 1.0) {
    hi = lo;
    lo *= 0.5;
    if (++guard > 2000) throw SolverError("luxemburg: lower bracket expansion failed");
  }
  while (hi - lo > 1e-12 * hi) {
    double mid = 0.5 * (lo + hi);
    (at(mid) <= 1.0 ? hi : lo) = mid;
  }
  report.value = hi;  // the returned scale satisfies rho(f/eps) <= 1
  report.scale = hi;
  report.iterations = iter;
  return report;
}

inline NormReport amemiya_norm(ModularKind kind, const OrliczFunction& phi, const Weight& w,
                               const StepFunction& f, const Tol& tol = {}) {
  NormReport report;
  StepFunction fs = rearrange(f);
  RayModular rho = detail::make_ray(kind, phi, w, fs, report, tol);
  if (rho.trivial()) return report;

  double scale0 = 0.0;
  for (std::size_t j = 0; j < rho.r.size(); ++j) scale0 += rho.r[j] * rho.m[j];
  long iter = 0;
  auto objective = [&](double u) {  // (1 + rho(k f))/k at k = e^u
    ++iter;
    double k = std::exp(u);
    return (1.0 + rho(k)) / k;
  };

  // walk the window downhill until the middle point is the smallest
  double step = 1.0, b = -std::log(scale0);
  double a = b - step, c = b + step;
  double fa = objective(a), fb = objective(b), fc = objective(c);
  int guard = 0;
  while (fa < fb || fc < fb) {
    if (fa < fb) {
      c = b;
      fc = fb;
      b = a;
      fb = fa;
      step *= 2.0;
      a = b - step;
      fa = objective(a);
    } else {
      a = b;
      fa = fb;
      b = c;
      fb = fc;
      step *= 2.0;
      c = b + step;
      fc = objective(c);
    }
    if (++guard > 300) throw SolverError("amemiya: bracket expansion failed");
  }
  ScalarMin m = golden_min(objective, a, c, 1e-10);
  report.value = m.value;
  report.scale = std::exp(m.x);
  report.iterations = iter + m.iterations;
  return report;
}

inline NormReport norm(NormKind nk, ModularKind mk, const OrliczFunction& phi, const Weight& w,
                       const StepFunction& f, const Tol& tol = {}) {
  return nk == NormKind::Luxemburg ? luxemburg_norm(mk, phi, w, f, tol)
                                   : amemiya_norm(mk, phi, w, f, tol);
}

}  // namespace oll
