#pragma once

// Koethe duals. The dual of the Luxemburg-normed space carries the Amemiya
// norm of the P modular taken at the conjugate function, and vice versa:
//
//   primal Luxemburg  ->  inf_k (1 + P_{phi*,w}(k f)) / k
//   primal Amemiya    ->  inf { eps : P_{phi*,w}(f/eps) <= 1 }
//
// Everything is evaluated through the level decomposition of f*, which only
// needs f to be finitely supported; no assumption on the total weight mass.
//
// halperin_dual_q_norm is the classical q-functional
// (sum_j R_j^q * block W-mass)^(1/q): the dual norm of the PLAIN p-norm
// (int (f*)^p w)^(1/p). Against this library's power family the constant is
// dual_norm(power(p, 1/p), Luxemburg primal) = p^(1/p) * halperin_dual_q_norm.

#include <cmath>
#include <stdexcept>

#include "level.hpp"
#include "modular.hpp"
#include "orlicz_function.hpp"
#include "step_function.hpp"
#include "tolerance.hpp"
#include "weight.hpp"

namespace oll {

struct DualNormRequest {
  NormKind primal = NormKind::Luxemburg;
  OrliczFunction phi = OrliczFunction::power(2.0);
  Weight w = Weight::power_law(1.0, 0.0);
  StepFunction f;
  Tol tol{};
};

inline NormReport dual_norm(const DualNormRequest& req) {
  OrliczFunction conj = req.phi.conjugate();
  return req.primal == NormKind::Luxemburg
             ? amemiya_norm(ModularKind::P, conj, req.w, req.f, req.tol)
             : luxemburg_norm(ModularKind::P, conj, req.w, req.f, req.tol);
}

inline double halperin_dual_q_norm(double p, const Weight& w, const StepFunction& f,
                                   const Tol& tol = {}) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("halperin: exponent must exceed 1");
  StepFunction fs = rearrange(f);
  if (fs.is_zero()) return 0.0;
  double q = p / (p - 1.0);
  LevelDecomposition d = level_decompose(fs, w, tol);
  double s = 0.0;
  for (std::size_t j = 0; j < d.blocks(); ++j)
    s += std::pow(d.ratio[j], q) * d.w_mass[j];
  return std::pow(s, 1.0 / q);
}

// int f* g*  vs  ||f|| * ||g||' for the chosen primal norm; the pairing never
// exceeds the product (both solver outputs sit on the large side of the true
// norms, so the computed inequality is safe too)
struct HoelderCheck {
  double pairing = 0.0;       // int f* g*
  double norm_product = 0.0;  // primal norm of f times dual norm of g
  bool holds(double slack = 1e-9) const { return pairing <= norm_product + slack; }
};

inline HoelderCheck hoelder_check(NormKind primal, const OrliczFunction& phi, const Weight& w,
                                  const StepFunction& f, const StepFunction& g,
                                  const Tol& tol = {}) {
  HoelderCheck out;
  out.pairing = integral_of_product(rearrange(f), rearrange(g));
  double nf = norm(primal, ModularKind::I, phi, w, f, tol).value;
  double ng = dual_norm({primal, phi, w, g, tol}).value;
  out.norm_product = nf * ng;
  return out;
}

}  // namespace oll
