#pragma once

// Weighted sequence spaces via the step-function embedding: entry x_i becomes
// the value on [i-1, i), likewise for the weights, and every norm or modular
// of the sequence is the corresponding quantity of the embedded pair. Level
// blocks of the embedded function sit on integer cuts, so the level sequence
// (x*)^o_i = R_j * w_i reads off block by block.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "duality.hpp"
#include "modular.hpp"
#include "step_function.hpp"
#include "weight.hpp"

namespace oll {

struct WeightedSeq {
  std::vector<double> entries;  // finitely many, any sign (|.| is embedded)
  std::vector<double> weights;  // positive nonincreasing, at least as long
};

namespace detail {

inline void validate(const WeightedSeq& s) {
  if (s.weights.size() < s.entries.size())
    throw std::invalid_argument("sequence: need a weight for every entry");
  for (std::size_t i = 0; i < s.weights.size(); ++i) {
    if (!(s.weights[i] > 0.0) || !std::isfinite(s.weights[i]))
      throw std::invalid_argument("sequence: weights must be positive");
    if (i > 0 && s.weights[i] > s.weights[i - 1])
      throw std::invalid_argument("sequence: weights must be nonincreasing");
  }
  for (double x : s.entries)
    if (!std::isfinite(x)) throw std::invalid_argument("sequence: entries must be finite");
}

inline StepFunction unit_steps(const std::vector<double>& v, bool absolute) {
  std::vector<double> breaks{0.0}, values;
  for (double x : v) {
    values.push_back(absolute ? std::fabs(x) : x);
    breaks.push_back(breaks.back() + 1.0);
  }
  return StepFunction(std::move(breaks), std::move(values));
}

}  // namespace detail

inline std::pair<StepFunction, Weight> embed(const WeightedSeq& s) {
  detail::validate(s);
  return {detail::unit_steps(s.entries, true),
          Weight::step(detail::unit_steps(s.weights, false))};
}

inline NormReport seq_modular_p(const OrliczFunction& phi, const WeightedSeq& s,
                                const Tol& tol = {}) {
  auto [f, w] = embed(s);
  return modular_p(phi, w, f, tol);
}

// (x*)^o: R_j * w_i on the j-th block of the embedded decomposition, zero past
// the support of x*
inline std::vector<double> seq_level_sequence(const WeightedSeq& s, const Tol& tol = {}) {
  auto [f, w] = embed(s);
  std::vector<double> out(s.entries.size(), 0.0);
  StepFunction fs = rearrange(f);
  if (fs.is_zero()) return out;
  LevelDecomposition d = level_decompose(fs, w, tol);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double mid = static_cast<double>(i) + 0.5;
    if (mid >= fs.support_end()) break;  // zero tail of x*
    auto block = std::upper_bound(d.cut_times.begin(), d.cut_times.end(), mid);
    std::size_t j = static_cast<std::size_t>(block - d.cut_times.begin()) - 1;
    out[i] = d.ratio[j] * s.weights[i];
  }
  return out;
}

struct SeqNorms {
  double luxemburg = 0.0;
  double amemiya = 0.0;
  double dual_of_luxemburg = 0.0;  // Amemiya-type value built from phi*
  double dual_of_amemiya = 0.0;    // Luxemburg-type value built from phi*
};

inline SeqNorms seq_norms(const OrliczFunction& phi, const WeightedSeq& s, const Tol& tol = {}) {
  auto [f, w] = embed(s);
  SeqNorms out;
  out.luxemburg = luxemburg_norm(ModularKind::I, phi, w, f, tol).value;
  out.amemiya = amemiya_norm(ModularKind::I, phi, w, f, tol).value;
  out.dual_of_luxemburg = dual_norm({NormKind::Luxemburg, phi, w, f, tol}).value;
  out.dual_of_amemiya = dual_norm({NormKind::Amemiya, phi, w, f, tol}).value;
  return out;
}

}  // namespace oll
