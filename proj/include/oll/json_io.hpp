#pragma once

// JSON bindings for the job interface. Inputs accept plain JSON numbers (and
// tolerate decimal strings, so result documents can be fed back in); outputs
// write every floating-point leaf as a decimal string with round-trip
// precision so that result documents are byte-stable across runs.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "level.hpp"
#include "modular.hpp"
#include "orlicz_function.hpp"
#include "sequence.hpp"
#include "step_function.hpp"
#include "weight.hpp"

namespace oll {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace jio {

using nlohmann::json;

inline std::string dec(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json dec_array(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(dec(x));
  return a;
}

inline double get_num(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      double v = std::stod(j.get<std::string>(), &used);
      if (used == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw ParseError(std::string("expected a number for ") + what);
}

inline std::vector<double> get_num_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("expected an array for ") + what);
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(get_num(x, what));
  return out;
}

inline const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + name);
  return *it;
}

inline StepFunction parse_step_function(const json& j) {
  if (!j.is_object()) throw ParseError("step function: expected an object");
  auto breaks = get_num_array(field(j, "breakpoints"), "breakpoints");
  auto values = get_num_array(field(j, "values"), "values");
  for (double& v : values) v = std::fabs(v);  // signed inputs: magnitude only
  try {
    return StepFunction(std::move(breaks), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline json step_function_to_json(const StepFunction& f) {
  return {{"breakpoints", dec_array(f.breakpoints())}, {"values", dec_array(f.values())}};
}

inline Weight parse_weight(const json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  try {
    if (kind == "step") return Weight::step(parse_step_function(j));
    if (kind == "power")
      return Weight::power_law(get_num(field(j, "c"), "c"), get_num(field(j, "alpha"), "alpha"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("weight: kind must be \"step\" or \"power\"");
}

inline json weight_to_json(const Weight& w) {
  if (w.is_step()) {
    json j = step_function_to_json(w.step_density());
    j["kind"] = "step";
    return j;
  }
  return {{"kind", "power"}, {"c", dec(w.power_c())}, {"alpha", dec(w.power_alpha())}};
}

inline OrliczFunction parse_orlicz(const json& j) {
  std::string family = field(j, "family").get<std::string>();
  try {
    if (family == "power")
      return OrliczFunction::power(get_num(field(j, "p"), "p"),
                                   j.contains("c") ? get_num(j["c"], "c") : 1.0);
    if (family == "expm") return OrliczFunction::expm();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("orlicz: family must be \"power\" or \"expm\"");
}

inline WeightedSeq parse_weighted_seq(const json& j) {
  WeightedSeq s;
  s.entries = get_num_array(field(j, "sequence"), "sequence");
  s.weights = get_num_array(field(j, "weights"), "weights");
  return s;
}

inline json decomposition_to_json(const LevelDecomposition& d) {
  return {{"cuts", dec_array(d.cut_times)},
          {"lambda", dec_array(d.lambda)},
          {"r", dec_array(d.ratio)}};
}

inline json report_to_json(const char* op, const NormReport& r) {
  json witness = json::object();
  if (r.scale) witness["scale"] = dec(*r.scale);
  if (r.minimizer) witness["minimizer"] = step_function_to_json(*r.minimizer);
  json diagnostics = json::object();
  diagnostics["iterations"] = r.iterations;
  if (r.levels) {
    diagnostics["cuts"] = dec_array(r.levels->cut_times);
    diagnostics["lambda"] = dec_array(r.levels->lambda);
    diagnostics["r"] = dec_array(r.levels->ratio);
  }
  return {{"op", op}, {"value", dec(r.value)}, {"witness", witness}, {"diagnostics", diagnostics}};
}

}  // namespace jio

}  // namespace oll
