#pragma once

// Job-file dispatch: one JSON document in, one JSON result document out.
// Error taxonomy maps onto process exit codes at the CLI boundary:
// ParseError (2), PreconditionError (3), SolverError (4).

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "duality.hpp"
#include "json_io.hpp"
#include "level.hpp"
#include "modular.hpp"
#include "oracle.hpp"
#include "orlicz_function.hpp"
#include "sequence.hpp"
#include "step_function.hpp"
#include "tolerance.hpp"
#include "weight.hpp"

namespace oll {

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

struct JobContext {
  json job;
  Tol tol{};
  int oracle_depth = 6;

  const json& f(const char* name) const { return jio::field(job, name); }

  StepFunction input() const { return jio::parse_step_function(f("input")); }
  Weight weight() const { return jio::parse_weight(f("weight")); }
  OrliczFunction phi() const { return jio::parse_orlicz(f("phi")); }

  NormKind norm_kind() const {
    std::string k = f("norm_kind").get<std::string>();
    if (k == "luxemburg") return NormKind::Luxemburg;
    if (k == "amemiya") return NormKind::Amemiya;
    throw ParseError("norm_kind must be \"luxemburg\" or \"amemiya\"");
  }

  ModularKind modular_kind() const {
    if (!job.contains("modular")) return ModularKind::I;
    std::string k = job["modular"].get<std::string>();
    if (k == "i") return ModularKind::I;
    if (k == "p") return ModularKind::P;
    throw ParseError("modular must be \"i\" or \"p\"");
  }
};

inline json dispatch(const JobContext& ctx, const std::string& op) {
  using jio::dec;
  if (op == "rearrange") {
    StepFunction fs = rearrange(ctx.input());
    return {{"op", op},
            {"value", dec(fs.integral())},
            {"witness", {{"rearranged", jio::step_function_to_json(fs)}}},
            {"diagnostics", json::object()}};
  }
  if (op == "modular-i") {
    double v = modular_i(ctx.phi(), ctx.weight(), ctx.input());
    return {{"op", op},
            {"value", dec(v)},
            {"witness", json::object()},
            {"diagnostics", json::object()}};
  }
  if (op == "modular-p") {
    NormReport r = modular_p(ctx.phi(), ctx.weight(), ctx.input(), ctx.tol);
    return jio::report_to_json(op.c_str(), r);
  }
  if (op == "level") {
    StepFunction f = ctx.input();
    Weight w = ctx.weight();
    LevelDecomposition d = level_decompose(f, w, ctx.tol);
    json contacts = json::array();
    for (std::size_t i : d.contacts) contacts.push_back(dec(f.breakpoints()[i]));
    return {{"op", op},
            {"value", dec(static_cast<double>(d.blocks()))},
            {"witness", jio::decomposition_to_json(d)},
            {"diagnostics", {{"contacts", contacts}}}};
  }
  if (op == "norm") {
    NormReport r =
        norm(ctx.norm_kind(), ctx.modular_kind(), ctx.phi(), ctx.weight(), ctx.input(), ctx.tol);
    return jio::report_to_json(op.c_str(), r);
  }
  if (op == "dual-norm") {
    NormReport r =
        dual_norm({ctx.norm_kind(), ctx.phi(), ctx.weight(), ctx.input(), ctx.tol});
    return jio::report_to_json(op.c_str(), r);
  }
  if (op == "halperin-q") {
    double p = jio::get_num(ctx.f("p"), "p");
    double v = halperin_dual_q_norm(p, ctx.weight(), ctx.input(), ctx.tol);
    return {{"op", op},
            {"value", dec(v)},
            {"witness", json::object()},
            {"diagnostics", {{"q", dec(p / (p - 1.0))}}}};
  }
  if (op == "hoelder-check") {
    StepFunction g = jio::parse_step_function(ctx.f("input2"));
    HoelderCheck hc =
        hoelder_check(ctx.norm_kind(), ctx.phi(), ctx.weight(), ctx.input(), g, ctx.tol);
    return {{"op", op},
            {"value", dec(hc.norm_product - hc.pairing)},
            {"witness", {{"pairing", dec(hc.pairing)}, {"norm_product", dec(hc.norm_product)}}},
            {"diagnostics", {{"holds", hc.holds()}}}};
  }
  if (op == "seq-norm") {
    WeightedSeq s = jio::parse_weighted_seq(ctx.f("input"));
    SeqNorms ns = seq_norms(ctx.phi(), s, ctx.tol);
    return {{"op", op},
            {"value", dec(ns.luxemburg)},
            {"witness",
             {{"luxemburg", dec(ns.luxemburg)},
              {"amemiya", dec(ns.amemiya)},
              {"dual_of_luxemburg", dec(ns.dual_of_luxemburg)},
              {"dual_of_amemiya", dec(ns.dual_of_amemiya)}}},
            {"diagnostics", json::object()}};
  }
  if (op == "verify") {
    NormReport r = modular_p(ctx.phi(), ctx.weight(), ctx.input(), ctx.tol);
    BruteForceResult o =
        brute_force_min(ctx.phi(), ctx.weight(), ctx.input(), ctx.oracle_depth);
    double gap = std::fabs(r.value - o.value) / std::max({std::fabs(r.value), std::fabs(o.value), 1e-30});
    json doc = jio::report_to_json(op.c_str(), r);
    doc["diagnostics"]["oracle"] = dec(o.value);
    doc["diagnostics"]["rel_gap"] = dec(gap);
    doc["diagnostics"]["depth"] = ctx.oracle_depth;
    return doc;
  }
  throw ParseError("unknown op: " + op);
}

}  // namespace detail

inline nlohmann::json run_job(const nlohmann::json& job) {
  using nlohmann::json;
  try {
    if (!job.is_object()) throw ParseError("job: expected a JSON object");
    if (job.value("schema", std::string("1")) != "1")
      throw ParseError("job: unsupported schema version");

    detail::JobContext ctx{job, Tol{}, 6};
    if (job.contains("options")) {
      const json& opts = job["options"];
      if (!opts.is_object()) throw ParseError("options: expected an object");
      if (opts.contains("eps_rel")) ctx.tol.rel = jio::get_num(opts["eps_rel"], "eps_rel");
      if (opts.contains("eps_abs")) ctx.tol.abs = jio::get_num(opts["eps_abs"], "eps_abs");
      if (opts.contains("oracle_depth"))
        ctx.oracle_depth = static_cast<int>(jio::get_num(opts["oracle_depth"], "oracle_depth"));
    }
    std::string op = jio::field(job, "op").get<std::string>();
    return detail::dispatch(ctx, op);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("job: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
}

}  // namespace oll
