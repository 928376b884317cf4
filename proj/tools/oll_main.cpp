// Job-file front end: reads one JSON job document, runs the requested op and
// prints one JSON result document. Exit codes: 0 ok, 1 selftest failure,
// 2 parse/usage error, 3 precondition violation, 4 solver non-convergence.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oll/job.hpp"
#include "oll/selftest.hpp"

namespace {

int fail(int code, const std::string& kind, const std::string& message) {
  nlohmann::json doc = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cout << doc.dump() << "\n";
  std::cerr << kind << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-Lorentz norm calculator (job-file driven)"};
  std::string file, op;
  double tol_override = -1.0;
  bool selftest = false;
  app.add_option("--file", file, "path to a JSON job document");
  app.add_option("--op", op, "override the job's op field");
  app.add_option("--tol", tol_override, "comparison tolerance override (relative)");
  app.add_flag("--selftest", selftest, "run the embedded check suite and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  oll::Tol tol;
  if (tol_override > 0.0) tol.rel = tol_override;

  if (selftest) {
    oll::SelfTestReport report = oll::run_selftest(tol);
    std::cout << report.text;
    std::cout << (report.failed == 0 ? "OK" : "FAILED") << "  " << report.passed << " passed, "
              << report.failed << " failed\n";
    return report.failed == 0 ? 0 : 1;
  }

  if (file.empty()) {
    std::cerr << app.help() << "\n";
    return 2;
  }
  std::ifstream in(file);
  if (!in) return fail(2, "parse", "cannot open job file: " + file);
  std::stringstream buf;
  buf << in.rdbuf();

  nlohmann::json job;
  try {
    job = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    return fail(2, "parse", e.what());
  }
  if (!op.empty()) job["op"] = op;
  if (tol_override > 0.0) job["options"]["eps_rel"] = tol_override;

  try {
    std::cout << oll::run_job(job).dump() << "\n";
  } catch (const oll::ParseError& e) {
    return fail(2, "parse", e.what());
  } catch (const oll::PreconditionError& e) {
    return fail(3, "precondition", e.what());
  } catch (const oll::SolverError& e) {
    return fail(4, "solver", e.what());
  }
  return 0;
}
