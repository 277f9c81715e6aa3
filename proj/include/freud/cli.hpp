#pragma once

#include "freud/recurrence.hpp"
#include "freud/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace freud::cli {

enum ExitCode { exit_pass = 0, exit_check_failure = 1, exit_usage = 2, exit_runtime = 3 };

/// Every name accepted by --checks, in execution order.
const std::vector<std::string>& known_checks();
/// dde2 is informational; every other check gates the exit code.
bool is_gating(const std::string& check);

struct RunConfig {
  std::string c = "1";
  std::string t = "0";
  std::string sigma = "0";
  int digits = 120;
  int n_max = 30;
  GammaMethod method = GammaMethod::stieltjes;
  std::vector<std::string> checks;  // empty selects all
  std::string out;                  // empty writes to stdout
  bool electrostatic = false;
  std::optional<int> n;             // zeros: degree, defaults to n_max
  MomentMethod moment_method = MomentMethod::series;
  std::optional<double> tol_identity_exp;
  std::optional<double> tol_quadrature_exp;
  bool timings = false;

  PrecisionContext context() const;
  WeightParams params() const;
  /// Throws PreconditionError on unknown checks or out-of-range values.
  void validate() const;
};

/// Reads the keys of a JSON config file into `cfg`; keys match the long flag names
/// with '-' replaced by '_'.
void load_config_file(const std::string& path, RunConfig& cfg);

std::vector<VerificationReport> run_checks(const RunConfig& cfg);

std::string gamma_csv(const RunConfig& cfg);
std::string zeros_csv(const RunConfig& cfg);
std::string moments_csv(const RunConfig& cfg);
/// JSON document with the run parameters, one object per report and the overall verdict.
std::string reports_json(const RunConfig& cfg, const std::vector<VerificationReport>& reports);
/// True iff every gating report passes.
bool all_gating_pass(const std::vector<VerificationReport>& reports);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freud::cli
