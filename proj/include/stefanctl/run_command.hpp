#pragma once

#include <string>
#include <vector>

#include "stefanctl/controller.hpp"
#include "stefanctl/core.hpp"

namespace stefanctl {

/// Exit codes shared by every CLI entry point.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDivergence = 3;

/// One sweep/run request: which scenario, where to put artifacts, which
/// checks to evaluate, optional parameter sweep and refinement study.
struct RunManifest {
  std::string scenario_path;
  std::string out_dir;
  std::vector<std::string> checks = {"constraints", "lyapunov", "transforms",
                                     "oracle"};
  std::string sweep_key;             ///< "", "s0" or "gain_c"
  std::vector<double> sweep_values;  ///< one run per value
  int refine_levels = 0;             ///< extra runs at n*2^i, dt/4^i
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  bool applicable = true;
  std::string detail;
};

struct RunReport {
  int exit_code = kExitOk;
  std::vector<CheckOutcome> checks;
  std::vector<std::string> artifacts;  ///< files written, relative to out_dir
  std::string error;                   ///< non-empty on abort
};

/// Evaluates the enabled checks against a finished run. Infeasible
/// scenarios assert the *presence* of constraint violations instead of
/// their absence.
std::vector<CheckOutcome> evaluate_checks(const Scenario& scenario,
                                          const ClosedLoopResult& result,
                                          const std::vector<std::string>& enabled);

/// Executes the manifest: runs every sweep entry, writes trace.csv,
/// checks.csv, certificate.txt and plots.gp per run, plus sweep/refine
/// summaries. Never throws; failures are encoded in the exit code.
RunReport run_command(const RunManifest& manifest);

/// Prints the decay certificate for a scenario. Returns an exit code.
int certify_command(const std::string& scenario_path);

/// Evaluates the kernel conditions and prints per-condition residuals.
int verify_kernels_command(const std::string& scenario_path);

/// Compares the solver in prescribed-temperature mode against the
/// similarity solution over [t_final/10, t_final]. Writes a comparison CSV
/// when out_path is non-empty.
int oracle_command(double stefan_number, double t_final, int n_cells,
                   const std::string& out_path);

}  // namespace stefanctl
