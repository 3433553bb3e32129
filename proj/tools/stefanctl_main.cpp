#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stefanctl/errors.hpp"
#include "stefanctl/run_command.hpp"

namespace {

// Accepts "all", "none" or a comma-separated subset of the known checks.
std::vector<std::string> parse_checks(const std::string& spec) {
  const std::vector<std::string> all = {"constraints", "lyapunov", "transforms",
                                        "oracle"};
  if (spec == "all") return all;
  if (spec == "none") return {};
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::count(all.begin(), all.end(), item) == 0) {
      throw stefanctl::InvalidParameterError("unknown check '" + item + "'");
    }
    out.push_back(item);
  }
  return out;
}

// "s0=0.01,0.02" -> key and values.
void parse_sweep(const std::string& spec, std::string& key,
                 std::vector<double>& values) {
  auto eq = spec.find('=');
  if (eq == std::string::npos) {
    throw stefanctl::InvalidParameterError("sweep must look like s0=a,b,c");
  }
  key = spec.substr(0, eq);
  std::stringstream ss(spec.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw stefanctl::InvalidParameterError("bad sweep value '" + item + "'");
    }
  }
  if (values.empty()) {
    throw stefanctl::InvalidParameterError("sweep needs at least one value");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-loop simulation and verification for boundary-controlled "
               "one-phase melting"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run a scenario and write trace/check artifacts");
  std::string scenario_path, out_dir, checks_spec = "all", sweep_spec;
  int refine_levels = 0;
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--checks", checks_spec, "all|none|comma-separated list");
  run->add_option("--sweep", sweep_spec, "Parameter sweep, e.g. s0=0.01,0.25");
  run->add_option("--refine", refine_levels, "Grid refinement levels (n*2^i, dt/4^i)");

  // certify
  auto* certify = app.add_subcommand("certify", "Print the decay certificate");
  std::string certify_path;
  certify->add_option("--scenario", certify_path, "Scenario file")->required();

  // verify-kernels
  auto* kernels = app.add_subcommand("verify-kernels",
                                     "Evaluate the transformation kernel conditions");
  std::string kernels_path;
  kernels->add_option("--scenario", kernels_path, "Scenario file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle",
                                    "Compare the solver against the similarity solution");
  double stefan = 0.0, oracle_t_final = 0.0;
  int oracle_n = 100;
  std::string oracle_out;
  oracle->add_option("--stefan", stefan, "Stefan number")->required();
  oracle->add_option("--t-final", oracle_t_final, "End time [s]")->required();
  oracle->add_option("--n-cells", oracle_n, "Grid resolution");
  oracle->add_option("--out", oracle_out, "Comparison CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      stefanctl::RunManifest manifest;
      manifest.scenario_path = scenario_path;
      manifest.out_dir = out_dir;
      manifest.checks = parse_checks(checks_spec);
      if (!sweep_spec.empty()) {
        parse_sweep(sweep_spec, manifest.sweep_key, manifest.sweep_values);
      }
      manifest.refine_levels = refine_levels;
      const stefanctl::RunReport report = stefanctl::run_command(manifest);
      if (!report.error.empty()) std::cerr << "error: " << report.error << "\n";
      return report.exit_code;
    }
    if (certify->parsed()) return stefanctl::certify_command(certify_path);
    if (kernels->parsed()) return stefanctl::verify_kernels_command(kernels_path);
    if (oracle->parsed()) {
      return stefanctl::oracle_command(stefan, oracle_t_final, oracle_n, oracle_out);
    }
  } catch (const stefanctl::InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return stefanctl::kExitInputError;
  } catch (const stefanctl::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return stefanctl::kExitDivergence;
  } catch (const stefanctl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return stefanctl::kExitInputError;
  }
  return stefanctl::kExitInputError;
}
