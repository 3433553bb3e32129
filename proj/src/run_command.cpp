#include "stefanctl/run_command.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stefanctl/diagnostics.hpp"
#include "stefanctl/errors.hpp"
#include "stefanctl/scenario_io.hpp"
#include "stefanctl/solver.hpp"
#include "stefanctl/trace.hpp"
#include "stefanctl/transforms.hpp"

namespace stefanctl {

namespace fs = std::filesystem;

namespace {

constexpr double kOracleRelTol = 0.02;      // closed-loop decay identities
constexpr double kKernelClosedTol = 1e-8;   // closed-form kernel residuals

bool enabled(const std::vector<std::string>& checks, const std::string& name) {
  return std::count(checks.begin(), checks.end(), name) > 0;
}

std::string describe_worst(double worst, double threshold, double t_worst) {
  std::ostringstream os;
  os << "worst " << format_double(worst) << " vs threshold "
     << format_double(threshold) << " at t = " << format_double(t_worst);
  return os.str();
}

CheckOutcome check_constraints(const Scenario& scenario,
                               const ClosedLoopResult& result) {
  CheckOutcome out;
  out.name = "constraints";
  if (scenario.bc_mode != BcMode::ControlledFlux) {
    out.applicable = false;
    out.detail = "not applicable outside controlled-flux mode";
    return out;
  }
  std::size_t violations = 0;
  bool qc_violated_at_start = false;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    const bool ok = r.flag_qc && r.flag_sdot && r.flag_band && r.flag_temp;
    if (!ok) ++violations;
    if (i == 0 && !r.flag_qc) qc_violated_at_start = true;
  }
  if (result.feasibility.feasible) {
    out.passed = violations == 0;
    out.detail = out.passed
                     ? "all records satisfy q_c, s_dot, band and temperature flags"
                     : std::to_string(violations) + " record(s) violate the flags";
  } else {
    // An infeasible setpoint must visibly break the physical constraints.
    out.passed = qc_violated_at_start && violations > 0;
    out.detail = out.passed
                     ? "expected violations present (q_c < 0 from t = 0)"
                     : "expected constraint violations absent";
  }
  return out;
}

CheckOutcome check_lyapunov(const Scenario& scenario,
                            const ClosedLoopResult& result) {
  CheckOutcome out;
  out.name = "lyapunov";
  if (scenario.bc_mode != BcMode::ControlledFlux ||
      !result.feasibility.feasible) {
    out.applicable = false;
    out.detail = "envelope is proved for feasible closed-loop runs only";
    return out;
  }
  double worst_gap = 0.0, t_worst = 0.0;
  for (const auto& r : result.records) {
    const double gap = r.v1 - r.envelope_bound;
    if (gap > worst_gap) {
      worst_gap = gap;
      t_worst = r.t;
    }
  }
  double worst_rise = 0.0, t_rise = 0.0;
  for (std::size_t i = 1; i < result.records.size(); ++i) {
    const double rise = result.records[i].v - result.records[i - 1].v;
    if (rise > worst_rise) {
      worst_rise = rise;
      t_rise = result.records[i].t;
    }
  }
  const double v_slack = result.eps_rel * result.v1_0;
  const bool envelope_ok = worst_gap <= 0.0;
  const bool monotone_ok = worst_rise <= v_slack;
  out.passed = envelope_ok && monotone_ok;
  std::ostringstream os;
  os << "envelope " << (envelope_ok ? "holds" : describe_worst(worst_gap, 0.0, t_worst))
     << "; V monotone " << (monotone_ok ? "holds" : describe_worst(worst_rise, v_slack, t_rise));
  out.detail = os.str();
  return out;
}

CheckOutcome check_transforms(const Scenario& scenario,
                              const ClosedLoopResult& result) {
  CheckOutcome out;
  out.name = "transforms";
  if (scenario.bc_mode != BcMode::ControlledFlux) {
    out.applicable = false;
    out.detail = "target-system boundary facts need the feedback law";
    return out;
  }
  const MonitorScales scales = monitor_scales(scenario);
  const double w_tol = result.eps_rel * std::max(scales.temp, 1.0);
  // The w_x(0) residual carries the zero-order-hold lag of the flux
  // boundary condition, c * dt * q_c(t) / k, on top of the spatial
  // truncation floor; the tolerance tracks both terms.
  double dt_step = scenario.dt.value_or(
      scenario.integrator == Integrator::Implicit ? scenario.t_final / 5000.0
                                                  : 0.0);
  const double wx_floor =
      result.eps_rel * std::max(scales.temp / scenario.s0, 1.0);
  double worst_w = 0.0, worst_wx_excess = 0.0, t_w = 0.0, t_wx = 0.0;
  double wx_tol = wx_floor;
  for (const auto& r : result.records) {
    if (r.w_interface_abs > worst_w) {
      worst_w = r.w_interface_abs;
      t_w = r.t;
    }
    // The initial datum need not be compatible with the feedback law, so
    // w_x(0) = 0 is only asserted for t > 0.
    if (r.t > 0.0) {
      const double zoh = 2.0 * scenario.gain_c * dt_step *
                         std::abs(r.q_c_predicted) / scenario.params.k;
      const double tol_here = wx_floor + zoh;
      if (r.wx_origin_abs - tol_here > worst_wx_excess) {
        worst_wx_excess = r.wx_origin_abs - tol_here;
        t_wx = r.t;
        wx_tol = tol_here;
      }
    }
  }
  const double worst_wx = worst_wx_excess > 0.0 ? worst_wx_excess + wx_tol : 0.0;
  KernelSet kernels{scenario.gain_c, scenario.params.alpha(),
                    scenario.params.beta()};
  const KernelResidualReport rep =
      kernel_residuals(kernels, scenario.setpoint_sr, 257);
  const double kernel_worst =
      std::max({rep.h_ode, rep.h_value_origin, rep.h_slope_origin,
                rep.flux_compat, rep.interface_relation});
  const bool w_ok = worst_w <= w_tol;
  const bool wx_ok = worst_wx_excess <= 0.0;
  const bool kernels_ok = kernel_worst <= kKernelClosedTol;
  out.passed = w_ok && wx_ok && kernels_ok;
  std::ostringstream os;
  os << "w(s) " << (w_ok ? "ok" : describe_worst(worst_w, w_tol, t_w)) << "; w_x(0) "
     << (wx_ok ? "ok" : describe_worst(worst_wx, wx_tol, t_wx)) << "; kernels "
     << (kernels_ok ? "ok" : "residual " + format_double(kernel_worst));
  out.detail = os.str();
  return out;
}

CheckOutcome check_oracle(const Scenario& scenario,
                          const ClosedLoopResult& result) {
  CheckOutcome out;
  out.name = "oracle";
  if (scenario.bc_mode != BcMode::ControlledFlux) {
    out.applicable = false;
    out.detail = "decay identities hold for the closed loop only";
    return out;
  }
  const double q_scale = std::max(std::abs(result.q_c0), 1e-300);
  double worst_q = 0.0, worst_e = 0.0, t_q = 0.0, t_e = 0.0;
  for (const auto& r : result.records) {
    const double dq = std::abs(r.q_c - r.q_c_predicted) / q_scale;
    if (dq > worst_q) {
      worst_q = dq;
      t_q = r.t;
    }
    const double de = std::abs(r.energy_e - r.energy_predicted) /
                      std::max(std::abs(r.energy_predicted), 1e-300);
    if (de > worst_e) {
      worst_e = de;
      t_e = r.t;
    }
  }
  const bool q_ok = worst_q <= kOracleRelTol;
  const bool e_ok = worst_e <= kOracleRelTol;
  out.passed = q_ok && e_ok;
  std::ostringstream os;
  os << "flux decay " << (q_ok ? "ok" : describe_worst(worst_q, kOracleRelTol, t_q))
     << "; energy " << (e_ok ? "ok" : describe_worst(worst_e, kOracleRelTol, t_e));
  out.detail = os.str();
  return out;
}

void write_certificate(std::ostream& os, const Scenario& scenario,
                       const ClosedLoopResult& result) {
  const auto& c = result.certificate;
  os << "alpha = " << format_double(scenario.params.alpha()) << "\n"
     << "beta = " << format_double(scenario.params.beta()) << "\n"
     << "feasible = " << (result.feasibility.feasible ? "true" : "false") << "\n"
     << "feasibility_bound = " << format_double(result.feasibility.bound) << "\n"
     << "feasibility_margin = " << format_double(result.feasibility.margin) << "\n"
     << "q_c0 = " << format_double(result.q_c0) << "\n"
     << "energy_e0 = " << format_double(result.e0) << "\n"
     << "v1_0 = " << format_double(result.v1_0) << "\n"
     << "p_upper = " << format_double(c.p_upper) << "\n"
     << "p = " << format_double(c.p) << "\n"
     << "a = " << format_double(c.a) << "\n"
     << "b = " << format_double(c.b) << "\n";
  const double ms[] = {c.m1, c.m2, c.m3, c.m4, c.m5, c.m6, c.m7, c.m8};
  for (int i = 0; i < 8; ++i) {
    os << "M" << (i + 1) << " = " << format_double(ms[i]) << "\n";
  }
  os << "delta_bar = " << format_double(c.delta_bar) << "\n"
     << "delta_under = " << format_double(c.delta_under) << "\n"
     << "D = " << format_double(c.big_d) << "\n"
     << "eps_tol = " << format_double(result.eps_rel) << "\n";
}

void write_plot_script(std::ostream& os, const Scenario& scenario) {
  os << "# Plots for one run; expects trace.csv in the working directory.\n"
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set terminal pngcairo size 900,600\n"
        "set xlabel 't [s]'\n"
        "\n"
        "set output 'interface.png'\n"
        "set ylabel 's(t) [m]'\n"
        "plot 'trace.csv' using 1:2 with lines title 'interface', \\\n"
        "     "
     << format_double(scenario.setpoint_sr)
     << " with lines dashtype 2 title 'setpoint'\n"
        "\n"
        "set output 'h1_norm.png'\n"
        "set ylabel 'H1 norm of temperature error'\n"
        "plot 'trace.csv' using 1:(sqrt($9)) with lines title 'H1 norm'\n"
        "\n"
        "set output 'flux.png'\n"
        "set ylabel 'q_c(t) [W/m^2]'\n"
        "plot 'trace.csv' using 1:4 with lines title 'simulated', \\\n"
        "     'trace.csv' using 1:5 with lines dashtype 2 title 'q_c(0) exp(-ct)'\n";
}

void write_checks_csv(std::ostream& os, const std::vector<CheckOutcome>& checks) {
  os << "check,applicable,passed,detail\n";
  for (const auto& c : checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    os << c.name << ',' << (c.applicable ? 1 : 0) << ',' << (c.passed ? 1 : 0)
       << ',' << detail << '\n';
  }
}

ClosedLoopResult execute(const Scenario& scenario) {
  if (scenario.bc_mode == BcMode::ControlledFlux) {
    return closed_loop_run(scenario);
  }
  if (scenario.bc_mode == BcMode::PrescribedFlux) {
    return run_with_trace(scenario, [](const SolverState&) { return 0.0; });
  }
  // Prescribed temperature: record the realized boundary flux.
  const double k = scenario.params.k;
  const double dxi = scenario.dxi();
  return run_with_trace(scenario, [k, dxi](const SolverState& st) {
    return boundary_flux(st, k, dxi);
  });
}

struct SingleRunResult {
  int exit_code = kExitOk;
  std::vector<CheckOutcome> checks;
  std::string error;
  double final_s = 0.0;
  bool feasible = false;
};

SingleRunResult run_single(const Scenario& scenario, const fs::path& dir,
                           const std::vector<std::string>& checks,
                           RunReport& report) {
  SingleRunResult out;
  ClosedLoopResult result;
  try {
    result = execute(scenario);
  } catch (const DivergenceError& e) {
    out.exit_code = kExitDivergence;
    out.error = e.what();
    std::ofstream rep(dir / "checks.csv");
    rep << "check,applicable,passed,detail\n"
        << "run,1,0,diverged: " << e.what() << "\n";
    report.artifacts.push_back((dir / "checks.csv").string());
    return out;
  } catch (const InterfaceCollapseError& e) {
    out.exit_code = kExitDivergence;
    out.error = e.what();
    std::ofstream rep(dir / "checks.csv");
    rep << "check,applicable,passed,detail\n"
        << "run,1,0,interface collapse: " << e.what() << "\n";
    report.artifacts.push_back((dir / "checks.csv").string());
    return out;
  } catch (const StepSizeError& e) {
    out.exit_code = kExitDivergence;
    out.error = e.what();
    std::ofstream rep(dir / "checks.csv");
    rep << "check,applicable,passed,detail\n"
        << "run,1,0,step-size failure: " << e.what() << "\n";
    report.artifacts.push_back((dir / "checks.csv").string());
    return out;
  }

  {
    std::ofstream os(dir / "trace.csv");
    write_trace_csv(os, result.records);
    report.artifacts.push_back((dir / "trace.csv").string());
  }
  {
    std::ofstream os(dir / "certificate.txt");
    write_certificate(os, scenario, result);
    report.artifacts.push_back((dir / "certificate.txt").string());
  }
  {
    std::ofstream os(dir / "plots.gp");
    write_plot_script(os, scenario);
    report.artifacts.push_back((dir / "plots.gp").string());
  }

  out.checks = evaluate_checks(scenario, result, checks);
  {
    std::ofstream os(dir / "checks.csv");
    write_checks_csv(os, out.checks);
    report.artifacts.push_back((dir / "checks.csv").string());
  }
  for (const auto& c : out.checks) {
    if (c.applicable && !c.passed) out.exit_code = kExitCheckFailure;
  }
  out.final_s = result.records.empty() ? scenario.s0 : result.records.back().s;
  out.feasible = result.feasibility.feasible;
  return out;
}

}  // namespace

std::vector<CheckOutcome> evaluate_checks(const Scenario& scenario,
                                          const ClosedLoopResult& result,
                                          const std::vector<std::string>& checks) {
  std::vector<CheckOutcome> out;
  if (enabled(checks, "constraints")) out.push_back(check_constraints(scenario, result));
  if (enabled(checks, "lyapunov")) out.push_back(check_lyapunov(scenario, result));
  if (enabled(checks, "transforms")) out.push_back(check_transforms(scenario, result));
  if (enabled(checks, "oracle")) out.push_back(check_oracle(scenario, result));
  return out;
}

RunReport run_command(const RunManifest& manifest) {
  RunReport report;

  LoadedScenario loaded;
  try {
    loaded = parse_scenario(manifest.scenario_path);
  } catch (const ParseError& e) {
    report.exit_code = kExitInputError;
    report.error = e.what();
    return report;
  }

  std::error_code ec;
  fs::create_directories(manifest.out_dir, ec);
  if (ec || !fs::is_directory(manifest.out_dir)) {
    report.exit_code = kExitInputError;
    report.error = "cannot create output directory '" + manifest.out_dir + "'";
    return report;
  }

  std::cout << "scenario " << manifest.scenario_path << ": setpoint "
            << (loaded.feasibility.feasible ? "feasible" : "infeasible")
            << " (bound " << format_double(loaded.feasibility.bound)
            << " m, margin " << format_double(loaded.feasibility.margin)
            << " m)\n";

  struct Entry {
    Scenario scenario;
    fs::path dir;
    std::string label;
  };
  std::vector<Entry> entries;
  if (manifest.sweep_values.empty()) {
    entries.push_back({loaded.scenario, manifest.out_dir, "run"});
  } else {
    for (double v : manifest.sweep_values) {
      Scenario sc = loaded.scenario;
      if (manifest.sweep_key == "s0") {
        sc.s0 = v;
      } else if (manifest.sweep_key == "gain_c") {
        sc.gain_c = v;
      } else {
        report.exit_code = kExitInputError;
        report.error = "sweep key must be s0 or gain_c";
        return report;
      }
      const std::string label = manifest.sweep_key + "_" + format_double(v);
      entries.push_back({sc, fs::path(manifest.out_dir) / label, label});
    }
  }

  int exit_code = kExitOk;
  std::vector<SingleRunResult> results;
  for (const auto& entry : entries) {
    fs::create_directories(entry.dir, ec);
    Scenario sc = entry.scenario;
    try {
      sc.validate();
    } catch (const InvalidParameterError& e) {
      report.exit_code = kExitInputError;
      report.error = std::string("sweep entry ") + entry.label + ": " + e.what();
      return report;
    }
    SingleRunResult r = run_single(sc, entry.dir, manifest.checks, report);
    std::cout << entry.label << ": "
              << (r.exit_code == kExitOk ? "ok" : "exit " + std::to_string(r.exit_code));
    for (const auto& c : r.checks) {
      std::cout << "  [" << c.name << ": "
                << (!c.applicable ? "n/a" : (c.passed ? "pass" : "FAIL")) << "]";
    }
    std::cout << "\n";
    for (auto& c : r.checks) report.checks.push_back(c);
    exit_code = std::max(exit_code, r.exit_code);
    if (!r.error.empty()) report.error = r.error;
    results.push_back(std::move(r));
  }

  if (!manifest.sweep_values.empty()) {
    std::ofstream os(fs::path(manifest.out_dir) / "sweep_summary.csv");
    os << "label,value,feasible,final_s,exit\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      os << entries[i].label << ',' << format_double(manifest.sweep_values[i])
         << ',' << (results[i].feasible ? 1 : 0) << ','
         << format_double(results[i].final_s) << ',' << results[i].exit_code
         << '\n';
    }
    report.artifacts.push_back((fs::path(manifest.out_dir) / "sweep_summary.csv").string());
  }

  if (manifest.refine_levels > 0 &&
      loaded.scenario.bc_mode == BcMode::ControlledFlux) {
    std::ofstream os(fs::path(manifest.out_dir) / "refine.csv");
    os << "level,n_cells,dt,max_rel_flux_err,max_rel_energy_err\n";
    const double dt0 =
        loaded.scenario.dt.value_or(loaded.scenario.t_final / 5000.0);
    for (int level = 0; level <= manifest.refine_levels; ++level) {
      Scenario sc = loaded.scenario;
      sc.n_cells = loaded.scenario.n_cells << level;
      sc.dt = dt0 / std::pow(4.0, level);
      try {
        ClosedLoopResult r = execute(sc);
        double worst_q = 0.0, worst_e = 0.0;
        const double q_scale = std::max(std::abs(r.q_c0), 1e-300);
        for (const auto& rec : r.records) {
          worst_q = std::max(worst_q,
                             std::abs(rec.q_c - rec.q_c_predicted) / q_scale);
          worst_e = std::max(worst_e, std::abs(rec.energy_e - rec.energy_predicted) /
                                          std::abs(rec.energy_predicted));
        }
        os << level << ',' << sc.n_cells << ',' << format_double(*sc.dt) << ','
           << format_double(worst_q) << ',' << format_double(worst_e) << '\n';
      } catch (const Error& e) {
        os << level << ',' << sc.n_cells << ",,error: " << e.what() << ",\n";
        exit_code = std::max(exit_code, kExitDivergence);
      }
    }
    report.artifacts.push_back((fs::path(manifest.out_dir) / "refine.csv").string());
  }

  report.exit_code = exit_code;
  return report;
}

int certify_command(const std::string& scenario_path) {
  LoadedScenario loaded;
  try {
    loaded = parse_scenario(scenario_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  try {
    const DecayCertificate c = decay_certificate(loaded.scenario);
    ClosedLoopResult dummy;
    dummy.certificate = c;
    dummy.feasibility = loaded.feasibility;
    dummy.eps_rel = eps_tol(loaded.scenario.n_cells);
    // q_c0 / e0 / v1_0 from the initial state only; no time stepping.
    InitialProfile profile = build_initial_profile(loaded.scenario);
    SolverState st{profile.values, loaded.scenario.s0, 0.0};
    dummy.q_c0 = control_law(st, loaded.scenario).q_c;
    dummy.e0 = energy_coordinate(st, loaded.scenario.params.alpha(),
                                 loaded.scenario.params.beta(),
                                 loaded.scenario.dxi());
    TargetState w0 = direct_transform(
        st.u, st.s, TransformParams::from_scenario(loaded.scenario));
    dummy.v1_0 = lyapunov_v1(w0, c.p, loaded.scenario.dxi());
    write_certificate(std::cout, loaded.scenario, dummy);
    return kExitOk;
  } catch (const CertificateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

int verify_kernels_command(const std::string& scenario_path) {
  LoadedScenario loaded;
  try {
    loaded = parse_scenario(scenario_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const Scenario& sc = loaded.scenario;
  KernelSet kernels{sc.gain_c, sc.params.alpha(), sc.params.beta()};
  const KernelResidualReport r =
      kernel_residuals(kernels, sc.setpoint_sr, 1000);
  std::cout << "h_ode = " << format_double(r.h_ode) << "\n"
            << "h_ode_fd = " << format_double(r.h_ode_fd) << "\n"
            << "h_value_origin = " << format_double(r.h_value_origin) << "\n"
            << "h_slope_origin = " << format_double(r.h_slope_origin) << "\n"
            << "h_slope_origin_fd = " << format_double(r.h_slope_origin_fd) << "\n"
            << "l_wave_fd = " << format_double(r.l_wave_fd) << "\n"
            << "l_diagonal_fd = " << format_double(r.l_diagonal_fd) << "\n"
            << "flux_compat = " << format_double(r.flux_compat) << "\n"
            << "flux_compat_quadrature = " << format_double(r.flux_compat_quadrature)
            << "\n"
            << "interface_relation = " << format_double(r.interface_relation) << "\n"
            << "fd_step = " << format_double(r.fd_step) << "\n";
  const double closed = std::max({r.h_ode, r.h_value_origin, r.h_slope_origin,
                                  r.flux_compat, r.interface_relation,
                                  r.l_diagonal_fd});
  if (closed > kKernelClosedTol) {
    std::cerr << "closed-form residual " << format_double(closed)
              << " exceeds " << format_double(kKernelClosedTol) << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

int oracle_command(double stefan_number, double t_final, int n_cells,
                   const std::string& out_path) {
  if (!(stefan_number > 0.0) || !(t_final > 0.0) || n_cells < 8) {
    std::cerr << "error: need stefan > 0, t-final > 0, n-cells >= 8\n";
    return kExitInputError;
  }
  // Zinc material; wall superheat chosen to match the requested Stefan
  // number. The run starts on the similarity solution at t0 = t_final/10.
  Scenario sc;
  sc.params = {6570.0, 389.5687, 116.0, 111961.0, 692.68};
  const double alpha = sc.params.alpha();
  const double lam = neumann_lambda(stefan_number);
  const double t0 = t_final / 10.0;
  const double s_start = 2.0 * lam * std::sqrt(alpha * t0);
  const double delta_t = stefan_number * sc.params.dh / sc.params.cp;

  sc.bc_mode = BcMode::PrescribedTemperature;
  sc.integrator = Integrator::Implicit;
  sc.gain_c = 0.01;
  sc.s0 = s_start;
  sc.h_slope = delta_t / s_start;  // dirichlet wall value = h_slope * s0
  sc.setpoint_sr = 2.0 * lam * std::sqrt(alpha * t_final) * 1.5;
  sc.n_cells = n_cells;
  sc.t_final = t_final;

  SolverState state;
  state.s = s_start;
  state.t = t0;
  state.u.resize(n_cells + 1);
  const double erf_lam = std::erf(lam);
  for (int i = 0; i <= n_cells; ++i) {
    const double xi = static_cast<double>(i) / n_cells;
    state.u[i] = delta_t * (1.0 - std::erf(lam * xi) / erf_lam);
  }
  state.u[n_cells] = 0.0;

  try {
    const double k = sc.params.k;
    const double dxi = sc.dxi();
    auto flux = [k, dxi](const SolverState& st) {
      return boundary_flux(st, k, dxi);
    };
    std::vector<Snapshot> snaps = run(sc, std::move(state), flux);
    double worst = 0.0, t_worst = 0.0;
    std::ofstream os;
    if (!out_path.empty()) {
      os.open(out_path);
      os << "t,s,s_exact\n";
    }
    for (const auto& snap : snaps) {
      const double exact = 2.0 * lam * std::sqrt(alpha * snap.state.t);
      const double err = std::abs(snap.state.s - exact);
      if (err > worst) {
        worst = err;
        t_worst = snap.state.t;
      }
      if (os.is_open()) {
        os << format_double(snap.state.t) << ',' << format_double(snap.state.s)
           << ',' << format_double(exact) << '\n';
      }
    }
    std::cout << "stefan = " << format_double(stefan_number)
              << ", lambda = " << format_double(lam)
              << ", span = [" << format_double(t0) << ", " << format_double(t_final)
              << "] s\n"
              << "n_cells = " << n_cells
              << ", Linf interface error = " << format_double(worst) << " m (at t = "
              << format_double(t_worst) << " s, relative "
              << format_double(worst / (2.0 * lam * std::sqrt(alpha * t_final)))
              << ")\n";
    return kExitOk;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  }
}

}  // namespace stefanctl
