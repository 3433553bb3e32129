#pragma once

#include <vector>

#include "stefanctl/core.hpp"
#include "stefanctl/diagnostics.hpp"
#include "stefanctl/solver.hpp"
#include "stefanctl/trace.hpp"

namespace stefanctl {

/// Flux command produced by the feedback law, together with the energy
/// coordinate it acts on. q_c = -c k (energy_e - s_r/beta) by construction.
struct ControlInput {
  double q_c;
  double energy_e;
  double t;
};

/// Discrete internal-energy coordinate E = (1/alpha) int_0^s u dx + s/beta,
/// with the shared trapezoid rule on the immobilized grid.
double energy_coordinate(const SolverState& state, double alpha, double beta,
                         double dxi);

/// Full-state backstepping feedback law:
/// q_c = -c k [ (1/alpha) int_0^s u dx + (1/beta)(s - s_r) ].
ControlInput control_law(const SolverState& state, const Scenario& scenario);

/// Analytic closed-loop flux: q_c(t) = q_c(0) e^{-c t}.
double predicted_flux(double t, double q_c0, double c);

/// Analytic closed-loop energy: E(t) = s_r/beta + (E0 - s_r/beta) e^{-c t}.
double predicted_energy(double t, const Scenario& scenario, double e0);

/// Everything a closed-loop (or prescribed-flux) run produces: per-record
/// diagnostics plus the run-level constants the records are anchored to.
struct ClosedLoopResult {
  std::vector<TraceRecord> records;
  DecayCertificate certificate;
  FeasibilityVerdict feasibility;
  double q_c0 = 0.0;    ///< recorded flux at the initial state
  double e0 = 0.0;      ///< recorded energy coordinate at the initial state
  double v1_0 = 0.0;    ///< Lyapunov functional at the initial state
  double eps_rel = 0.0; ///< relative tolerance used for the flags
};

/// Runs the solver under the given flux source and assembles the full
/// diagnostics trace (norms, Lyapunov functionals, analytic predictions,
/// constraint flags).
ClosedLoopResult run_with_trace(const Scenario& scenario,
                                const FluxSource& flux_source,
                                RunOptions options = {});

/// Closed-loop run: flux source is the feedback law evaluated on the
/// beginning-of-step state (zero-order hold). Requires controlled-flux
/// mode. Constraint violations are flagged in the records, never fatal.
ClosedLoopResult closed_loop_run(const Scenario& scenario,
                                 RunOptions options = {});

}  // namespace stefanctl
