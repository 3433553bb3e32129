#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stefanctl/core.hpp"

namespace stefanctl {

/// State of the immobilized plant: u[i] is the temperature error at
/// xi_i = i/n, s the interface position, t the simulation time.
/// u.back() stays exactly zero (isothermal interface).
struct SolverState {
  std::vector<double> u;
  double s = 0.0;
  double t = 0.0;
};

struct StepResult {
  SolverState state;
  double s_dot;    ///< interface velocity of the returned state [m/s]
  double flux_in;  ///< boundary flux applied during the step [W/m^2]
};

struct RhsResult {
  std::vector<double> du_dt;
  double s_dot;
};

/// Interface floor: stepping below this aborts instead of dividing by ~0
/// in the alpha/s^2 diffusion coefficient.
inline constexpr double kInterfaceFloor = 1e-6;

/// Everything the stepper needs besides the state itself.
struct SolverConfig {
  double alpha = 0.0;
  double beta = 0.0;
  double k = 0.0;
  double dxi = 0.0;
  Integrator integrator = Integrator::Implicit;
  BcMode bc_mode = BcMode::ControlledFlux;
  double dirichlet_value = 0.0;  ///< wall value in prescribed-temperature mode
  double cfl = 1.0;              ///< explicit stability fraction, <= 1

  static SolverConfig from_scenario(const Scenario& scenario);
};

/// Interface velocity -(beta/s) u_xi(1) with the one-sided stencil.
double interface_velocity(const SolverState& state, double beta, double dxi);

/// Realized boundary flux -(k/s) u_xi(0) with the one-sided stencil.
double boundary_flux(const SolverState& state, double k, double dxi);

/// Semi-discrete right-hand side of the immobilized plant:
/// du_i/dt = (alpha/s^2) u_xixi + xi_i (s_dot/s) u_xi, with the flux
/// boundary condition entering through a ghost node at xi = 0 and the
/// interface node pinned to zero. Throws InterfaceCollapseError if s is
/// at or below the floor.
RhsResult immobilized_rhs(const SolverState& state, double flux,
                          const SolverConfig& config);

/// Advances one step with the given applied flux (zero-order hold).
/// Explicit mode enforces dt <= cfl * s^2 dxi^2 / (2 alpha); implicit mode
/// is backward Euler on the diffusion term with the advection term and the
/// interface velocity frozen at the previous iterate, two fixed-point
/// sweeps. The returned s_dot is evaluated on the returned state.
StepResult step(const SolverState& state, double flux, double dt,
                const SolverConfig& config);

using FluxSource = std::function<double(const SolverState&)>;

struct Snapshot {
  SolverState state;
  double s_dot;
  double flux;
};

struct RunOptions {
  /// Record every this many steps; 0 picks a stride that keeps the trace
  /// at or under ~4000 records. The initial and final states are always
  /// recorded.
  int record_every = 0;
};

/// Integrates from initial.t to scenario.t_final, querying flux_source
/// once per step on the beginning-of-step state. Automatic dt means
/// span/5000 for the implicit integrator and the 0.9 * CFL bound,
/// recomputed each step, for the explicit one. Step errors propagate with
/// the failing time attached.
std::vector<Snapshot> run(const Scenario& scenario, SolverState initial,
                          const FluxSource& flux_source, RunOptions options = {});

/// Convenience overload starting from the scenario's built-in profile.
std::vector<Snapshot> run(const Scenario& scenario,
                          const FluxSource& flux_source, RunOptions options = {});

}  // namespace stefanctl
