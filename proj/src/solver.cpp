#include "stefanctl/solver.hpp"

#include <algorithm>
#include <cmath>

#include "stefanctl/errors.hpp"
#include "stefanctl/numerics.hpp"

namespace stefanctl {

namespace {

void check_alive(const SolverState& state, const char* what) {
  if (!(state.s > kInterfaceFloor)) {
    throw InterfaceCollapseError(std::string(what) + ": interface reached floor",
                                 state.t);
  }
}

void check_finite(const SolverState& state, const char* what) {
  if (!std::isfinite(state.s)) {
    throw DivergenceError(std::string(what) + ": non-finite interface", state.t);
  }
  for (double v : state.u) {
    if (!std::isfinite(v)) {
      throw DivergenceError(std::string(what) + ": non-finite temperature", state.t);
    }
  }
}

double explicit_dt_bound(const SolverState& state, const SolverConfig& c) {
  return c.cfl * state.s * state.s * c.dxi * c.dxi / (2.0 * c.alpha);
}

/// One backward-Euler solve of the diffusion operator at frozen (s, s_dot),
/// with the advection term evaluated on u_frozen. Writes the result to out.
void implicit_sweep(const SolverState& begin, std::span<const double> u_frozen,
                    double s, double s_dot, double flux, double dt,
                    const SolverConfig& c, std::vector<double>& out) {
  const std::size_t m = begin.u.size();
  const double dxi = c.dxi;
  const double r = dt * c.alpha / (s * s * dxi * dxi);

  std::vector<double> lower(m - 1, 0.0), diag(m, 0.0), upper(m - 1, 0.0),
      rhs(m, 0.0);

  if (c.bc_mode == BcMode::PrescribedTemperature) {
    diag[0] = 1.0;
    upper[0] = 0.0;
    rhs[0] = c.dirichlet_value;
  } else {
    // Ghost-node flux closure: u_xi(0) = -flux * s / k.
    const double g = -flux * s / c.k;
    diag[0] = 1.0 + 2.0 * r;
    upper[0] = -2.0 * r;
    rhs[0] = begin.u[0] - 2.0 * r * dxi * g;
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    lower[i - 1] = -r;
    diag[i] = 1.0 + 2.0 * r;
    upper[i] = -r;
    const double xi = static_cast<double>(i) * dxi;
    const double adv =
        xi * (s_dot / s) * (u_frozen[i + 1] - u_frozen[i - 1]) / (2.0 * dxi);
    rhs[i] = begin.u[i] + dt * adv;
  }
  lower[m - 2] = 0.0;
  diag[m - 1] = 1.0;
  rhs[m - 1] = 0.0;

  out.resize(m);
  solve_tridiagonal(lower, diag, upper, rhs, out);
  out[m - 1] = 0.0;
}

}  // namespace

SolverConfig SolverConfig::from_scenario(const Scenario& scenario) {
  SolverConfig c;
  c.alpha = scenario.params.alpha();
  c.beta = scenario.params.beta();
  c.k = scenario.params.k;
  c.dxi = scenario.dxi();
  c.integrator = scenario.integrator;
  c.bc_mode = scenario.bc_mode;
  c.dirichlet_value = scenario.h_slope * scenario.s0;
  return c;
}

double interface_velocity(const SolverState& state, double beta, double dxi) {
  return -(beta / state.s) * d1_right(state.u, dxi);
}

double boundary_flux(const SolverState& state, double k, double dxi) {
  return -(k / state.s) * d1_left(state.u, dxi);
}

RhsResult immobilized_rhs(const SolverState& state, double flux,
                          const SolverConfig& c) {
  check_alive(state, "immobilized_rhs");
  const std::size_t m = state.u.size();
  const double dxi = c.dxi;
  const double s = state.s;
  const double diff = c.alpha / (s * s);
  const double s_dot = interface_velocity(state, c.beta, dxi);

  RhsResult out;
  out.s_dot = s_dot;
  out.du_dt.assign(m, 0.0);

  if (c.bc_mode == BcMode::PrescribedTemperature) {
    out.du_dt[0] = 0.0;  // wall value held fixed
  } else {
    const double g = -flux * s / c.k;  // imposed u_xi(0)
    out.du_dt[0] =
        diff * (2.0 * state.u[1] - 2.0 * state.u[0] - 2.0 * dxi * g) / (dxi * dxi);
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double xi = static_cast<double>(i) * dxi;
    const double d2 =
        (state.u[i + 1] - 2.0 * state.u[i] + state.u[i - 1]) / (dxi * dxi);
    const double d1 = (state.u[i + 1] - state.u[i - 1]) / (2.0 * dxi);
    out.du_dt[i] = diff * d2 + xi * (s_dot / s) * d1;
  }
  out.du_dt[m - 1] = 0.0;
  return out;
}

StepResult step(const SolverState& state, double flux, double dt,
                const SolverConfig& c) {
  check_alive(state, "step");
  if (!(dt > 0.0)) throw StepSizeError("dt must be positive");

  StepResult result;
  result.flux_in = flux;

  if (c.integrator == Integrator::Explicit) {
    const double bound = explicit_dt_bound(state, c);
    if (dt > bound * (1.0 + 1e-12)) {
      throw StepSizeError("explicit dt " + std::to_string(dt) +
                          " exceeds stability bound " + std::to_string(bound));
    }
    RhsResult rhs = immobilized_rhs(state, flux, c);
    SolverState next;
    next.u.resize(state.u.size());
    for (std::size_t i = 0; i < state.u.size(); ++i) {
      next.u[i] = state.u[i] + dt * rhs.du_dt[i];
    }
    next.u.back() = 0.0;
    next.s = state.s + dt * rhs.s_dot;
    next.t = state.t + dt;
    result.state = std::move(next);
  } else {
    // Two fixed-point sweeps toward the backward-Euler solution of the
    // coupled system; the diffusion coefficient alpha/s^2 is huge at
    // small s, so diffusion must be implicit.
    SolverState iterate = state;
    double s_new = state.s;
    std::vector<double> u_new;
    for (int sweep = 0; sweep < 2; ++sweep) {
      const double s_dot_frozen = interface_velocity(iterate, c.beta, c.dxi);
      s_new = state.s + dt * s_dot_frozen;
      if (!std::isfinite(s_new)) {
        throw DivergenceError("step: non-finite interface update", state.t + dt);
      }
      if (!(s_new > kInterfaceFloor)) {
        throw InterfaceCollapseError("step: interface reached floor",
                                     state.t + dt);
      }
      implicit_sweep(state, iterate.u, s_new, s_dot_frozen, flux, dt, c, u_new);
      iterate.u = u_new;
      iterate.s = s_new;
    }
    iterate.t = state.t + dt;
    result.state = std::move(iterate);
  }

  check_finite(result.state, "step");
  result.s_dot = interface_velocity(result.state, c.beta, c.dxi);
  return result;
}

std::vector<Snapshot> run(const Scenario& scenario, SolverState initial,
                          const FluxSource& flux_source, RunOptions options) {
  scenario.validate();
  const SolverConfig config = SolverConfig::from_scenario(scenario);
  check_finite(initial, "run");
  check_alive(initial, "run");

  const double t_end = scenario.t_final;
  const double span = t_end - initial.t;
  if (span < 0.0) throw InvalidParameterError("t_final precedes the initial time");

  std::vector<Snapshot> trace;
  auto record = [&](const SolverState& st, double s_dot, double flux) {
    trace.push_back({st, s_dot, flux});
  };

  {
    const double s_dot0 = interface_velocity(initial, config.beta, config.dxi);
    record(initial, s_dot0, flux_source(initial));
  }
  if (span == 0.0) return trace;

  // Fixed step count for deterministic output. Explicit auto-dt recomputes
  // the stability bound from the current interface each step instead.
  long total_steps = 0;
  double dt_fixed = 0.0;
  const bool auto_dt = !scenario.dt.has_value();
  if (!auto_dt) {
    dt_fixed = *scenario.dt;
    total_steps = static_cast<long>(std::ceil(span / dt_fixed - 1e-9));
  } else if (scenario.integrator == Integrator::Implicit) {
    total_steps = 5000;
    dt_fixed = span / total_steps;
  }

  int stride = options.record_every;
  if (stride <= 0) {
    if (total_steps > 0) {
      stride = static_cast<int>(std::max<long>(1, (total_steps + 3999) / 4000));
    } else {
      stride = 1;  // explicit auto-dt: step count unknown up front
    }
  }

  SolverState state = std::move(initial);
  long step_index = 0;
  while (state.t < t_end - 1e-12 * std::max(1.0, t_end)) {
    double dt;
    if (auto_dt && scenario.integrator == Integrator::Explicit) {
      dt = 0.9 * explicit_dt_bound(state, config);
    } else {
      dt = dt_fixed;
    }
    dt = std::min(dt, t_end - state.t);

    const double flux = flux_source(state);
    StepResult r;
    try {
      r = step(state, flux, dt, config);
    } catch (const StepSizeError& e) {
      throw StepSizeError(std::string(e.what()) + " at t = " +
                          std::to_string(state.t) + " s");
    }
    state = std::move(r.state);
    ++step_index;
    const bool last = !(state.t < t_end - 1e-12 * std::max(1.0, t_end));
    if (step_index % stride == 0 || last) {
      record(state, r.s_dot, flux);
    }
  }
  return trace;
}

std::vector<Snapshot> run(const Scenario& scenario,
                          const FluxSource& flux_source, RunOptions options) {
  InitialProfile profile = build_initial_profile(scenario);
  SolverState state;
  state.u = std::move(profile.values);
  state.s = scenario.s0;
  state.t = 0.0;
  return run(scenario, std::move(state), flux_source, options);
}

}  // namespace stefanctl
