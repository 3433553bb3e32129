#include "stefanctl/controller.hpp"

#include <algorithm>
#include <cmath>

#include "stefanctl/errors.hpp"
#include "stefanctl/numerics.hpp"
#include "stefanctl/transforms.hpp"

namespace stefanctl {

double energy_coordinate(const SolverState& state, double alpha, double beta,
                         double dxi) {
  const double integral = state.s * trapezoid(state.u, dxi);
  return integral / alpha + state.s / beta;
}

ControlInput control_law(const SolverState& state, const Scenario& scenario) {
  const double alpha = scenario.params.alpha();
  const double beta = scenario.params.beta();
  const double e = energy_coordinate(state, alpha, beta, scenario.dxi());
  const double q_c =
      -scenario.gain_c * scenario.params.k * (e - scenario.setpoint_sr / beta);
  return {q_c, e, state.t};
}

double predicted_flux(double t, double q_c0, double c) {
  return q_c0 * std::exp(-c * t);
}

double predicted_energy(double t, const Scenario& scenario, double e0) {
  const double e_inf = scenario.setpoint_sr / scenario.params.beta();
  return e_inf + (e0 - e_inf) * std::exp(-scenario.gain_c * t);
}

ClosedLoopResult run_with_trace(const Scenario& scenario,
                                const FluxSource& flux_source,
                                RunOptions options) {
  scenario.validate();
  const double alpha = scenario.params.alpha();
  const double beta = scenario.params.beta();
  const double dxi = scenario.dxi();
  const TransformParams tp = TransformParams::from_scenario(scenario);

  ClosedLoopResult result;
  result.certificate = decay_certificate(scenario);
  {
    InitialProfile profile = build_initial_profile(scenario);
    result.feasibility = feasible_setpoint(scenario, profile);
  }
  result.eps_rel = eps_tol(scenario.n_cells);

  std::vector<Snapshot> snaps = run(scenario, flux_source, options);

  // Run-level anchors from the initial snapshot.
  {
    const auto& first = snaps.front().state;
    result.q_c0 = snaps.front().flux;
    result.e0 = energy_coordinate(first, alpha, beta, dxi);
    TargetState w0 = direct_transform(first.u, first.s, tp);
    result.v1_0 = lyapunov_v1(w0, result.certificate.p, dxi);
  }
  const double envelope_gain =
      result.v1_0 *
      std::exp(result.certificate.a * (scenario.setpoint_sr - scenario.s0));

  result.records.reserve(snaps.size());
  for (const auto& snap : snaps) {
    const SolverState& st = snap.state;
    TraceRecord rec;
    rec.t = st.t;
    rec.s = st.s;
    rec.s_dot = snap.s_dot;
    rec.q_c = snap.flux;
    rec.q_c_predicted = predicted_flux(st.t, result.q_c0, scenario.gain_c);
    rec.energy_e = energy_coordinate(st, alpha, beta, dxi);
    rec.energy_predicted = predicted_energy(st.t, scenario, result.e0);
    rec.l2_sq = l2_norm_sq(st.u, st.s, dxi);
    rec.h1_sq = h1_norm_sq(st.u, st.s, dxi);
    rec.x_sq = (st.s - scenario.setpoint_sr) * (st.s - scenario.setpoint_sr);

    TargetState w = direct_transform(st.u, st.s, tp);
    rec.v1 = lyapunov_v1(w, result.certificate.p, dxi);
    rec.v = rec.v1 * std::exp(-result.certificate.a * st.s);
    rec.envelope_bound = envelope_gain * std::exp(-result.certificate.b * st.t);
    rec.w_interface_abs = std::abs(w.w.back());
    rec.wx_origin_abs = std::abs(d1_left(w.w, dxi) / st.s);

    rec.min_u = *std::min_element(st.u.begin(), st.u.end());
    const ConstraintFlags flags = constraint_monitor(
        snap.flux, snap.s_dot, st.s, rec.min_u, scenario, result.eps_rel);
    rec.flag_qc = flags.qc_ok;
    rec.flag_sdot = flags.sdot_ok;
    rec.flag_band = flags.band_ok;
    rec.flag_temp = flags.temp_ok;

    result.records.push_back(std::move(rec));
  }
  return result;
}

ClosedLoopResult closed_loop_run(const Scenario& scenario, RunOptions options) {
  if (scenario.bc_mode != BcMode::ControlledFlux) {
    throw InvalidParameterError("closed_loop_run requires controlled-flux mode");
  }
  FluxSource feedback = [&scenario](const SolverState& state) {
    return control_law(state, scenario).q_c;
  };
  return run_with_trace(scenario, feedback, options);
}

}  // namespace stefanctl
