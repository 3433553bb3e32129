#include "stefanctl/core.hpp"

#include <cmath>

#include "stefanctl/errors.hpp"
#include "stefanctl/numerics.hpp"

namespace stefanctl {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidParameterError(std::string(name) + " must be strictly positive");
  }
}

}  // namespace

void PhysicalParams::validate() const {
  require_positive(rho, "rho");
  require_positive(cp, "cp");
  require_positive(k, "k");
  require_positive(dh, "dh");
  require_positive(t_melt, "t_melt");
  require_positive(alpha(), "alpha");
  require_positive(beta(), "beta");
}

Coefficients derive_coefficients(const PhysicalParams& params) {
  params.validate();
  return {params.alpha(), params.beta()};
}

void Scenario::validate() const {
  params.validate();
  require_positive(gain_c, "gain_c");
  require_positive(s0, "s0");
  require_positive(setpoint_sr, "setpoint_sr");
  require_positive(t_final + 1.0, "t_final + 1");  // t_final >= 0
  if (t_final < 0.0) throw InvalidParameterError("t_final must be >= 0");
  if (h_slope < 0.0) throw InvalidParameterError("h_slope must be >= 0");
  if (n_cells < 8) throw InvalidParameterError("n_cells must be >= 8");
  if (dt && !(*dt > 0.0)) throw InvalidParameterError("dt must be positive or auto");
  if (bc_mode == BcMode::ControlledFlux) {
    // Equality admits the closed-loop equilibrium s0 = s_r, u0 = 0.
    if (!(s0 <= setpoint_sr)) {
      throw InvalidParameterError("controlled-flux mode requires s0 <= setpoint_sr");
    }
    if (!(setpoint_sr <= length())) {
      throw InvalidParameterError("setpoint_sr must not exceed domain_length");
    }
  }
}

InitialProfile build_initial_profile(const Scenario& scenario) {
  scenario.validate();
  const int n = scenario.n_cells;
  InitialProfile profile;
  profile.values.resize(n + 1);
  // u0(xi) = H (s0 - xi s0): this exact arithmetic keeps the bound
  // u0 <= H (s0 - x) an identity on the grid, not just a near-equality.
  for (int i = 0; i <= n; ++i) {
    const double xi = static_cast<double>(i) / n;
    profile.values[i] = scenario.h_slope * (scenario.s0 - xi * scenario.s0);
  }
  profile.values[n] = 0.0;
  return profile;
}

FeasibilityVerdict feasible_setpoint(const Scenario& scenario,
                                     const InitialProfile& profile) {
  // int_0^s0 u0 dx = s0 * int_0^1 u0 dxi on the immobilized grid.
  const double integral =
      scenario.s0 * trapezoid(profile.values, scenario.dxi());
  const double bound =
      scenario.s0 + scenario.params.cp / scenario.params.dh * integral;
  const double margin = scenario.setpoint_sr - bound;
  return {margin > 0.0, margin, bound};
}

}  // namespace stefanctl
