#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "stefanctl/controller.hpp"
#include "stefanctl/errors.hpp"
#include "stefanctl/numerics.hpp"
#include "stefanctl/solver.hpp"
#include "test_helpers.hpp"

using namespace stefanctl;
using stefanctl::testing::zinc_feasible;

namespace {

SolverState linear_state(const Scenario& sc, double s) {
  SolverState st;
  st.s = s;
  st.t = 0.0;
  st.u.resize(sc.n_cells + 1);
  for (int i = 0; i <= sc.n_cells; ++i) {
    const double xi = static_cast<double>(i) / sc.n_cells;
    st.u[i] = sc.h_slope * s * (1.0 - xi);
  }
  st.u.back() = 0.0;
  return st;
}

/// Exact traveling-wave material: alpha = 1e-3, beta = 2e-3, front speed
/// sdot0 = beta * Hw with Hw = 1, so u = (alpha Hw / sdot0)(e^{sdot0 (s-x)/alpha} - 1).
struct TravelingWave {
  Scenario scenario;
  double sdot0 = 2e-3;
  double h_wall = 1.0;

  TravelingWave(int n, double dt) {
    scenario.params = {1.0, 1.0, 1e-3, 0.5, 1.0};  // alpha = 1e-3, beta = 2e-3
    scenario.gain_c = 0.01;
    scenario.setpoint_sr = 0.2;
    scenario.s0 = 0.05;
    scenario.h_slope = 0.0;
    scenario.n_cells = n;
    scenario.dt = dt;
    scenario.t_final = 20.0;
    scenario.bc_mode = BcMode::PrescribedFlux;
  }

  double exact_s(double t) const { return scenario.s0 + sdot0 * t; }

  double exact_u(double x, double t) const {
    const double alpha = scenario.params.alpha();
    return alpha * h_wall / sdot0 *
           (std::exp(sdot0 * (exact_s(t) - x) / alpha) - 1.0);
  }

  double exact_flux(double t) const {
    const double alpha = scenario.params.alpha();
    return scenario.params.k * h_wall * std::exp(sdot0 * exact_s(t) / alpha);
  }

  SolverState initial() const {
    SolverState st;
    st.s = scenario.s0;
    st.t = 0.0;
    st.u.resize(scenario.n_cells + 1);
    for (int i = 0; i <= scenario.n_cells; ++i) {
      const double xi = static_cast<double>(i) / scenario.n_cells;
      st.u[i] = exact_u(xi * st.s, 0.0);
    }
    st.u.back() = 0.0;
    return st;
  }
};

}  // namespace

TEST_CASE("equilibrium state has a zero right-hand side") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 32;
  SolverState st;
  st.u.assign(33, 0.0);
  st.s = 0.1;
  const SolverConfig cfg = SolverConfig::from_scenario(sc);
  const RhsResult rhs = immobilized_rhs(st, 0.0, cfg);
  CHECK(rhs.s_dot == 0.0);
  for (double v : rhs.du_dt) CHECK(v == 0.0);
}

TEST_CASE("linear profile: zero curvature, Stefan velocity beta*H") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 64;
  const SolverConfig cfg = SolverConfig::from_scenario(sc);
  const SolverState st = linear_state(sc, sc.s0);
  const double beta = sc.params.beta();

  // The one-sided stencil is exact on linear data.
  const double sdot = interface_velocity(st, beta, cfg.dxi);
  CHECK(sdot == doctest::Approx(beta * sc.h_slope).epsilon(1e-12));

  // With the compatible flux q = k*H the ghost closure is consistent and
  // only the advection term survives: du/dt = -xi * sdot * H.
  const double flux = sc.params.k * sc.h_slope;
  const RhsResult rhs = immobilized_rhs(st, flux, cfg);
  CHECK(rhs.s_dot == doctest::Approx(beta * sc.h_slope).epsilon(1e-12));
  for (int i = 0; i < sc.n_cells; ++i) {
    const double xi = static_cast<double>(i) / sc.n_cells;
    const double expected = -xi * sdot * sc.h_slope;
    CHECK(rhs.du_dt[i] ==
          doctest::Approx(expected).epsilon(1e-9).scale(std::abs(expected) + 1.0));
  }
  CHECK(rhs.du_dt.back() == 0.0);
}

TEST_CASE("trivial step leaves the equilibrium untouched") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 16;
  SolverState st;
  st.u.assign(17, 0.0);
  st.s = 0.05;
  for (auto integ : {Integrator::Explicit, Integrator::Implicit}) {
    SolverConfig cfg = SolverConfig::from_scenario(sc);
    cfg.integrator = integ;
    const double dt = integ == Integrator::Explicit ? 1e-5 : 0.5;
    const StepResult r = step(st, 0.0, dt, cfg);
    CHECK(r.s_dot == 0.0);
    CHECK(r.state.s == st.s);
    for (double v : r.state.u) CHECK(v == 0.0);
  }
}

TEST_CASE("explicit stepping enforces the stability bound") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 32;
  SolverConfig cfg = SolverConfig::from_scenario(sc);
  cfg.integrator = Integrator::Explicit;
  const SolverState st = linear_state(sc, sc.s0);
  const double bound = cfg.cfl * st.s * st.s * cfg.dxi * cfg.dxi / (2.0 * cfg.alpha);
  CHECK_THROWS_AS(step(st, 0.0, 2.0 * bound, cfg), StepSizeError);
  CHECK_NOTHROW(step(st, 0.0, 0.5 * bound, cfg));
}

TEST_CASE("non-finite input is reported as divergence") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 16;
  SolverConfig cfg = SolverConfig::from_scenario(sc);
  const SolverState st = linear_state(sc, sc.s0);
  CHECK_THROWS_AS(step(st, std::numeric_limits<double>::quiet_NaN(), 0.01, cfg),
                  DivergenceError);
}

TEST_CASE("interface floor aborts instead of dividing by zero") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 16;
  const SolverConfig cfg = SolverConfig::from_scenario(sc);
  SolverState st = linear_state(sc, sc.s0);
  st.s = 1e-7;
  CHECK_THROWS_AS(immobilized_rhs(st, 0.0, cfg), InterfaceCollapseError);
  CHECK_THROWS_AS(step(st, 0.0, 0.01, cfg), InterfaceCollapseError);
}

TEST_CASE("positive constant flux melts monotonically") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 100;
  sc.bc_mode = BcMode::PrescribedFlux;
  sc.dt = 0.01;
  sc.t_final = 10.0;
  auto snaps = run(sc, [](const SolverState&) { return 2.5e6; },
                   RunOptions{1});
  REQUIRE(snaps.size() > 10);
  double min_u = 0.0;
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    CHECK(snaps[i].state.s > snaps[i - 1].state.s);  // strict advance
    CHECK(snaps[i].state.u.back() == 0.0);
    for (double v : snaps[i].state.u) min_u = std::min(min_u, v);
  }
  CHECK(min_u >= -1e-9);  // discrete comparison principle
}

TEST_CASE("traveling wave: the manufactured solution satisfies the plant") {
  // Residual check of the exact solution against the semi-discrete operator
  // before it is used as an oracle: second-order in dxi.
  auto residual = [](int n) {
    TravelingWave tw(n, 0.01);
    const SolverConfig cfg = SolverConfig::from_scenario(tw.scenario);
    const SolverState st = tw.initial();
    const RhsResult rhs = immobilized_rhs(st, tw.exact_flux(0.0), cfg);
    // Analytic du/dt at fixed xi: u_t + xi sdot u_x... the grid carries
    // u(xi s, t), so d/dt u_i = u_t + xi sdot0 u_x = sdot0 Hw e^{...} (1 - xi).
    double worst = 0.0;
    for (int i = 1; i < n; ++i) {
      const double xi = static_cast<double>(i) / n;
      const double x = xi * st.s;
      const double ex = std::exp(tw.sdot0 * (st.s - x) / tw.scenario.params.alpha());
      const double exact = tw.sdot0 * tw.h_wall * ex * (1.0 - xi);
      worst = std::max(worst, std::abs(rhs.du_dt[i] - exact));
    }
    const double sdot_err = std::abs(rhs.s_dot - tw.sdot0);
    return std::max(worst, sdot_err);
  };
  const double r1 = residual(50);
  const double r2 = residual(100);
  CHECK(r2 < 1e-4);
  CHECK(r1 / r2 > 3.0);
  CHECK(r1 / r2 < 5.0);
}

TEST_CASE("traveling wave: interface path converges at second order") {
  auto path_error = [](int n, double dt) {
    TravelingWave tw(n, dt);
    auto flux = [&tw](const SolverState& st) { return tw.exact_flux(st.t); };
    auto snaps = run(tw.scenario, tw.initial(), flux, RunOptions{1});
    double worst = 0.0;
    for (const auto& snap : snaps) {
      worst = std::max(worst, std::abs(snap.state.s - tw.exact_s(snap.state.t)));
    }
    return worst;
  };
  const double e1 = path_error(50, 0.04);
  const double e2 = path_error(100, 0.01);  // dxi/2, dt/4
  CHECK(e2 < 1e-5);
  CHECK(e1 / e2 > 3.0);
}

TEST_CASE("discrete energy balance residual shrinks at the scheme order") {
  // E = (1/alpha) int u dx + s/beta obeys dE/dt = q_c/k up to truncation.
  Scenario sc = zinc_feasible();
  sc.bc_mode = BcMode::PrescribedFlux;
  const double q = 1.0e6;
  auto worst_residual = [&](int n, double dt) {
    Scenario s2 = sc;
    s2.n_cells = n;
    s2.dt = dt;
    s2.t_final = 5.0;
    auto snaps = run(s2, [&](const SolverState&) { return q; }, RunOptions{1});
    const double alpha = s2.params.alpha();
    const double beta = s2.params.beta();
    double worst = 0.0;
    for (std::size_t i = 1; i < snaps.size(); ++i) {
      const double e0 =
          energy_coordinate(snaps[i - 1].state, alpha, beta, s2.dxi());
      const double e1 = energy_coordinate(snaps[i].state, alpha, beta, s2.dxi());
      const double step_dt = snaps[i].state.t - snaps[i - 1].state.t;
      worst = std::max(worst,
                       std::abs(e1 - e0 - snaps[i].flux / s2.params.k * step_dt));
    }
    return worst;
  };
  const double r1 = worst_residual(50, 0.02);
  const double r2 = worst_residual(100, 0.005);
  CHECK(r1 / r2 > 3.0);
}

TEST_CASE("interface path is grid-independent at second order") {
  Scenario sc = zinc_feasible();
  sc.bc_mode = BcMode::PrescribedFlux;
  sc.dt = 0.02;
  sc.t_final = 10.0;
  auto final_s = [&](int n) {
    Scenario s2 = sc;
    s2.n_cells = n;
    auto snaps = run(s2, [](const SolverState&) { return 2.0e6; });
    return snaps.back().state.s;
  };
  const double s1 = final_s(50);
  const double s2 = final_s(100);
  const double s3 = final_s(200);
  CHECK(std::abs(s1 - s2) / std::abs(s2 - s3) > 3.0);
}

TEST_CASE("zero-horizon run returns the initial record only") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 16;
  sc.t_final = 0.0;
  auto snaps = run(sc, [](const SolverState&) { return 0.0; });
  REQUIRE(snaps.size() == 1);
  CHECK(snaps[0].state.t == 0.0);
  CHECK(snaps[0].state.s == sc.s0);
}

TEST_CASE("zero flux and zero superheat stay frozen") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 16;
  sc.h_slope = 0.0;
  sc.dt = 0.5;
  sc.t_final = 10.0;
  sc.bc_mode = BcMode::PrescribedFlux;
  auto snaps = run(sc, [](const SolverState&) { return 0.0; }, RunOptions{1});
  for (const auto& snap : snaps) {
    CHECK(snap.state.s == sc.s0);
    for (double v : snap.state.u) CHECK(v == 0.0);
  }
}

TEST_CASE("explicit automatic dt tracks the stability bound") {
  Scenario sc = zinc_feasible();
  sc.n_cells = 24;
  sc.integrator = Integrator::Explicit;
  sc.bc_mode = BcMode::PrescribedFlux;
  sc.t_final = 0.02;
  auto snaps = run(sc, [](const SolverState&) { return 1.0e6; });
  CHECK(snaps.back().state.t == doctest::Approx(0.02));
  CHECK(snaps.back().state.s >= sc.s0);
}
