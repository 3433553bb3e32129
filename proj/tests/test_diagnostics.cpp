#include <doctest.h>

#include <cmath>
#include <random>

#include "stefanctl/diagnostics.hpp"
#include "stefanctl/errors.hpp"
#include "test_helpers.hpp"

using namespace stefanctl;
using stefanctl::testing::zinc_feasible;

TEST_CASE("norms of the zero profile vanish") {
  std::vector<double> u(65, 0.0);
  CHECK(l2_norm_sq(u, 0.3, 1.0 / 64) == 0.0);
  CHECK(h1_norm_sq(u, 0.3, 1.0 / 64) == 0.0);
}

TEST_CASE("norms of the linear profile match their closed forms") {
  // u = H (s - x): int u^2 = H^2 s^3 / 3, int u_x^2 = H^2 s.
  const double h_slope = 1e4, s = 0.01;
  const int n = 200;
  std::vector<double> u(n + 1);
  for (int i = 0; i <= n; ++i) {
    u[i] = h_slope * s * (1.0 - static_cast<double>(i) / n);
  }
  const double dxi = 1.0 / n;
  const double l2 = l2_norm_sq(u, s, dxi);
  CHECK(l2 == doctest::Approx(h_slope * h_slope * s * s * s / 3.0).epsilon(5e-5));
  const double h1 = h1_norm_sq(u, s, dxi);
  const double expected = h_slope * h_slope * (s * s * s / 3.0 + s);
  CHECK(h1 == doctest::Approx(expected).epsilon(5e-5));

  // Quadratic homogeneity: doubling u quadruples both norms.
  std::vector<double> u2 = u;
  for (auto& v : u2) v *= 2.0;
  CHECK(l2_norm_sq(u2, s, dxi) == doctest::Approx(4.0 * l2).epsilon(1e-12));
  CHECK(h1_norm_sq(u2, s, dxi) == doctest::Approx(4.0 * h1).epsilon(1e-12));
}

TEST_CASE("lyapunov functional closed-form cases") {
  TargetState target;
  target.w.assign(33, 0.0);
  target.s = 0.3;
  target.x_err = 0.0;
  CHECK(lyapunov_v1(target, 1.0, 1.0 / 32) == 0.0);
  target.x_err = 1.0;
  CHECK(lyapunov_v1(target, 2.0, 1.0 / 32) == doctest::Approx(1.0));
  CHECK_THROWS_AS(lyapunov_v1(target, 0.0, 1.0 / 32), InvalidParameterError);
}

TEST_CASE("decay certificate for the zinc scenario") {
  const DecayCertificate c = decay_certificate(zinc_feasible());
  // All digits recomputed independently from the Table-of-properties
  // arithmetic (see the closed forms in the module docs).
  CHECK(c.p_upper == doctest::Approx(52070148.645142882).epsilon(1e-10));
  CHECK(c.p == doctest::Approx(26035074.322571441).epsilon(1e-10));
  CHECK(c.a == doctest::Approx(1.43698659568903).epsilon(1e-10));
  CHECK(c.b == doctest::Approx(6.08348288849602e-5).epsilon(1e-10));
  CHECK(c.m1 == doctest::Approx(2090.31025072317).epsilon(1e-10));
  CHECK(c.m2 == doctest::Approx(172406021.999278).epsilon(1e-10));
  CHECK(c.m3 == doctest::Approx(51117.8020585267).epsilon(1e-10));
  CHECK(c.m4 == doctest::Approx(4222188293.85987).epsilon(1e-10));
  CHECK(c.m5 == doctest::Approx(46.7664290514548).epsilon(1e-10));
  CHECK(c.m6 == doctest::Approx(10328529.5065547).epsilon(1e-10));
  CHECK(c.m7 == doctest::Approx(8234.44599541894).epsilon(1e-10));
  CHECK(c.m8 == doctest::Approx(1943263827.48352).epsilon(1e-10));
  CHECK(c.delta_bar == doctest::Approx(4420629390.18172).epsilon(1e-10));
  CHECK(c.delta_under == doctest::Approx(5.11877514216342e-10).epsilon(1e-10));
  CHECK(c.big_d == doctest::Approx(1.42805333124037e19).epsilon(1e-10));
}

TEST_CASE("certificate guards the p interval") {
  const Scenario sc = zinc_feasible();
  const DecayCertificate base = decay_certificate(sc);
  CHECK_THROWS_AS(decay_certificate(sc, base.p_upper), CertificateError);
  CHECK_THROWS_AS(decay_certificate(sc, -1.0), CertificateError);
  // Near the boundary b collapses toward min{2a/(4sr^2+1), 0+}.
  const DecayCertificate near = decay_certificate(sc, base.p_upper * 0.999999);
  CHECK(near.b > 0.0);
  CHECK(near.b < base.b);
}

TEST_CASE("M2 reduces to one in the unit case") {
  Scenario sc;
  sc.params = {1.0, 1.0, 1.0, 1.0, 1.0};  // alpha = beta = 1
  sc.gain_c = 1.0;
  sc.setpoint_sr = 1.0;
  sc.s0 = 0.5;
  sc.h_slope = 0.0;
  sc.t_final = 1.0;
  sc.domain_length = 2.0;
  const DecayCertificate c = decay_certificate(sc);
  CHECK(c.m2 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("certificate constants are strictly positive for valid scenarios") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    Scenario sc;
    sc.params = {dist(rng) * 1000.0, dist(rng) * 100.0, dist(rng) * 50.0,
                 dist(rng) * 1e5, 500.0};
    sc.gain_c = dist(rng) * 0.01;
    sc.setpoint_sr = dist(rng) * 0.1;
    sc.s0 = sc.setpoint_sr * 0.5;
    sc.h_slope = 0.0;
    sc.t_final = 1.0;
    const DecayCertificate c = decay_certificate(sc);
    for (double v : {c.p, c.a, c.b, c.m1, c.m2, c.m3, c.m4, c.m5, c.m6, c.m7,
                     c.m8, c.delta_bar, c.delta_under, c.big_d}) {
      CHECK(v > 0.0);
    }
  }
}

TEST_CASE("constraint monitor accepts equilibrium and reports violations") {
  const Scenario sc = zinc_feasible();
  const double eps = eps_tol(sc.n_cells);

  const ConstraintFlags ok =
      constraint_monitor(0.0, 0.0, sc.setpoint_sr, 0.0, sc, eps);
  CHECK(ok.all_ok());
  CHECK(ok.qc_violation == 0.0);

  const ConstraintFlags bad =
      constraint_monitor(-1e6, -1e-3, sc.setpoint_sr + 0.05, -50.0, sc, eps);
  CHECK_FALSE(bad.qc_ok);
  CHECK_FALSE(bad.sdot_ok);
  CHECK_FALSE(bad.band_ok);
  CHECK_FALSE(bad.temp_ok);
  CHECK(bad.qc_violation > 0.0);
  CHECK(bad.band_violation == doctest::Approx(0.05).epsilon(1e-2));
}

TEST_CASE("monitor thresholds scale with the scenario magnitudes") {
  const Scenario sc = zinc_feasible();
  const MonitorScales scales = monitor_scales(sc);
  CHECK(scales.temp == doctest::Approx(100.0));
  CHECK(scales.q_c == doctest::Approx(116.0 * 100.0 / 0.01));
  CHECK(scales.s_dot ==
        doctest::Approx(sc.params.beta() * 100.0 / 0.01).epsilon(1e-12));
  CHECK(scales.band == doctest::Approx(0.35));
}

TEST_CASE("eps_tol scales with the square of the grid spacing") {
  CHECK(eps_tol(200) > 0.0);
  CHECK(eps_tol(100) == doctest::Approx(4.0 * eps_tol(200)).epsilon(1e-12));
}

TEST_CASE("similarity-solution root") {
  const double lam = neumann_lambda(0.2);
  CHECK(lam == doctest::Approx(0.306423905361211).epsilon(1e-9));
  // Root-finder contract: the defining equation is met to 1e-10.
  const double residual =
      lam * std::exp(lam * lam) * std::erf(lam) - 0.2 / std::sqrt(M_PI);
  CHECK(std::abs(residual) < 1e-10);

  // Vanishing superheat: no melting.
  CHECK(neumann_lambda(1e-12) < 1e-5);
  CHECK(neumann_interface(1e-12, 4.5e-5, 100.0) < 1e-6);

  CHECK_THROWS_AS(neumann_lambda(0.0), InvalidParameterError);
  CHECK_THROWS_AS(neumann_lambda(-0.5), InvalidParameterError);
}
