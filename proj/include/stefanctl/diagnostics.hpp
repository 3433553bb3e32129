#pragma once

#include <optional>
#include <span>

#include "stefanctl/core.hpp"
#include "stefanctl/trace.hpp"
#include "stefanctl/transforms.hpp"

namespace stefanctl {

/// int_0^s u^2 dx by the shared trapezoid rule.
double l2_norm_sq(std::span<const double> u, double s, double dxi);

/// int_0^s u^2 dx + int_0^s u_x^2 dx with u_x = u_xi / s from the solver's
/// difference operator.
double h1_norm_sq(std::span<const double> u, double s, double dxi);

/// Lyapunov functional of the target system:
/// (1/2) int w^2 + (1/2) int w_x^2 + (p/2) X^2.
double lyapunov_v1(const TargetState& target, double p, double dxi);

/// Concrete constants that turn the Lyapunov argument into checkable
/// per-trajectory inequalities.
struct DecayCertificate {
  double p = 0.0;        ///< Lyapunov weight on X^2
  double p_upper = 0.0;  ///< open upper bound c alpha / (beta^2 s_r)
  double a = 0.0;        ///< exponent weight [1/m]
  double b = 0.0;        ///< decay rate [1/s]
  double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
  double m5 = 0.0, m6 = 0.0, m7 = 0.0, m8 = 0.0;
  double delta_bar = 0.0;    ///< upper norm-equivalence constant
  double delta_under = 0.0;  ///< lower norm-equivalence constant
  double big_d = 0.0;        ///< overall constant D
};

/// Evaluates every certificate constant from its closed form. p defaults
/// to half its upper bound; an override outside (0, bound) or one that
/// drives b <= 0 throws CertificateError.
DecayCertificate decay_certificate(const Scenario& scenario,
                                   std::optional<double> p_override = {});

/// Physical-constraint flags for one trace record, with violation
/// magnitudes (0 when the flag passes).
struct ConstraintFlags {
  bool qc_ok = true;
  bool sdot_ok = true;
  bool band_ok = true;
  bool temp_ok = true;
  double qc_violation = 0.0;
  double sdot_violation = 0.0;
  double band_violation = 0.0;
  double temp_violation = 0.0;
  bool all_ok() const { return qc_ok && sdot_ok && band_ok && temp_ok; }
};

/// Characteristic magnitudes used to scale the relative tolerance into
/// per-quantity thresholds.
struct MonitorScales {
  double temp;   ///< [K] initial superheat scale H s0
  double q_c;    ///< [W/m^2] k * temp / s0
  double s_dot;  ///< [m/s] beta * temp / s0
  double band;   ///< [m] setpoint scale s_r
};

MonitorScales monitor_scales(const Scenario& scenario);

/// Relative discretization tolerance: 10 * C * dxi^2 with C calibrated
/// from the refinement studies in the test suite.
double eps_tol(int n_cells);

ConstraintFlags constraint_monitor(double q_c, double s_dot, double s,
                                   double min_u, const Scenario& scenario,
                                   double eps_rel);

/// Convenience overload over an assembled record.
ConstraintFlags constraint_monitor(const TraceRecord& record,
                                   const Scenario& scenario, double eps_rel);

/// Unique positive root of lambda e^{lambda^2} erf(lambda) = St/sqrt(pi),
/// bisected to 1e-12 relative width. Throws InvalidParameterError for
/// non-positive Stefan numbers.
double neumann_lambda(double stefan_number);

/// Similarity-solution interface position s(t) = 2 lambda sqrt(alpha t).
double neumann_interface(double stefan_number, double alpha, double t);

}  // namespace stefanctl
