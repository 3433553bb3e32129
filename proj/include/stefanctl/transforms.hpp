#pragma once

#include <span>
#include <vector>

#include "stefanctl/core.hpp"
#include "stefanctl/solver.hpp"

namespace stefanctl {

struct TransformParams {
  double c;
  double alpha;
  double beta;
  double s_r;

  static TransformParams from_scenario(const Scenario& scenario) {
    return {scenario.gain_c, scenario.params.alpha(), scenario.params.beta(),
            scenario.setpoint_sr};
  }
};

/// Transformed state on the immobilized grid plus the interface error
/// X = s - s_r. w vanishes at the interface node whenever u does.
struct TargetState {
  std::vector<double> w;
  double x_err = 0.0;
  double s = 0.0;
};

/// Maps the plant state into the target system:
///   w(x) = u(x) + (c/alpha) int_x^s (y-x) u(y) dy + (c/beta)(s-x) X.
/// Inner integrals use the trapezoid rule restricted to nodes >= x.
TargetState direct_transform(std::span<const double> u, double s,
                             const TransformParams& p);

/// Maps the target state back with the closed-form trigonometric kernels:
///   u(x) = w(x) - (sqrt(c a)/b) sin(q (s-x)) X
///          - int_x^s q sin(q (y-x)) w(y) dy,  q = sqrt(c/alpha).
std::vector<double> inverse_transform(std::span<const double> w, double x_err,
                                      const TransformParams& p);

/// Closed-form inverse-transformation kernels and their derivatives.
struct KernelSet {
  double c;
  double alpha;
  double beta;

  double wavenumber() const;            ///< q = sqrt(c/alpha)
  double h(double r) const;             ///< -(sqrt(c alpha)/beta) sin(q r)
  double h_prime(double r) const;       ///< -(c/beta) cos(q r)
  double h_second(double r) const;      ///< (c/beta) q sin(q r)
  double l(double y_minus_x) const;     ///< -q sin(q (y-x))
  double l_integral(double x, double s) const;  ///< int_x^s l dy = cos(q(s-x)) - 1
};

/// Max absolute residual of each kernel condition, sampled at n points.
/// Entries suffixed _fd / _quadrature replace a closed form with a
/// second-order finite difference or the trapezoid rule; fd_step is the
/// step used for those.
struct KernelResidualReport {
  double h_ode;              ///< alpha h'' + c h (closed-form second derivative)
  double h_ode_fd;           ///< same with a centered-difference h''
  double h_value_origin;     ///< h(0)
  double h_slope_origin;     ///< h'(0) + c/beta (closed form)
  double h_slope_origin_fd;  ///< same with a centered-difference h'
  double l_wave_fd;          ///< l_xx - l_yy, both by centered differences
  double l_diagonal_fd;      ///< d/dx l(x,x) by centered difference
  double flux_compat;        ///< (c/beta)(1 + int_x^s l dy) + h'(s-x), closed form
  double flux_compat_quadrature;  ///< same with a trapezoid integral
  double interface_relation;      ///< alpha l(x,s) - beta h(s-x)
  double fd_step;
  int quadrature_nodes;
};

KernelResidualReport kernel_residuals(const KernelSet& kernels, double s,
                                      int n_samples);

/// Residuals of the target-system equations along consecutive solver
/// snapshots at uniform dt (at least 3). Time derivatives use centered
/// differences over the stored snapshots; the interface velocity is the
/// solver's discrete one, re-evaluated per snapshot.
struct TargetResidualReport {
  double max_pde;          ///< w_t - alpha w_xx - (c/beta) s_dot X, interior nodes
  double max_ode;          ///< X_dot + c X + beta w_x(s)
  double max_w_interface;  ///< |w| at the interface node
  double max_wx_origin;    ///< |w_x| at x = 0 (one-sided difference)
};

TargetResidualReport target_residual(std::span<const SolverState> states,
                                     const Scenario& scenario);

}  // namespace stefanctl
