#include "stefanctl/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "stefanctl/errors.hpp"
#include "stefanctl/numerics.hpp"

namespace stefanctl {

TargetState direct_transform(std::span<const double> u, double s,
                             const TransformParams& p) {
  const std::size_t m = u.size();
  const double dxi = 1.0 / static_cast<double>(m - 1);
  const double x_err = s - p.s_r;

  // int_x^s (y-x) u dy = s^2 [ int_xi^1 eta u deta - xi int_xi^1 u deta ];
  // both suffix integrals reduce to trapezoid sums over nodes >= xi.
  std::vector<double> eta_u(m);
  for (std::size_t i = 0; i < m; ++i) {
    eta_u[i] = (static_cast<double>(i) * dxi) * u[i];
  }
  std::vector<double> suf_u(m), suf_eta_u(m);
  suffix_trapezoid(u, dxi, suf_u);
  suffix_trapezoid(eta_u, dxi, suf_eta_u);

  TargetState out;
  out.x_err = x_err;
  out.s = s;
  out.w.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double xi = static_cast<double>(i) * dxi;
    const double inner = s * s * (suf_eta_u[i] - xi * suf_u[i]);
    out.w[i] = u[i] + (p.c / p.alpha) * inner +
               (p.c / p.beta) * s * (1.0 - xi) * x_err;
  }
  return out;
}

std::vector<double> inverse_transform(std::span<const double> w, double x_err,
                                      const TransformParams& p) {
  const std::size_t m = w.size();
  const double dxi = 1.0 / static_cast<double>(m - 1);
  const double s = x_err + p.s_r;
  const double q = std::sqrt(p.c / p.alpha);
  const double gain = std::sqrt(p.c * p.alpha) / p.beta;

  // sin(q s (eta - xi)) = sin(q s eta) cos(q s xi) - cos(q s eta) sin(q s xi),
  // so the kernel integral splits into two suffix trapezoid sums.
  std::vector<double> sin_w(m), cos_w(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double arg = q * s * static_cast<double>(i) * dxi;
    sin_w[i] = std::sin(arg) * w[i];
    cos_w[i] = std::cos(arg) * w[i];
  }
  std::vector<double> suf_sin(m), suf_cos(m);
  suffix_trapezoid(sin_w, dxi, suf_sin);
  suffix_trapezoid(cos_w, dxi, suf_cos);

  std::vector<double> u(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double xi = static_cast<double>(i) * dxi;
    const double integral =
        s * q * (std::cos(q * s * xi) * suf_sin[i] - std::sin(q * s * xi) * suf_cos[i]);
    u[i] = w[i] - gain * std::sin(q * s * (1.0 - xi)) * x_err - integral;
  }
  return u;
}

double KernelSet::wavenumber() const { return std::sqrt(c / alpha); }

double KernelSet::h(double r) const {
  return -(std::sqrt(c * alpha) / beta) * std::sin(wavenumber() * r);
}

double KernelSet::h_prime(double r) const {
  return -(c / beta) * std::cos(wavenumber() * r);
}

double KernelSet::h_second(double r) const {
  return (c / beta) * wavenumber() * std::sin(wavenumber() * r);
}

double KernelSet::l(double y_minus_x) const {
  const double q = wavenumber();
  return -q * std::sin(q * y_minus_x);
}

double KernelSet::l_integral(double x, double s) const {
  return std::cos(wavenumber() * (s - x)) - 1.0;
}

KernelResidualReport kernel_residuals(const KernelSet& kernels, double s,
                                      int n_samples) {
  if (!(s > 0.0)) throw InvalidParameterError("kernel_residuals needs s > 0");
  if (n_samples < 2) throw InvalidParameterError("n_samples must be >= 2");

  const double delta = 1e-4 * s;  // finite-difference step
  const int quad_nodes = 256;

  KernelResidualReport rep{};
  rep.fd_step = delta;
  rep.quadrature_nodes = quad_nodes;

  auto fd_second = [&](double r) {
    return (kernels.h(r + delta) - 2.0 * kernels.h(r) + kernels.h(r - delta)) /
           (delta * delta);
  };

  for (int j = 0; j < n_samples; ++j) {
    const double x = s * static_cast<double>(j) / (n_samples - 1);
    const double r = s - x;

    rep.h_ode = std::max(rep.h_ode, std::abs(kernels.alpha * kernels.h_second(r) +
                                             kernels.c * kernels.h(r)));
    rep.h_ode_fd = std::max(rep.h_ode_fd, std::abs(kernels.alpha * fd_second(r) +
                                                   kernels.c * kernels.h(r)));

    // Wave equation l_xx = l_yy; l depends on y - x only, so differentiate
    // the scalar kernel in each argument separately.
    const double y = x + 0.5 * (s - x);
    auto l2 = [&](double xx, double yy) { return kernels.l(yy - xx); };
    const double lxx = (l2(x + delta, y) - 2.0 * l2(x, y) + l2(x - delta, y)) /
                       (delta * delta);
    const double lyy = (l2(x, y + delta) - 2.0 * l2(x, y) + l2(x, y - delta)) /
                       (delta * delta);
    rep.l_wave_fd = std::max(rep.l_wave_fd, std::abs(lxx - lyy));

    const double diag = (l2(x + delta, x + delta) - l2(x - delta, x - delta)) /
                        (2.0 * delta);
    rep.l_diagonal_fd = std::max(rep.l_diagonal_fd, std::abs(diag));

    rep.flux_compat =
        std::max(rep.flux_compat,
                 std::abs(kernels.c / kernels.beta * (1.0 + kernels.l_integral(x, s)) +
                          kernels.h_prime(r)));

    std::vector<double> lv(quad_nodes + 1);
    for (int i = 0; i <= quad_nodes; ++i) {
      const double yy = x + (s - x) * static_cast<double>(i) / quad_nodes;
      lv[i] = kernels.l(yy - x);
    }
    const double l_quad = trapezoid(lv, (s - x) / quad_nodes);
    rep.flux_compat_quadrature =
        std::max(rep.flux_compat_quadrature,
                 std::abs(kernels.c / kernels.beta * (1.0 + l_quad) +
                          kernels.h_prime(r)));

    rep.interface_relation =
        std::max(rep.interface_relation,
                 std::abs(kernels.alpha * kernels.l(s - x) - kernels.beta * kernels.h(r)));
  }

  rep.h_value_origin = std::abs(kernels.h(0.0));
  rep.h_slope_origin = std::abs(kernels.h_prime(0.0) + kernels.c / kernels.beta);
  rep.h_slope_origin_fd =
      std::abs((kernels.h(delta) - kernels.h(-delta)) / (2.0 * delta) +
               kernels.c / kernels.beta);
  return rep;
}

TargetResidualReport target_residual(std::span<const SolverState> states,
                                     const Scenario& scenario) {
  if (states.size() < 3) {
    throw InvalidParameterError("target_residual needs at least 3 snapshots");
  }
  const double dt01 = states[1].t - states[0].t;
  for (std::size_t j = 1; j < states.size(); ++j) {
    const double d = states[j].t - states[j - 1].t;
    if (std::abs(d - dt01) > 1e-9 * std::max(1.0, std::abs(dt01))) {
      throw InvalidParameterError("target_residual needs uniformly spaced snapshots");
    }
  }

  const TransformParams p = TransformParams::from_scenario(scenario);
  const double beta = scenario.params.beta();
  const double dxi = scenario.dxi();

  std::vector<TargetState> w_states;
  w_states.reserve(states.size());
  for (const auto& st : states) {
    w_states.push_back(direct_transform(st.u, st.s, p));
  }

  TargetResidualReport rep{};
  for (std::size_t j = 0; j < states.size(); ++j) {
    const auto& ws = w_states[j];
    rep.max_w_interface = std::max(rep.max_w_interface, std::abs(ws.w.back()));
    rep.max_wx_origin =
        std::max(rep.max_wx_origin, std::abs(d1_left(ws.w, dxi) / ws.s));
  }

  for (std::size_t j = 1; j + 1 < states.size(); ++j) {
    const auto& st = states[j];
    const auto& ws = w_states[j];
    const double s = st.s;
    const double s_dot = interface_velocity(st, beta, dxi);
    const double forcing = (p.c / p.beta) * s_dot * ws.x_err;

    // w_t at fixed x from grids at fixed xi: w_t = W_t - xi s_dot w_x.
    for (std::size_t i = 1; i + 1 < ws.w.size(); ++i) {
      const double xi = static_cast<double>(i) * dxi;
      const double w_t_grid =
          (w_states[j + 1].w[i] - w_states[j - 1].w[i]) / (2.0 * dt01);
      const double w_x = d1_central(ws.w, i, dxi) / s;
      const double w_xx =
          (ws.w[i + 1] - 2.0 * ws.w[i] + ws.w[i - 1]) / (dxi * dxi) / (s * s);
      const double res = (w_t_grid - xi * s_dot * w_x) - p.alpha * w_xx - forcing;
      rep.max_pde = std::max(rep.max_pde, std::abs(res));
    }

    const double x_dot =
        (w_states[j + 1].x_err - w_states[j - 1].x_err) / (2.0 * dt01);
    const double wx_interface = d1_right(ws.w, dxi) / s;
    const double ode_res = x_dot + p.c * ws.x_err + beta * wx_interface;
    rep.max_ode = std::max(rep.max_ode, std::abs(ode_res));
  }
  return rep;
}

}  // namespace stefanctl
