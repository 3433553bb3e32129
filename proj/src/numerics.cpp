#include "stefanctl/numerics.hpp"

#include <cassert>

namespace stefanctl {

double trapezoid(std::span<const double> f, double dx) {
  if (f.size() < 2) return 0.0;
  double sum = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
  return sum * dx;
}

void suffix_trapezoid(std::span<const double> f, double dx,
                      std::span<double> out) {
  assert(out.size() == f.size());
  if (f.empty()) return;
  out.back() = 0.0;
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    out[i] = out[i + 1] + 0.5 * dx * (f[i] + f[i + 1]);
  }
}

double d1_left(std::span<const double> u, double dx) {
  assert(u.size() >= 3);
  return (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * dx);
}

double d1_right(std::span<const double> u, double dx) {
  assert(u.size() >= 3);
  const std::size_t n = u.size() - 1;
  return (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * dx);
}

double d1_central(std::span<const double> u, std::size_t i, double dx) {
  assert(i > 0 && i + 1 < u.size());
  return (u[i + 1] - u[i - 1]) / (2.0 * dx);
}

std::vector<double> gradient(std::span<const double> u, double dx) {
  assert(u.size() >= 3);
  std::vector<double> g(u.size());
  g.front() = d1_left(u, dx);
  for (std::size_t i = 1; i + 1 < u.size(); ++i) g[i] = d1_central(u, i, dx);
  g.back() = d1_right(u, dx);
  return g;
}

void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<const double> upper, std::span<double> rhs,
                       std::span<double> x) {
  const std::size_t n = diag.size();
  assert(lower.size() == n - 1 && upper.size() == n - 1);
  assert(rhs.size() == n && x.size() == n);
  for (std::size_t i = 1; i < n; ++i) {
    const double m = lower[i - 1] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
  }
}

}  // namespace stefanctl
