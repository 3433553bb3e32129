#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace stefanctl {

/// Composite trapezoid rule over uniformly spaced samples.
double trapezoid(std::span<const double> f, double dx);

/// Suffix trapezoid sums: out[i] holds the trapezoid integral of f over
/// [x_i, x_last]. out.size() must equal f.size(); out.back() is 0.
void suffix_trapezoid(std::span<const double> f, double dx,
                      std::span<double> out);

/// Second-order one-sided first derivative at the left end.
double d1_left(std::span<const double> u, double dx);

/// Second-order one-sided first derivative at the right end.
double d1_right(std::span<const double> u, double dx);

/// Central first derivative at interior node i.
double d1_central(std::span<const double> u, std::size_t i, double dx);

/// Node-wise first derivative: one-sided second order at both ends,
/// central second order inside. Needs at least 3 nodes.
std::vector<double> gradient(std::span<const double> u, double dx);

/// Solves a tridiagonal system via the Thomas algorithm. lower and upper
/// have n-1 entries, diag and rhs have n. diag and rhs are consumed as
/// scratch; the solution is written to x (may alias rhs).
void solve_tridiagonal(std::span<const double> lower, std::span<double> diag,
                       std::span<const double> upper, std::span<double> rhs,
                       std::span<double> x);

}  // namespace stefanctl
