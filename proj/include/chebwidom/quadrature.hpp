#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace chebwidom::quad {

/// Nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n points (Newton on the three-term recurrence).
Rule gauss_legendre(int n);

/// First-kind Gauss-Chebyshev angles theta_i = (i + 1/2) pi / n, i = 0..n-1.
std::vector<double> chebyshev_angles(int n);

/// Cosine coefficients g_j of g(theta) = sum_j g_j cos(j theta), from samples at
/// chebyshev_angles(n). g_0 carries the mean. Uses a DCT-II.
std::vector<double> cosine_coefficients(std::span<const double> samples);

/// Values at first-kind Chebyshev points -> coefficients of sum_k c_k T_k(s).
/// Samples are ordered by chebyshev_angles, i.e. s_i = cos(theta_i).
std::vector<double> chebyshev_interpolant(std::span<const double> samples);

/// Bisection for a sign change of f on [a, b], run to adjacent doubles.
/// f(a) and f(b) must have opposite signs (zero counts as either).
double bisect(const std::function<double(double)>& f, double a, double b);

/// Bisection with caller-supplied endpoint values.
double bisect(const std::function<double(double)>& f, double a, double b, double fa, double fb);

}  // namespace chebwidom::quad
