#pragma once

#include <cmath>
#include <span>

namespace robin::detail {

// int_a^b (sum_k c[k] r^k) r^(N-1-gamma) dr, 0 <= a <= b, gamma < N.
// Every exponent N + k - gamma is positive, so no log branch is needed.
inline double poly_weighted_integral(double a, double b,
                                     std::span<const double> c, int dimension,
                                     double gamma) {
  double acc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0.0) continue;
    const double e = dimension + static_cast<double>(k) - gamma;
    acc += c[k] * (std::pow(b, e) - std::pow(a, e)) / e;
  }
  return acc;
}

// Exact int_a^b r^(N-1) dr.
inline double shell_weight(double a, double b, int dimension) {
  return (std::pow(b, dimension) - std::pow(a, dimension)) / dimension;
}

// Hat-function load of the linear-in-r density (c0 + c1 r) r^(N-1-gamma)
// against the rising edge phi = (r - a)/(b - a) on [a, b].
inline double rising_hat_integral(double a, double b, double c0, double c1,
                                  int dimension, double gamma) {
  const double h = b - a;
  // (c0 + c1 r)(r - a)/h = (c0 r - c0 a + c1 r^2 - c1 a r)/h
  const double coeffs[3] = {-c0 * a / h, (c0 - c1 * a) / h, c1 / h};
  return poly_weighted_integral(a, b, coeffs, dimension, gamma);
}

// Same against the falling edge phi = (b - r)/(b - a).
inline double falling_hat_integral(double a, double b, double c0, double c1,
                                   int dimension, double gamma) {
  const double h = b - a;
  const double coeffs[3] = {c0 * b / h, (c1 * b - c0) / h, -c1 / h};
  return poly_weighted_integral(a, b, coeffs, dimension, gamma);
}

}  // namespace robin::detail
