#pragma once
#include <cmath>
#include <complex>
#include <functional>

#include "spr/constants.hpp"

// Derivative checks for analytic functions: trapezoid rule on a circle around
// the expansion point (Cauchy integral), spectrally accurate, no subtractive
// cancellation.  Central differences for real-valued gradients.

namespace spr {

// k-th derivative of an analytic f at z0 using M samples on |z - z0| = radius
template <class F>
std::complex<double> cauchy_derivative(F&& f, std::complex<double> z0, int order,
                                       double radius, int samples = 64) {
  std::complex<double> acc{0.0, 0.0};
  for (int m = 0; m < samples; ++m) {
    const double th = 2.0 * constants::pi * m / samples;
    const std::complex<double> e{std::cos(th), std::sin(th)};
    std::complex<double> rot{std::cos(order * th), -std::sin(order * th)};
    acc += f(z0 + radius * e) * rot;
  }
  double fact = 1.0;
  for (int k = 2; k <= order; ++k) fact *= k;
  return acc * fact / (static_cast<double>(samples) * std::pow(radius, order));
}

// central difference d/dx of a real function
template <class F>
double central_derivative(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace spr
