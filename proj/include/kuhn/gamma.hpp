#pragma once

#include <cmath>
#include <stdexcept>

#include "kuhn/rng.hpp"

namespace kuhn {

// Standard normal via the polar method.
inline double standard_normal(Rng& rng) {
  while (true) {
    double u = 2.0 * rng.next_double() - 1.0;
    double v = 2.0 * rng.next_double() - 1.0;
    double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

// Gamma(shape, 1) draw by Marsaglia-Tsang rejection; shapes below one are
// boosted with the U^(1/shape) transformation. Valid for every shape > 0,
// which matters because prior concentrations eta * sigma(a) routinely fall
// under one.
inline double gamma_sample(double shape, Rng& rng) {
  if (!(shape > 0.0)) throw std::domain_error("gamma shape must be positive");
  if (shape < 1.0) {
    double u = rng.next_double();
    return gamma_sample(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace kuhn
