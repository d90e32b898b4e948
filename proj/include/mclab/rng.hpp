#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "mclab/vec.hpp"

namespace mclab {

/// All randomized code in the library takes an explicit generator so that
/// parallel and repeated runs stay reproducible from a caller-chosen seed.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform direction on the unit sphere of R^n.
inline Vec unit_direction(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = g(rng);
    const double len = norm(v);
    if (len > 1e-12) return (1.0 / len) * v;
  }
}

/// Uniform point in the closed ball B(center, radius).
inline Vec point_in_ball(Rng& rng, const Vec& center, double radius) {
  const std::size_t n = center.dim();
  const double r =
      radius * std::pow(uniform(rng, 0.0, 1.0), 1.0 / static_cast<double>(n));
  return center + r * unit_direction(rng, n);
}

/// Uniform point in an axis-aligned box.
inline Vec point_in_box(Rng& rng, const Vec& lo, const Vec& hi) {
  check_same_dim(lo, hi, "point_in_box");
  Vec p(lo.dim());
  for (std::size_t i = 0; i < lo.dim(); ++i) p[i] = uniform(rng, lo[i], hi[i]);
  return p;
}

/// Random convex weights (flat Dirichlet via exponential spacings).
inline std::vector<double> convex_weights(Rng& rng, std::size_t k) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(k);
  double s = 0.0;
  for (double& wi : w) s += (wi = e(rng));
  for (double& wi : w) wi /= s;
  return w;
}

}  // namespace mclab
