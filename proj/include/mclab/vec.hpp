#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mclab/errors.hpp"

namespace mclab {

/// Point in R^n under the Euclidean norm. Immutable by convention once built;
/// every operation below returns a fresh value.
struct Vec {
  std::vector<double> c;

  Vec() = default;
  explicit Vec(std::size_t n, double fill = 0.0) : c(n, fill) {}
  Vec(std::initializer_list<double> xs) : c(xs) {}
  explicit Vec(std::vector<double> xs) : c(std::move(xs)) {}

  std::size_t dim() const { return c.size(); }
  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }

  bool finite() const {
    for (double v : c)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(std::string(where) + ": dims " +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
}

inline Vec operator+(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "operator+");
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "operator-");
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(double s, const Vec& a) {
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
  return r;
}

inline Vec operator-(const Vec& a) { return -1.0 * a; }

inline double dot(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

/// k-th standard basis vector of R^n.
inline Vec basis_vector(std::size_t n, std::size_t k) {
  Vec e(n);
  e[k] = 1.0;
  return e;
}

/// All-ones vector of R^n.
inline Vec ones(std::size_t n) { return Vec(n, 1.0); }

inline Vec lerp(const Vec& x, const Vec& y, double lambda) {
  check_same_dim(x, y, "lerp");
  Vec r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    r[i] = x[i] + lambda * (y[i] - x[i]);
  return r;
}

inline bool approx_eq(const Vec& a, const Vec& b, double tol) {
  return a.dim() == b.dim() && dist(a, b) <= tol;
}

}  // namespace mclab
