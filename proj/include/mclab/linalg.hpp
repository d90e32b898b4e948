#pragma once

#include <cstddef>
#include <vector>

#include "mclab/vec.hpp"

namespace mclab {

/// Dense row-major matrix. Small dimensions only (n <= ~20).
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), a(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

/// Solves A x = b by Gaussian elimination with partial (row) pivoting.
/// Throws SingularMatrix when a pivot magnitude falls below
/// 1e-12 times the largest initial entry magnitude.
Vec solve_linear(const Mat& A, const Vec& b);

/// Determinant via the same pivoted elimination. Returns 0 when elimination
/// hits the singularity threshold.
double determinant(const Mat& A);

/// Inverse of a square matrix (column-by-column solves).
Mat invert(const Mat& A);

double frobenius_norm(const Mat& A);

/// Dimension of the affine hull of `points`, judged against the relative
/// threshold `rel_tol * max distance between points`.
std::size_t affine_rank(const std::vector<Vec>& points, double rel_tol = 1e-10);

/// The set {x : <normal, x> = offset}. As a half-space constraint it is read
/// as <normal, x> <= offset.
struct Hyperplane {
  Vec normal;
  double offset = 0.0;
};

/// Signed distance from x to the half-space boundary; positive on the
/// feasible (<=) side.
inline double signed_margin(const Hyperplane& h, const Vec& x) {
  return (h.offset - dot(h.normal, x)) / norm(h.normal);
}

/// Weights of a point relative to n+1 affinely independent vertices.
/// The weights sum to 1; they may be negative outside the simplex.
struct BarycentricCoords {
  std::vector<double> weights;
};

/// Solves the affine system sum_i w_i v_i = p, sum_i w_i = 1.
/// `vertices` must hold n+1 points of R^n.
BarycentricCoords barycentric(const std::vector<Vec>& vertices, const Vec& p);

}  // namespace mclab
