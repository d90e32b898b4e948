#include "mclab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

constexpr double kPivotRel = 1e-12;

double max_abs_entry(const Mat& A) {
  double m = 0.0;
  for (double v : A.a) m = std::max(m, std::abs(v));
  return m;
}

// In-place LU-style elimination with partial pivoting on a working copy.
// Returns the permutation sign, or 0 if a pivot fell under the threshold.
int eliminate(Mat& A, Vec* b) {
  const std::size_t n = A.rows;
  const double floor = kPivotRel * std::max(max_abs_entry(A), 1e-300);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(A(i, k)) > std::abs(A(piv, k))) piv = i;
    if (std::abs(A(piv, k)) < floor) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      if (b) std::swap((*b)[k], (*b)[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = A(i, k) / A(k, k);
      if (f == 0.0) continue;
      A(i, k) = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
      if (b) (*b)[i] -= f * (*b)[k];
    }
  }
  return sign;
}

}  // namespace

Vec solve_linear(const Mat& A, const Vec& b) {
  if (A.rows != A.cols)
    throw DimensionMismatch("solve_linear: matrix not square");
  if (A.rows != b.dim())
    throw DimensionMismatch("solve_linear: rhs dim mismatch");
  Mat U = A;
  Vec y = b;
  if (eliminate(U, &y) == 0)
    throw SingularMatrix("solve_linear: pivot below threshold");
  const std::size_t n = A.rows;
  Vec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= U(ii, j) * x[j];
    x[ii] = s / U(ii, ii);
  }
  return x;
}

double determinant(const Mat& A) {
  if (A.rows != A.cols)
    throw DimensionMismatch("determinant: matrix not square");
  Mat U = A;
  const int sign = eliminate(U, nullptr);
  if (sign == 0) return 0.0;
  double d = sign;
  for (std::size_t i = 0; i < A.rows; ++i) d *= U(i, i);
  return d;
}

Mat invert(const Mat& A) {
  if (A.rows != A.cols) throw DimensionMismatch("invert: matrix not square");
  const std::size_t n = A.rows;
  Mat inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = solve_linear(A, basis_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double frobenius_norm(const Mat& A) {
  double s = 0.0;
  for (double v : A.a) s += v * v;
  return std::sqrt(s);
}

std::size_t affine_rank(const std::vector<Vec>& points, double rel_tol) {
  if (points.empty()) return 0;
  const std::size_t n = points[0].dim();
  double scale = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i)
    scale = std::max(scale, dist(points[i], points[0]));
  if (scale == 0.0) return 0;

  // Modified Gram-Schmidt over the difference vectors.
  std::vector<Vec> basis;
  for (std::size_t i = 1; i < points.size() && basis.size() < n; ++i) {
    Vec v = points[i] - points[0];
    for (const Vec& u : basis) v = v - dot(v, u) * u;
    const double len = norm(v);
    if (len > rel_tol * scale) basis.push_back((1.0 / len) * v);
  }
  return basis.size();
}

BarycentricCoords barycentric(const std::vector<Vec>& vertices, const Vec& p) {
  if (vertices.empty()) throw DimensionMismatch("barycentric: no vertices");
  const std::size_t n = p.dim();
  if (vertices.size() != n + 1)
    throw DimensionMismatch("barycentric: need n+1 vertices in R^n");
  for (const Vec& v : vertices) check_same_dim(v, p, "barycentric");

  Mat A(n + 1, n + 1);
  Vec rhs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < n; ++i) A(i, j) = vertices[j][i];
    A(n, j) = 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] = p[i];
  rhs[n] = 1.0;

  Vec w = solve_linear(A, rhs);
  return BarycentricCoords{std::move(w.c)};
}

}  // namespace mclab
