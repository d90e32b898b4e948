#pragma once

#include <cstddef>
#include <vector>

#include "mclab/linalg.hpp"
#include "mclab/rng.hpp"
#include "mclab/vec.hpp"

namespace mclab {

/// n+1 affinely independent vertices in R^n.
struct Simplex {
  std::vector<Vec> vertices;

  std::size_t dim() const { return vertices.empty() ? 0 : vertices[0].dim(); }
};

/// Regular n-simplex with barycentre at the origin, inscribed in the closed
/// unit Euclidean ball:
///   v_i     = sqrt(1 + 1/n) e_i - n^{-3/2} (sqrt(n+1) + 1) u   (1 <= i <= n)
///   v_{n+1} = u / sqrt(n)
/// Side length sqrt(2(n+1)/n). Construction re-verifies the vertex norms,
/// pairwise distances and barycentre before returning. 1 <= n <= 16.
Simplex regular_simplex(std::size_t n);

/// a + r * regular_simplex(n): barycentre a, circumradius r.
Simplex scaled_simplex(const Vec& a, double r, std::size_t n);

/// Arithmetic mean of the vertices.
Vec barycentre(const Simplex& s);

/// The n+1 supporting hyperplanes, facet i passing through every vertex
/// except vertex i, oriented so the omitted vertex is on the <= side.
/// Normals are unit length. The simplex equals the H-polytope of these.
std::vector<Hyperplane> facet_hyperplanes(const Simplex& s);

/// Minimum signed facet distance from c: positive strictly inside, zero on
/// the boundary, negative outside.
double inradius_at(const Simplex& s, const Vec& c);

/// Affine-independence test: |det [v_2-v_1, ..., v_{n+1}-v_1]| against
/// 1e-10 * (max edge length)^n.
bool is_simplex(const std::vector<Vec>& points);

/// Result of perturbation_tolerance: the certified delta, the first-order
/// bound it was capped by, and the empirical survival margin of the final
/// randomized validation at the returned delta.
struct PerturbationBound {
  double delta = 0.0;
  double first_order_delta = 0.0;
  std::size_t trials = 0;
  double worst_min_weight = 0.0;
};

/// A delta > 0 such that every perturbation of the vertices by less than
/// delta leaves an n-simplex with c strictly interior. Binary search over
/// [0, inradius_at(s, c)]; each candidate must satisfy the first-order bound
/// (min barycentric weight of c minus delta times the Frobenius norm of the
/// inverse vertex-difference matrix stays positive) and survive randomized
/// adversarial perturbations at magnitude delta*(1-1e-3).
PerturbationBound perturbation_tolerance(const Simplex& s, const Vec& c,
                                         Rng& rng);

}  // namespace mclab
