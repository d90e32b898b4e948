#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mclab/linalg.hpp"
#include "mclab/rng.hpp"
#include "mclab/vec.hpp"

namespace mclab {

// Located convex sets with a uniform distance/projection contract. A body is
// "located" in the operational sense: distance(body, x) is computable for
// every query point, and project realizes it.

struct Ball {
  Vec center;
  double radius = 1.0;
  // Closed vs open ball. Distances and interior margins agree for both; the
  // flag records which set is meant so closure comparisons can be expressed.
  bool boundary_included = true;
};

struct HPolytope {
  // Each facet {x : <normal,x> <= offset}; normals need not be unit length.
  std::vector<Hyperplane> facets;
  // Asserts a bounding box exists; verified at construction by make_hpolytope.
  bool bounded = false;
};

struct VPolytope {
  // The body is the convex hull of the generators.
  std::vector<Vec> generators;
};

struct SandwichSet;

using ConvexBody = std::variant<Ball, HPolytope, VPolytope, SandwichSet>;

/// Models an abstract convex K known only through bounds inner <= K <= outer,
/// with the contract that outer meets no point provably outside K. Its double
/// complement is computed from the outer body alone, so membership in K
/// itself is never decided.
struct SandwichSet {
  std::shared_ptr<const ConvexBody> inner;
  std::shared_ptr<const ConvexBody> outer;
};

enum class Membership { Inside, Outside, Undetermined };

/// Tolerance-aware membership. margin is the distance to the decision
/// boundary: positive for Inside/Outside, and of magnitude at most the query
/// tolerance exactly when status is Undetermined.
struct MembershipVerdict {
  Membership status = Membership::Undetermined;
  double margin = 0.0;
};

/// (center, radius) asserting B(center, radius) is contained in some body.
struct BallCertificate {
  Vec center;
  double radius = 0.0;
};

// Validating constructors. The raw aggregates stay available for literals in
// tests; these enforce the documented invariants.
Ball make_ball(Vec center, double radius, bool boundary_included = true);
HPolytope make_hpolytope(std::vector<Hyperplane> facets, bool bounded);
VPolytope make_vpolytope(std::vector<Vec> generators);
SandwichSet make_sandwich(ConvexBody inner, ConvexBody outer);

std::size_t body_dim(const ConvexBody& body);
std::string body_kind(const ConvexBody& body);

// Default query tolerances: analytic bodies resolve to 1e-9, iterative
// projections (polytopes) to 1e-7. Every report states which one applied.
constexpr double kAnalyticTol = 1e-9;
constexpr double kIterativeTol = 1e-7;
double default_tol(const ConvexBody& body);

/// Nearest point of the closure of `body` to x, within tol of optimal:
/// analytic for balls, Wolfe minimum-norm-point over shifted generators for
/// V-polytopes, Dykstra's corrected alternating projections for H-polytopes.
/// Throws NoConvergence if the iteration cap runs out first.
Vec project(const ConvexBody& body, const Vec& x, double tol);

/// rho(x, body): 0 inside, else the norm realized by project.
double distance(const ConvexBody& body, const Vec& x, double tol);

/// Largest r (within tolerance) with B(x, r) contained in the body;
/// -distance(x) when x is outside. For H-polytopes the inside value is the
/// minimum facet margin; V-polytope margins go through their facet form
/// (or reduce to -distance when the hull is not full-dimensional).
double interior_margin(const ConvexBody& body, const Vec& x);

/// Three-valued membership with the signed interior margin.
MembershipVerdict contains(const ConvexBody& body, const Vec& x, double tol);

/// Largest inscribed ball of a bounded H-polytope, by a dense LP over
/// (center, radius). Throws EmptyInterior or Unbounded.
BallCertificate chebyshev_ball(const HPolytope& body);

/// The translated body {x - a : x in body}.
ConvexBody translate(const ConvexBody& body, const Vec& a);

/// Facet representation of a full-dimensional V-polytope, by brute-force
/// enumeration of supporting hyperplanes through dim-subsets of generators.
/// Desk scale only; throws if the subset count is unreasonable or the hull
/// is not full-dimensional.
HPolytope facet_form(const VPolytope& body);

/// Axis-aligned bounding box of the closure (LP-based for H-polytopes).
std::pair<Vec, Vec> bounding_box(const ConvexBody& body);

/// The closure of the body: flips an open ball to closed, identity otherwise.
ConvexBody closure(const ConvexBody& body);

/// A point in the body (uniform for balls; convex-weight or center-ray
/// sampling for polytopes). Not uniform in general, but always inside.
Vec sample_point_in_body(const ConvexBody& body, Rng& rng);

}  // namespace mclab
