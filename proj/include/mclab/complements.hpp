#pragma once

#include "mclab/bodies.hpp"

namespace mclab {

// Metric complement and double complement queries. The metric complement -S
// is the set of points bounded away from S; for located bodies membership in
// -S reduces to a distance query with an explicit witness radius. The double
// complement -(-S) of a located convex body is decided through the interior
// margin; the grid oracle in the lab validates that reduction against the
// definitional set.

/// True certifies x is bounded away from the body by at least r - r/10:
/// distance is queried at tolerance r/10 and compared against r - r/10.
bool in_metric_complement(const ConvexBody& body, const Vec& x, double r);

/// Membership of x in -(-K) for a located convex body, decided by the sign
/// of the interior margin against tol. Inside iff margin > tol, Outside iff
/// margin < -tol, Undetermined in the closed band between.
MembershipVerdict double_complement_membership(const ConvexBody& body,
                                               const Vec& x, double tol);

/// Membership of x in -(-K) for the abstract K of a sandwich: the interior
/// verdict with respect to the outer body. K itself is never decided.
MembershipVerdict sandwich_double_complement(const SandwichSet& s,
                                             const Vec& x, double tol);

/// CLI-facing classification: plain membership for located bodies,
/// double-complement membership for sandwiches.
MembershipVerdict classify(const ConvexBody& body, const Vec& x, double tol);

}  // namespace mclab
