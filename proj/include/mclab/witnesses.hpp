#pragma once

#include <utility>

#include "mclab/bodies.hpp"
#include "mclab/rng.hpp"

namespace mclab {

// Witness-producing interior constructions. Every operation re-checks its
// hypotheses through the body queries before computing anything, and every
// returned certificate is verified independently; a bare yes/no is never
// produced.

/// A certified interior point on a segment: z = (1-lambda)x + lambda y
/// together with a ball certificate around z and the closure tolerance the
/// hypotheses were checked at.
struct SegmentWitness {
  Vec z;
  double lambda = 0.0;
  BallCertificate certificate;
  double tol = 0.0;
};

/// Decomposes a point zeta of B(z, r), z = (1-lambda)x + lambda y, into
/// endpoints xi in B(x,r), eta in B(y,r) with (1-lambda)xi + lambda eta =
/// zeta. Pure affine transport; throws OutOfBall if zeta misses B(z, r).
std::pair<Vec, Vec> ball_transport(const Vec& x, const Vec& y, double lambda,
                                   double r, const Vec& zeta);

/// From B(x,r) inside K and B(y,(1-lambda)r) meeting K, certifies
/// B(z,(1-lambda)^2 r) inside K at z = (1-lambda)x + lambda y.
SegmentWitness segment_interior_ball(const ConvexBody& K, const Vec& x,
                                     double r, const Vec& y, double lambda);

/// Density of the interior in the closure: from B(x0,r) inside K and y in
/// the closure of K, produces z in the interior with ||y - z|| = eps/2
/// (or y itself when ||x0 - y|| < r).
SegmentWitness density_witness(const ConvexBody& K, const Vec& x0, double r,
                               const Vec& y, double eps);

/// [x,y) lies in the interior: witness at z = (1-lambda)x + lambda y with
/// radius (1-lambda)^2 r (1-tol), or r - ||z-x|| when z is still inside
/// B(x,r).
SegmentWitness segment_interior(const ConvexBody& K, const Vec& x, double r,
                                const Vec& y, double lambda);

/// Interior of the closure is the interior: given B(x0,r) inside K and a
/// closed ball B(y,s) inside the closure of K (verified by sampling),
/// certifies y itself as interior via the segment [x0, z) with
/// z = (1-alpha)x0 + alpha y, alpha = 1 + s/||y-x0||.
SegmentWitness closure_interior_witness(const ConvexBody& K, const Vec& x0,
                                        double r, const Vec& y, double s,
                                        Rng& rng);

/// Independent certificate check: the analytic interior margin when the body
/// supports one, otherwise a 1000-point sampling of the slightly shrunk ball.
bool verify_certificate(const ConvexBody& K, const BallCertificate& cert,
                        Rng& rng);

}  // namespace mclab
