#include "mclab/witnesses.hpp"

#include <cmath>
#include <string>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

void require(bool cond, const std::string& hypothesis) {
  if (!cond) throw PreconditionFailed("hypothesis failed: " + hypothesis);
}

// B(x, r) inside K, checked through the margin oracle.
void require_interior_ball(const ConvexBody& K, const Vec& x, double r,
                           double tol, const char* name) {
  require(r > 0.0, std::string(name) + ": r > 0");
  require(interior_margin(K, x) >= r - tol,
          std::string(name) + ": B(x,r) contained in K");
}

SegmentWitness finish(const ConvexBody& K, Vec z, double lambda, double radius,
                      double tol) {
  SegmentWitness w;
  w.z = std::move(z);
  w.lambda = lambda;
  w.certificate = BallCertificate{w.z, radius};
  w.tol = tol;
  Rng rng(0x9e3779b97f4a7c15ull);
  if (!verify_certificate(K, w.certificate, rng))
    throw ContractViolation("witness certificate failed verification");
  return w;
}

}  // namespace

std::pair<Vec, Vec> ball_transport(const Vec& x, const Vec& y, double lambda,
                                   double r, const Vec& zeta) {
  check_same_dim(x, y, "ball_transport");
  check_same_dim(x, zeta, "ball_transport");
  require(lambda >= 0.0 && lambda <= 1.0, "0 <= lambda <= 1");
  require(r > 0.0, "r > 0");
  const Vec z = lerp(x, y, lambda);
  const Vec offset = zeta - z;
  if (!(norm(offset) < r))
    throw OutOfBall("ball_transport: zeta lies outside B(z, r)");
  return {x + offset, y + offset};
}

SegmentWitness segment_interior_ball(const ConvexBody& K, const Vec& x,
                                     double r, const Vec& y, double lambda) {
  const double tol = default_tol(K);
  require_interior_ball(K, x, r, tol, "segment_interior_ball");
  require(lambda > 0.0 && lambda < 1.0, "0 < lambda < 1");
  require(dist(x, y) > tol, "x distinct from y");
  const double reach = (1.0 - lambda) * r;
  require(distance(K, y, tol) < reach,
          "B(y,(1-lambda)r) intersects K");
  const Vec z = lerp(x, y, lambda);
  return finish(K, z, lambda, (1.0 - lambda) * (1.0 - lambda) * r, tol);
}

SegmentWitness density_witness(const ConvexBody& K, const Vec& x0, double r,
                               const Vec& y, double eps) {
  const double tol = default_tol(K);
  require_interior_ball(K, x0, r, tol, "density_witness");
  require(distance(K, y, tol) <= tol, "y in the closure of K");
  require(eps > 0.0, "eps > 0");
  const double sep = dist(x0, y);
  // First branch of the proof: y is already interior.
  if (sep < r) return finish(K, y, 1.0, r - sep, tol);
  require(eps < 2.0 * sep, "eps < 2||x0-y||");
  const double lambda = 1.0 - eps / (2.0 * sep);
  const Vec z = lerp(x0, y, lambda);
  return finish(K, z, lambda, (1.0 - lambda) * r, tol);
}

SegmentWitness segment_interior(const ConvexBody& K, const Vec& x, double r,
                                const Vec& y, double lambda) {
  const double tol = default_tol(K);
  require_interior_ball(K, x, r, tol, "segment_interior");
  require(lambda >= 0.0 && lambda < 1.0, "0 <= lambda < 1");
  require(distance(K, y, tol) <= tol, "y in the closure of K");
  const Vec z = lerp(x, y, lambda);
  const double step = dist(z, x);
  if (step < r) return finish(K, z, lambda, r - step, tol);
  const double radius = (1.0 - lambda) * (1.0 - lambda) * r * (1.0 - tol);
  return finish(K, z, lambda, radius, tol);
}

SegmentWitness closure_interior_witness(const ConvexBody& K, const Vec& x0,
                                        double r, const Vec& y, double s,
                                        Rng& rng) {
  const double tol = default_tol(K);
  require_interior_ball(K, x0, r, tol, "closure_interior_witness");
  require(s > 0.0, "s > 0");
  const double sep = dist(y, x0);
  require(sep > tol, "y distinct from x0");

  // Closed ball B(y,s) inside the closure of K, checked by sampling.
  for (int i = 0; i < 1000; ++i) {
    const Vec p = point_in_ball(rng, y, s * (1.0 - 1e-6));
    if (distance(K, p, tol) > tol)
      throw PreconditionFailed(
          "hypothesis failed: closure_interior_witness: closed ball B(y,s) "
          "contained in the closure of K");
  }

  const double alpha = 1.0 + s / sep;
  const Vec z = lerp(x0, y, alpha);
  if (std::abs(dist(z, y) - s) > 1e-9)
    throw ContractViolation(
        "closure_interior_witness: ||z-y|| drifted from s");
  return segment_interior(K, x0, r, z, 1.0 / alpha);
}

bool verify_certificate(const ConvexBody& K, const BallCertificate& cert,
                        Rng& rng) {
  if (!(cert.radius > 0.0)) return false;
  try {
    return interior_margin(K, cert.center) >= cert.radius - 1e-9;
  } catch (const Error&) {
    // No margin oracle for this body; fall back to sampling the shrunk ball.
    const double r = cert.radius * (1.0 - 1e-6);
    const double tol = default_tol(K);
    for (int i = 0; i < 1000; ++i) {
      const Vec p = point_in_ball(rng, cert.center, r);
      if (distance(K, p, tol) > tol) return false;
    }
    return true;
  }
}

}  // namespace mclab
