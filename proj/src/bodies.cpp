#include "mclab/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mclab/errors.hpp"
#include "mclab/lp.hpp"
#include "mclab/rng.hpp"

namespace mclab {

namespace {

constexpr std::size_t kIterationCap = 100000;

struct DimVisitor {
  std::size_t operator()(const Ball& b) const { return b.center.dim(); }
  std::size_t operator()(const HPolytope& h) const {
    return h.facets.empty() ? 0 : h.facets[0].normal.dim();
  }
  std::size_t operator()(const VPolytope& v) const {
    return v.generators.empty() ? 0 : v.generators[0].dim();
  }
  std::size_t operator()(const SandwichSet& s) const {
    return body_dim(*s.outer);
  }
};

void check_query_dim(const ConvexBody& body, const Vec& x, const char* where) {
  if (body_dim(body) != x.dim())
    throw DimensionMismatch(std::string(where) + ": body dim " +
                            std::to_string(body_dim(body)) + " vs point dim " +
                            std::to_string(x.dim()));
}

// ---- Ball ----

Vec project_ball(const Ball& b, const Vec& x) {
  const double d = dist(x, b.center);
  if (d <= b.radius) return x;
  return b.center + (b.radius / d) * (x - b.center);
}

// ---- V-polytope: Wolfe's minimum-norm-point over the shifted generators ----

// Affine minimizer of || sum v_i q_i ||^2 subject to sum v_i = 1, via the
// KKT system on the Gram matrix. A tiny ridge is added if the corral has
// gone numerically dependent.
std::vector<double> affine_minimizer(const std::vector<Vec>& q,
                                     const std::vector<std::size_t>& corral) {
  const std::size_t k = corral.size();
  Mat G(k, k);
  double trace = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      G(i, j) = dot(q[corral[i]], q[corral[j]]);
      if (i == j) trace += G(i, i);
    }
  double ridge = 0.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Mat M(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) M(i, j) = 2.0 * G(i, j);
      M(i, i) += 2.0 * ridge;
      M(i, k) = 1.0;
      M(k, i) = 1.0;
    }
    Vec rhs(k + 1);
    rhs[k] = 1.0;
    try {
      Vec sol = solve_linear(M, rhs);
      return std::vector<double>(sol.c.begin(), sol.c.begin() + k);
    } catch (const SingularMatrix&) {
      ridge = (ridge == 0.0) ? 1e-12 * (1.0 + trace) : ridge * 100.0;
    }
  }
  throw NoConvergence("minimum-norm-point: corral system stayed singular");
}

// Returns the minimum-norm point of conv{generators - x}; the projection of
// x onto the hull is x plus that point.
Vec min_norm_point(const VPolytope& body, const Vec& x, double tol) {
  const std::size_t m = body.generators.size();
  std::vector<Vec> q;
  q.reserve(m);
  for (const Vec& g : body.generators) q.push_back(g - x);

  // Deterministic start: first generator of minimal norm.
  std::size_t start = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (norm_sq(q[i]) < norm_sq(q[start])) start = i;

  std::vector<std::size_t> corral{start};
  std::vector<double> w{1.0};

  Vec p = q[start];
  for (std::size_t iter = 0; iter < kIterationCap; ++iter) {
    // Linear minimization step.
    std::size_t j = 0;
    double best = dot(p, q[0]);
    for (std::size_t i = 1; i < m; ++i) {
      const double v = dot(p, q[i]);
      if (v < best) {
        best = v;
        j = i;
      }
    }
    const double pp = norm_sq(p);
    const double gap = pp - best;
    if (norm(p) <= tol || gap <= tol * std::max(std::sqrt(pp), tol)) break;
    if (std::find(corral.begin(), corral.end(), j) != corral.end())
      break;  // numerical stall: the corral already contains the minimizer

    corral.push_back(j);
    w.push_back(0.0);

    // Minor cycle: pull the weights back into the simplex.
    for (;;) {
      if (++iter >= kIterationCap)
        throw NoConvergence("minimum-norm-point: iteration cap reached");
      std::vector<double> v = affine_minimizer(q, corral);
      double vmin = v[0];
      for (double vi : v) vmin = std::min(vmin, vi);
      if (vmin >= -1e-12) {
        w = v;
      } else {
        double theta = 1.0;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (v[i] < 1e-14 && w[i] > v[i])
            theta = std::min(theta, w[i] / (w[i] - v[i]));
        for (std::size_t i = 0; i < v.size(); ++i)
          w[i] = (1.0 - theta) * w[i] + theta * v[i];
      }
      // Drop vanished members.
      std::vector<std::size_t> nc;
      std::vector<double> nw;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 1e-14) {
          nc.push_back(corral[i]);
          nw.push_back(w[i]);
        }
      }
      corral = std::move(nc);
      w = std::move(nw);
      if (vmin >= -1e-12) break;
    }

    p = Vec(x.dim());
    for (std::size_t i = 0; i < corral.size(); ++i) p = p + w[i] * q[corral[i]];
  }
  return p;
}

// ---- H-polytope: Dykstra's alternating projections with corrections ----

double max_violation(const HPolytope& hp, const Vec& x) {
  double v = -std::numeric_limits<double>::infinity();
  for (const Hyperplane& f : hp.facets) v = std::max(v, -signed_margin(f, x));
  return v;
}

Vec project_halfspace(const Hyperplane& f, const Vec& y) {
  const double viol = dot(f.normal, y) - f.offset;
  if (viol <= 0.0) return y;
  return y - (viol / norm_sq(f.normal)) * f.normal;
}

Vec project_hpolytope(const HPolytope& hp, const Vec& x, double tol) {
  if (hp.facets.empty()) return x;
  if (max_violation(hp, x) <= 0.0) return x;

  const std::size_t m = hp.facets.size();
  const std::size_t cycle_cap = std::max<std::size_t>(1, kIterationCap / m);

  Vec z = x;
  std::vector<Vec> corrections(m, Vec(x.dim()));
  bool converged = false;
  for (std::size_t cycle = 0; cycle < cycle_cap; ++cycle) {
    const Vec z_start = z;
    for (std::size_t i = 0; i < m; ++i) {
      const Vec y = z + corrections[i];
      z = project_halfspace(hp.facets[i], y);
      corrections[i] = y - z;
    }
    if (dist(z, z_start) <= 0.05 * tol && max_violation(hp, z) <= tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NoConvergence(
        "hpolytope projection: iteration cap reached before tolerance");

  // Feasibility polish: plain cyclic projections shave the residual
  // violation without materially moving the point.
  for (int round = 0; round < 64 && max_violation(hp, z) > 1e-13; ++round)
    for (const Hyperplane& f : hp.facets) z = project_halfspace(f, z);
  return z;
}

// ---- facet enumeration helpers ----

// Normal of the hyperplane through n affinely independent points, or nullopt.
std::optional<Vec> plane_normal(const std::vector<Vec>& pts) {
  const std::size_t n = pts[0].dim();
  for (std::size_t k = 0; k < n; ++k) {
    Mat M(n, n);
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t cidx = 0; cidx < n; ++cidx)
        M(r, cidx) = pts[r + 1][cidx] - pts[0][cidx];
    M(n - 1, k) = 1.0;  // normalization row: nu_k = 1
    Vec rhs(n);
    rhs[n - 1] = 1.0;
    try {
      Vec nu = solve_linear(M, rhs);
      const double len = norm(nu);
      if (len > 1e-12) return (1.0 / len) * nu;
    } catch (const SingularMatrix&) {
      continue;
    }
  }
  return std::nullopt;
}

double binomial_capped(std::size_t m, std::size_t k, double cap) {
  double v = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    v *= static_cast<double>(m - i) / static_cast<double>(i + 1);
    if (v > cap) return cap + 1.0;
  }
  return v;
}

}  // namespace

std::size_t body_dim(const ConvexBody& body) {
  return std::visit(DimVisitor{}, body);
}

std::string body_kind(const ConvexBody& body) {
  struct V {
    std::string operator()(const Ball& b) const {
      return b.boundary_included ? "ball" : "open-ball";
    }
    std::string operator()(const HPolytope&) const { return "hpolytope"; }
    std::string operator()(const VPolytope&) const { return "vpolytope"; }
    std::string operator()(const SandwichSet&) const { return "sandwich"; }
  };
  return std::visit(V{}, body);
}

double default_tol(const ConvexBody& body) {
  if (std::holds_alternative<Ball>(body)) return kAnalyticTol;
  if (const auto* s = std::get_if<SandwichSet>(&body))
    return default_tol(*s->outer);
  return kIterativeTol;
}

Ball make_ball(Vec center, double radius, bool boundary_included) {
  if (!(radius > 0.0)) throw Error("make_ball: radius must be positive");
  if (!center.finite() || !std::isfinite(radius))
    throw Error("make_ball: non-finite input");
  return Ball{std::move(center), radius, boundary_included};
}

HPolytope make_hpolytope(std::vector<Hyperplane> facets, bool bounded) {
  std::size_t n = 0;
  for (const Hyperplane& f : facets) {
    if (!f.normal.finite() || !std::isfinite(f.offset))
      throw Error("make_hpolytope: non-finite facet");
    if (norm(f.normal) <= 0.0)
      throw Error("make_hpolytope: zero facet normal");
    if (n == 0)
      n = f.normal.dim();
    else if (f.normal.dim() != n)
      throw DimensionMismatch("make_hpolytope: mixed facet dimensions");
  }
  HPolytope hp{std::move(facets), bounded};
  if (bounded) {
    // Coordinate-wise LPs: a finite extent in every signed direction.
    Mat A(hp.facets.size(), n);
    std::vector<double> b(hp.facets.size());
    for (std::size_t i = 0; i < hp.facets.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) A(i, j) = hp.facets[i].normal[j];
      b[i] = hp.facets[i].offset;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> c(n, 0.0);
        c[k] = sign;
        if (lp_maximize(A, b, c).status == LpStatus::Unbounded)
          throw Unbounded("make_hpolytope: bounded flag violated");
      }
    }
  }
  return hp;
}

VPolytope make_vpolytope(std::vector<Vec> generators) {
  if (generators.empty())
    throw Error("make_vpolytope: need at least one generator");
  const std::size_t n = generators[0].dim();
  if (n == 0) throw Error("make_vpolytope: zero-dimensional generator");
  for (const Vec& g : generators) {
    if (g.dim() != n)
      throw DimensionMismatch("make_vpolytope: mixed generator dimensions");
    if (!g.finite()) throw Error("make_vpolytope: non-finite generator");
  }
  return VPolytope{std::move(generators)};
}

SandwichSet make_sandwich(ConvexBody inner, ConvexBody outer) {
  if (body_dim(inner) != body_dim(outer))
    throw DimensionMismatch("make_sandwich: inner/outer dimension mismatch");
  SandwichSet s{std::make_shared<const ConvexBody>(std::move(inner)),
                std::make_shared<const ConvexBody>(std::move(outer))};
  // Spot-check the contract: sampled inner points must lie in the outer body.
  Rng rng(0x5a5d71c8u);
  const double tol = default_tol(*s.outer);
  for (int i = 0; i < 64; ++i) {
    const Vec p = sample_point_in_body(*s.inner, rng);
    if (distance(*s.outer, p, tol) > 1e-6)
      throw ContractViolation(
          "make_sandwich: sampled inner point lies outside the outer body");
  }
  return s;
}

Vec project(const ConvexBody& body, const Vec& x, double tol) {
  check_query_dim(body, x, "project");
  if (!(tol > 0.0)) throw Error("project: tol must be positive");
  struct V {
    const Vec& x;
    double tol;
    Vec operator()(const Ball& b) const { return project_ball(b, x); }
    Vec operator()(const VPolytope& v) const {
      return x + min_norm_point(v, x, tol);
    }
    Vec operator()(const HPolytope& h) const {
      return project_hpolytope(h, x, tol);
    }
    Vec operator()(const SandwichSet&) const {
      throw PreconditionFailed(
          "project: sandwich sets carry no distance oracle; query the inner "
          "or outer body");
    }
  };
  return std::visit(V{x, tol}, body);
}

double distance(const ConvexBody& body, const Vec& x, double tol) {
  check_query_dim(body, x, "distance");
  if (const auto* b = std::get_if<Ball>(&body))
    return std::max(0.0, dist(x, b->center) - b->radius);
  if (const auto* v = std::get_if<VPolytope>(&body))
    return norm(min_norm_point(*v, x, tol));
  if (const auto* h = std::get_if<HPolytope>(&body)) {
    if (max_violation(*h, x) <= 0.0) return 0.0;
    return dist(x, project_hpolytope(*h, x, tol));
  }
  throw PreconditionFailed(
      "distance: sandwich sets carry no distance oracle; query the inner or "
      "outer body");
}

double interior_margin(const ConvexBody& body, const Vec& x) {
  check_query_dim(body, x, "interior_margin");
  if (const auto* b = std::get_if<Ball>(&body))
    return b->radius - dist(x, b->center);
  if (const auto* h = std::get_if<HPolytope>(&body)) {
    if (h->facets.empty())
      return std::numeric_limits<double>::infinity();
    double m = std::numeric_limits<double>::infinity();
    for (const Hyperplane& f : h->facets) m = std::min(m, signed_margin(f, x));
    if (m >= 0.0) return m;
    return -distance(body, x, kIterativeTol);
  }
  if (const auto* v = std::get_if<VPolytope>(&body)) {
    const std::size_t n = x.dim();
    if (affine_rank(v->generators) < n)
      return -distance(body, x, kIterativeTol);  // empty interior
    const HPolytope hp = facet_form(*v);
    double m = std::numeric_limits<double>::infinity();
    for (const Hyperplane& f : hp.facets) m = std::min(m, signed_margin(f, x));
    if (m >= 0.0) return m;
    return -distance(body, x, kIterativeTol);
  }
  throw PreconditionFailed(
      "interior_margin: sandwich sets have no margin oracle; use the outer "
      "body");
}

MembershipVerdict contains(const ConvexBody& body, const Vec& x, double tol) {
  if (!(tol > 0.0)) throw Error("contains: tol must be positive");
  const double m = interior_margin(body, x);
  if (m > tol) return {Membership::Inside, m};
  if (m < -tol) return {Membership::Outside, -m};
  return {Membership::Undetermined, m};
}

BallCertificate chebyshev_ball(const HPolytope& body) {
  if (body.facets.empty())
    throw Unbounded("chebyshev_ball: no facets, body is the whole space");
  const std::size_t n = body.facets[0].normal.dim();
  const std::size_t m = body.facets.size();

  // Variables (center, r): maximize r with <n_i, c> + r ||n_i|| <= b_i.
  Mat A(m, n + 1);
  std::vector<double> b(m), c(n + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = body.facets[i].normal[j];
    A(i, n) = norm(body.facets[i].normal);
    b[i] = body.facets[i].offset;
  }
  c[n] = 1.0;

  const LpResult res = lp_maximize(A, b, c);
  if (res.status == LpStatus::Unbounded)
    throw Unbounded("chebyshev_ball: inscribed radius is unbounded");
  if (res.status == LpStatus::Infeasible)
    throw EmptyInterior("chebyshev_ball: constraint system infeasible");
  if (res.value <= kAnalyticTol)
    throw EmptyInterior("chebyshev_ball: optimal radius not positive");

  BallCertificate cert;
  cert.center = Vec(std::vector<double>(res.x.begin(), res.x.begin() + n));
  cert.radius = res.value;
  return cert;
}

ConvexBody translate(const ConvexBody& body, const Vec& a) {
  check_query_dim(body, a, "translate");
  struct V {
    const Vec& a;
    ConvexBody operator()(const Ball& b) const {
      return Ball{b.center - a, b.radius, b.boundary_included};
    }
    ConvexBody operator()(const HPolytope& h) const {
      HPolytope out = h;
      for (Hyperplane& f : out.facets) f.offset -= dot(f.normal, a);
      return out;
    }
    ConvexBody operator()(const VPolytope& v) const {
      VPolytope out;
      out.generators.reserve(v.generators.size());
      for (const Vec& g : v.generators) out.generators.push_back(g - a);
      return out;
    }
    ConvexBody operator()(const SandwichSet& s) const {
      SandwichSet out;
      out.inner =
          std::make_shared<const ConvexBody>(translate(*s.inner, a));
      out.outer =
          std::make_shared<const ConvexBody>(translate(*s.outer, a));
      return out;
    }
  };
  return std::visit(V{a}, body);
}

HPolytope facet_form(const VPolytope& body) {
  const std::size_t n = body.generators[0].dim();
  const std::size_t m = body.generators.size();
  if (m < n + 1 || affine_rank(body.generators) < n)
    throw Error("facet_form: hull is not full-dimensional");
  if (binomial_capped(m, n, 2e6) > 2e6)
    throw Error("facet_form: too many generator subsets for desk scale");

  double scale = 0.0;
  for (const Vec& g : body.generators)
    for (double v : g.c) scale = std::max(scale, std::abs(v));
  const double side_tol = 1e-9 * (1.0 + scale);

  std::vector<Hyperplane> facets;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;

  auto consider = [&](const std::vector<std::size_t>& subset) {
    std::vector<Vec> pts;
    pts.reserve(n);
    for (std::size_t i : subset) pts.push_back(body.generators[i]);
    const auto nu = plane_normal(pts);
    if (!nu) return;
    Vec normal = *nu;
    double offset = dot(normal, pts[0]);
    double hi = 0.0, lo = 0.0;
    for (const Vec& g : body.generators) {
      const double s = dot(normal, g) - offset;
      hi = std::max(hi, s);
      lo = std::min(lo, s);
    }
    if (hi > side_tol && lo < -side_tol) return;  // generators on both sides
    if (hi > side_tol) {
      normal = -normal;
      offset = -offset;
    }
    for (const Hyperplane& f : facets) {
      if (std::abs(dot(f.normal, normal) - 1.0) < 1e-9 &&
          std::abs(f.offset - offset) < 1e-9 * (1.0 + std::abs(offset)))
        return;  // duplicate
    }
    facets.push_back(Hyperplane{std::move(normal), offset});
  };

  // Odometer over n-subsets of the generators.
  for (;;) {
    consider(idx);
    std::size_t i = n;
    while (i-- > 0) {
      if (idx[i] + (n - i) < m) {
        ++idx[i];
        for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) {
        if (facets.empty())
          throw Error("facet_form: no supporting hyperplanes found");
        return HPolytope{std::move(facets), true};
      }
    }
  }
}

std::pair<Vec, Vec> bounding_box(const ConvexBody& body) {
  if (const auto* b = std::get_if<Ball>(&body)) {
    Vec lo = b->center, hi = b->center;
    for (std::size_t i = 0; i < lo.dim(); ++i) {
      lo[i] -= b->radius;
      hi[i] += b->radius;
    }
    return {lo, hi};
  }
  if (const auto* v = std::get_if<VPolytope>(&body)) {
    Vec lo = v->generators[0], hi = v->generators[0];
    for (const Vec& g : v->generators)
      for (std::size_t i = 0; i < g.dim(); ++i) {
        lo[i] = std::min(lo[i], g[i]);
        hi[i] = std::max(hi[i], g[i]);
      }
    return {lo, hi};
  }
  if (const auto* h = std::get_if<HPolytope>(&body)) {
    const std::size_t n = body_dim(body);
    const std::size_t m = h->facets.size();
    Mat A(m, n);
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) A(i, j) = h->facets[i].normal[j];
      b[i] = h->facets[i].offset;
    }
    Vec lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> c(n, 0.0);
        c[k] = sign;
        const LpResult res = lp_maximize(A, b, c);
        if (res.status != LpStatus::Optimal)
          throw Unbounded("bounding_box: polytope unbounded or empty");
        (sign > 0 ? hi[k] : lo[k]) = sign * res.value;
      }
    }
    return {lo, hi};
  }
  const auto& s = std::get<SandwichSet>(body);
  return bounding_box(*s.outer);
}

ConvexBody closure(const ConvexBody& body) {
  if (const auto* b = std::get_if<Ball>(&body))
    return Ball{b->center, b->radius, true};
  if (const auto* s = std::get_if<SandwichSet>(&body)) {
    SandwichSet out;
    out.inner = std::make_shared<const ConvexBody>(closure(*s->inner));
    out.outer = std::make_shared<const ConvexBody>(closure(*s->outer));
    return out;
  }
  return body;  // polytopes are closed
}

Vec sample_point_in_body(const ConvexBody& body, Rng& rng) {
  if (const auto* b = std::get_if<Ball>(&body))
    return point_in_ball(rng, b->center, b->radius);
  if (const auto* v = std::get_if<VPolytope>(&body)) {
    const auto w = convex_weights(rng, v->generators.size());
    Vec p(v->generators[0].dim());
    for (std::size_t i = 0; i < w.size(); ++i)
      p = p + w[i] * v->generators[i];
    return p;
  }
  if (const auto* h = std::get_if<HPolytope>(&body)) {
    const BallCertificate cheb = chebyshev_ball(*h);
    const Vec d = unit_direction(rng, cheb.center.dim());
    double tmax = std::numeric_limits<double>::infinity();
    for (const Hyperplane& f : h->facets) {
      const double along = dot(f.normal, d);
      if (along > 1e-12)
        tmax = std::min(tmax, (f.offset - dot(f.normal, cheb.center)) / along);
    }
    if (!std::isfinite(tmax)) tmax = 1e6;  // unbounded direction, clip
    return cheb.center + (0.999 * uniform(rng, 0.0, 1.0) * tmax) * d;
  }
  const auto& s = std::get<SandwichSet>(body);
  return sample_point_in_body(*s.inner, rng);
}

}  // namespace mclab
