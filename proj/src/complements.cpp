#include "mclab/complements.hpp"

#include "mclab/errors.hpp"
#include "mclab/rng.hpp"

namespace mclab {

bool in_metric_complement(const ConvexBody& body, const Vec& x, double r) {
  if (!(r > 0.0)) throw Error("in_metric_complement: r must be positive");
  const double tol = r / 10.0;
  return distance(body, x, tol) >= r - tol;
}

MembershipVerdict double_complement_membership(const ConvexBody& body,
                                               const Vec& x, double tol) {
  if (std::holds_alternative<SandwichSet>(body))
    throw PreconditionFailed(
        "double_complement_membership: body must be located; use "
        "sandwich_double_complement for sandwich sets");
  return contains(body, x, tol);
}

MembershipVerdict sandwich_double_complement(const SandwichSet& s,
                                             const Vec& x, double tol) {
  // Re-check the sandwich contract on a few fresh inner samples; the outer
  // body must house every one of them.
  Rng rng(0x0cfbb7a2u);
  for (int i = 0; i < 8; ++i) {
    const Vec p = sample_point_in_body(*s.inner, rng);
    if (distance(*s.outer, p, default_tol(*s.outer)) > 1e-6)
      throw ContractViolation(
          "sandwich_double_complement: inner sample outside the outer body");
  }
  return contains(*s.outer, x, tol);
}

MembershipVerdict classify(const ConvexBody& body, const Vec& x, double tol) {
  if (const auto* s = std::get_if<SandwichSet>(&body))
    return sandwich_double_complement(*s, x, tol);
  return contains(body, x, tol);
}

}  // namespace mclab
