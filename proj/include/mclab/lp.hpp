#pragma once

#include <vector>

#include "mclab/linalg.hpp"

namespace mclab {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;       // objective at optimum (Optimal only)
  std::vector<double> x;    // optimizer (Optimal only)
};

/// Maximizes c.x subject to A x <= b with x free (unrestricted sign).
/// Dense two-phase simplex with Bland's rule; intended for desk-scale
/// problems (tens of variables and constraints).
LpResult lp_maximize(const Mat& A, const std::vector<double>& b,
                     const std::vector<double>& c);

}  // namespace mclab
