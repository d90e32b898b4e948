#include "mclab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mclab/errors.hpp"

namespace mclab {

namespace {

constexpr double kEps = 1e-9;

// Tableau with rows = constraints plus one objective row at the bottom.
// Column layout: structural variables, then one artificial per negative row.
// Bland's rule keeps the iteration finite under degeneracy.
struct Tableau {
  std::size_t m, n;              // constraints, structural columns
  std::size_t n_art = 0;         // artificial columns appended after n
  std::vector<double> t;         // (m+1) x (n + n_art + 1), last col = rhs
  std::vector<std::size_t> basis;

  std::size_t width() const { return n + n_art + 1; }
  double& at(std::size_t i, std::size_t j) { return t[i * width() + j]; }
  double at(std::size_t i, std::size_t j) const { return t[i * width() + j]; }
  std::size_t rhs_col() const { return n + n_art; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t j = 0; j < width(); ++j) at(pr, j) /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pr) continue;
      const double f = at(i, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width(); ++j) at(i, j) -= f * at(pr, j);
    }
    basis[pr] = pc;
  }

  // Runs the simplex on the current objective row. `allowed` bounds the
  // entering columns (used to keep artificials out in phase 2).
  LpStatus run(std::size_t allowed) {
    for (;;) {
      std::size_t pc = width();  // sentinel
      for (std::size_t j = 0; j < allowed; ++j) {
        if (at(m, j) > kEps) {  // Bland: first improving column
          pc = j;
          break;
        }
      }
      if (pc == width()) return LpStatus::Optimal;

      std::size_t pr = m;  // sentinel
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (at(i, pc) > kEps) {
          const double ratio = at(i, rhs_col()) / at(i, pc);
          if (ratio < best - kEps ||
              (ratio < best + kEps && (pr == m || basis[i] < basis[pr]))) {
            best = ratio;
            pr = i;
          }
        }
      }
      if (pr == m) return LpStatus::Unbounded;
      pivot(pr, pc);
    }
  }
};

}  // namespace

LpResult lp_maximize(const Mat& A, const std::vector<double>& b,
                     const std::vector<double>& c) {
  const std::size_t m = A.rows;
  const std::size_t nv = A.cols;
  if (b.size() != m || c.size() != nv)
    throw DimensionMismatch("lp_maximize: shape mismatch");

  // Free variables split as x = u - v, both nonnegative, then slacks.
  const std::size_t n_split = 2 * nv;
  const std::size_t n_struct = n_split + m;

  Tableau tb;
  tb.m = m;
  tb.n = n_struct;
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0.0) ++n_art;
  tb.n_art = n_art;
  tb.t.assign((m + 1) * tb.width(), 0.0);
  tb.basis.assign(m, 0);

  std::size_t art = n_struct;
  for (std::size_t i = 0; i < m; ++i) {
    const double s = (b[i] < 0.0) ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nv; ++j) {
      tb.at(i, j) = s * A(i, j);
      tb.at(i, nv + j) = -s * A(i, j);
    }
    tb.at(i, n_split + i) = s;  // slack
    tb.at(i, tb.rhs_col()) = s * b[i];
    if (b[i] < 0.0) {
      tb.at(i, art) = 1.0;
      tb.basis[i] = art++;
    } else {
      tb.basis[i] = n_split + i;
    }
  }

  if (n_art > 0) {
    // Phase 1: maximize minus the sum of artificials.
    for (std::size_t j = n_struct; j < n_struct + n_art; ++j) tb.at(m, j) = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tb.basis[i] >= n_struct) {
        for (std::size_t j = 0; j < tb.width(); ++j) tb.at(m, j) += tb.at(i, j);
      }
    }
    tb.run(n_struct + n_art);
    // The rhs cell holds minus the objective, i.e. the residual artificial sum.
    if (tb.at(m, tb.rhs_col()) > 1e-7) return {LpStatus::Infeasible, 0.0, {}};

    // Drive any artificial still basic (at zero) out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (tb.basis[i] >= n_struct) {
        std::size_t pc = tb.width();
        for (std::size_t j = 0; j < n_struct; ++j) {
          if (std::abs(tb.at(i, j)) > kEps) {
            pc = j;
            break;
          }
        }
        if (pc != tb.width()) tb.pivot(i, pc);
        // A fully-zero row is redundant; the artificial stays basic at zero
        // and phase 2 never lets it re-enter.
      }
    }
  }

  // Phase 2 objective.
  for (std::size_t j = 0; j < tb.width(); ++j) tb.at(m, j) = 0.0;
  for (std::size_t j = 0; j < nv; ++j) {
    tb.at(m, j) = c[j];
    tb.at(m, nv + j) = -c[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t bj = tb.basis[i];
    const double cost = tb.at(m, bj);
    if (cost != 0.0)
      for (std::size_t j = 0; j < tb.width(); ++j)
        tb.at(m, j) -= cost * tb.at(i, j);
  }

  const LpStatus st = tb.run(n_struct);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, 0.0, {}};

  std::vector<double> xs(n_split, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] < n_split) xs[tb.basis[i]] = tb.at(i, tb.rhs_col());

  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) res.x[j] = xs[j] - xs[nv + j];
  res.value = 0.0;
  for (std::size_t j = 0; j < nv; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace mclab
