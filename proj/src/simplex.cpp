#include "liftproj/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace liftproj {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kPivotTol = 1e-9;

// Standard-form tableau: rows of B^{-1}A | B^{-1}b with an explicit basis.
struct Tableau {
  int m = 0, n = 0;  // constraint rows, structural+slack+artificial columns
  std::vector<double> t;  // m x (n+1), last column is b
  std::vector<int> basis;

  double& at(int i, int j) { return t[static_cast<size_t>(i) * (n + 1) + j]; }
  double at(int i, int j) const { return t[static_cast<size_t>(i) * (n + 1) + j]; }

  void pivot(int pr, int pc) {
    double pv = at(pr, pc);
    for (int j = 0; j <= n; ++j) at(pr, j) /= pv;
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      double f = at(i, pc);
      if (f == 0.0) continue;
      for (int j = 0; j <= n; ++j) at(i, j) -= f * at(pr, j);
      at(i, pc) = 0.0;
    }
    basis[pr] = pc;
  }
};

// Minimize cost over the tableau with Bland's rule; columns >= col_limit
// are never allowed to enter.  Returns false when unbounded.
bool run_simplex(Tableau& tb, const std::vector<double>& cost, int col_limit) {
  // Reduced-cost row, kept in sync with the tableau by the same pivots.
  std::vector<double> z(tb.n + 1, 0.0);
  for (int j = 0; j < tb.n; ++j) z[j] = cost[j];
  for (int i = 0; i < tb.m; ++i) {
    double cb = cost[tb.basis[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j <= tb.n; ++j) z[j] -= cb * tb.at(i, j);
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < col_limit; ++j) {
      if (z[j] < -kPivotTol) {
        enter = j;
        break;  // Bland: smallest index
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tb.m; ++i) {
      double tij = tb.at(i, enter);
      if (tij > kPivotTol) {
        double ratio = tb.at(i, tb.n) / tij;
        if (ratio < best - 1e-12 ||
            (ratio < best + 1e-12 && (leave < 0 || tb.basis[i] < tb.basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded direction
    tb.pivot(leave, enter);
    double f = z[enter];
    if (f != 0.0) {
      for (int j = 0; j <= tb.n; ++j) z[j] -= f * tb.at(leave, j);
      z[enter] = 0.0;
    }
  }
}

}  // namespace

LpResult lp_solve(const LpProblem& p) {
  const int nv = p.num_vars;
  for (const LpRow& r : p.rows)
    if (static_cast<int>(r.a.size()) != nv) throw ArgumentError("lp: row size mismatch");
  if (!p.objective.empty() && static_cast<int>(p.objective.size()) != nv)
    throw ArgumentError("lp: objective size mismatch");
  if (!p.nonneg.empty() && static_cast<int>(p.nonneg.size()) != nv)
    throw ArgumentError("lp: nonneg flag size mismatch");

  auto nonneg = [&](int i) { return !p.nonneg.empty() && p.nonneg[i]; };

  // Column layout: per variable one column (nonneg) or a +/- pair (free),
  // then one slack per inequality, then artificials.
  std::vector<int> col_of(nv), neg_col_of(nv, -1);
  int ncols = 0;
  for (int i = 0; i < nv; ++i) {
    col_of[i] = ncols++;
    if (!nonneg(i)) neg_col_of[i] = ncols++;
  }
  const int slack_base = ncols;
  int nslack = 0;
  for (const LpRow& r : p.rows)
    if (!r.equality) ++nslack;
  ncols += nslack;
  const int art_base = ncols;
  const int m = static_cast<int>(p.rows.size());
  ncols += m;

  Tableau tb;
  tb.m = m;
  tb.n = ncols;
  tb.t.assign(static_cast<size_t>(m) * (ncols + 1), 0.0);
  tb.basis.resize(m);

  int slack_idx = 0;
  for (int i = 0; i < m; ++i) {
    const LpRow& r = p.rows[i];
    double rhs = -r.a0;  // a^T x (- s) = -a0
    double sign = 1.0;
    double scoef = r.equality ? 0.0 : -1.0;
    if (rhs < 0) {
      sign = -1.0;
      rhs = -rhs;
      scoef = -scoef;
    }
    for (int j = 0; j < nv; ++j) {
      double v = sign * r.a[j];
      if (v == 0.0) continue;
      tb.at(i, col_of[j]) = v;
      if (neg_col_of[j] >= 0) tb.at(i, neg_col_of[j]) = -v;
    }
    if (!r.equality) tb.at(i, slack_base + slack_idx++) = scoef;
    tb.at(i, art_base + i) = 1.0;
    tb.at(i, ncols) = rhs;
    tb.basis[i] = art_base + i;
  }

  // Phase 1: minimize the artificial sum.
  std::vector<double> cost1(ncols, 0.0);
  for (int i = 0; i < m; ++i) cost1[art_base + i] = 1.0;
  run_simplex(tb, cost1, ncols);
  double art_sum = 0.0;
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] >= art_base) art_sum += tb.at(i, tb.n);
  if (art_sum > kFeasTol) return {LpStatus::infeasible, 0.0, {}};

  // Drive remaining basic artificials out where possible.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < art_base) continue;
    for (int j = 0; j < art_base; ++j) {
      if (std::fabs(tb.at(i, j)) > 1e-7) {
        tb.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2.
  std::vector<double> cost2(ncols, 0.0);
  if (!p.objective.empty()) {
    for (int i = 0; i < nv; ++i) {
      cost2[col_of[i]] = -p.objective[i];  // maximize -> minimize negation
      if (neg_col_of[i] >= 0) cost2[neg_col_of[i]] = p.objective[i];
    }
    if (!run_simplex(tb, cost2, art_base)) return {LpStatus::unbounded, 0.0, {}};
  }

  LpResult res;
  res.status = LpStatus::optimal;
  res.x.assign(nv, 0.0);
  std::vector<double> colval(ncols, 0.0);
  for (int i = 0; i < m; ++i) colval[tb.basis[i]] = tb.at(i, tb.n);
  double obj = 0.0;
  for (int i = 0; i < nv; ++i) {
    double v = colval[col_of[i]];
    if (neg_col_of[i] >= 0) v -= colval[neg_col_of[i]];
    res.x[i] = v;
    if (!p.objective.empty()) obj += p.objective[i] * v;
  }
  res.value = obj;
  return res;
}

bool lp_feasible(const LpProblem& p) {
  LpProblem q = p;
  q.objective.clear();
  return lp_solve(q).status == LpStatus::optimal;
}

double lp_max(const LpProblem& p) {
  LpResult r = lp_solve(p);
  if (r.status == LpStatus::infeasible) throw InfeasibleError("lp_max: infeasible");
  if (r.status == LpStatus::unbounded) throw UnboundedError("lp_max: unbounded");
  return r.value;
}

}  // namespace liftproj
