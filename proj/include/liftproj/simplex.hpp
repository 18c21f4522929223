#pragma once

#include <vector>

#include "liftproj/errors.hpp"

namespace liftproj {

/// One linear condition a0 + a^T x >= 0 (or == 0 when equality is set).
struct LpRow {
  double a0 = 0.0;
  std::vector<double> a;
  bool equality = false;
};

/// A small dense LP: maximize c^T x subject to the rows.  Variables are
/// free unless flagged nonnegative.  Empty objective means a pure
/// feasibility problem.
struct LpProblem {
  int num_vars = 0;
  std::vector<LpRow> rows;
  std::vector<double> objective;
  std::vector<bool> nonneg;

  void add_ge(double a0, std::vector<double> a) { rows.push_back({a0, std::move(a), false}); }
  void add_eq(double a0, std::vector<double> a) { rows.push_back({a0, std::move(a), true}); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  std::vector<double> x;
};

/// Two-phase dense simplex with Bland's anti-cycling rule and
/// deterministic pivoting.  Feasibility tolerance 1e-9.
LpResult lp_solve(const LpProblem& p);

bool lp_feasible(const LpProblem& p);

/// Optimal objective value; throws InfeasibleError / UnboundedError.
double lp_max(const LpProblem& p);

}  // namespace liftproj
