#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftproj/certificates.hpp"
#include "liftproj/moments.hpp"

namespace liftproj {

struct RankResult {
  std::string family;
  int n = 0;
  double rho = 0.0;
  std::string op;
  int rank_lo = 0;
  int rank_hi = 0;  // == rank_lo when the rank is exact
  std::string method;  // formula | psd-scan | certificate
  std::string certifying;

  bool exact() const { return rank_lo == rank_hi; }
};

struct ThresholdResult {
  int n = 0;
  double value = 0.0;
  double lo = 0.0, hi = 0.0;  // bracketing interval
  double tol = 0.0;
  std::optional<double> theta;  // achieving theta, when a maximization ran
};

struct GapResult {
  int n = 0, k = 0;
  double rho = 0.0;
  double gap = 0.0;
  std::optional<double> lp_num, lp_den;
};

/// Smallest k whose level-k relaxation of the cropped hypercube is empty,
/// by an ascending PSD scan of the localizer moment matrices.
RankResult las_rank_cropped(int n, double rho);

/// Largest rho with a positive-semidefinite top-level cropped localizer,
/// i.e. the largest rho at which the relaxation keeps full rank n.
ThresholdResult q_of_n(int n, double tol = 1e-9, bool use_collapse = true);

/// Largest rho at which the theta-Bernoulli certificate survives the cut
/// localizer, scalar decision-rule route only (valid for rho < 1).
double p_oracle_scalar(int n, double theta, double tol);
/// The same threshold by eigenvalue bisection.
double p_oracle_eigen(int n, double theta, double tol);
/// Both routes; they must agree to 10*tol (eigen route used for n <= 11).
double p_oracle(int n, double theta, double tol);

/// Maximizes p_oracle over theta in ((n-1)/n, 1) by a 64-point grid with
/// golden-section refinement; reports the achieving theta.
ThresholdResult p_of_n(int n, double tol = 1e-9);

/// Closed-form integrality gap in the all-ones direction; the k = 0 value
/// is optionally cross-checked by direct LPs.
GapResult gap_chipped(int n, int k, double rho, bool lp_check = false);

/// Reported external rank bound: n-1 for even n >= 4 and rho >= 1/n.
std::optional<int> cheung_upper(int n, double rho);

/// Largest rho with M_k(localizer_cropped(n, rho)) PSD.  Values above cap
/// are reported as the cap (enough for the millis grids).  The pencil
/// route solves one generalized eigenproblem instead of bisecting.
double cropped_level_threshold(int n, int k, double tol, bool use_pencil, double cap = 0.55);

struct FigureTable {
  std::string name;
  std::vector<std::string> comments;  // emitted as leading '#' lines
  std::string header;
  std::vector<std::string> rows;
};

struct FigureOptions {
  std::vector<int> fig4_n = {3, 6, 9, 12};
  double tol = 1e-9;
};

FigureTable figure_data(const std::string& which, const FigureOptions& opts = {});

void write_figure(std::ostream& os, const FigureTable& t);

}  // namespace liftproj
