#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "liftproj/bits.hpp"
#include "liftproj/errors.hpp"
#include "liftproj/simplex.hpp"

namespace liftproj {

/// a0 + a^T x >= 0 over [0,1]^n.
struct Inequality {
  double a0 = 0.0;
  std::vector<double> a;
};

enum class PolyFamily { chipped, cropped, custom };

std::string family_name(PolyFamily f);

/// Explicit inequality system.  The 2n box facets come first, in the
/// order x_1>=0,...,x_n>=0, 1-x_1>=0,...,1-x_n>=0; cut inequalities
/// follow.  Order and content are part of the value (localizer output
/// depends on the description).
struct LinearDescription {
  int n = 0;
  PolyFamily family = PolyFamily::custom;
  double rho = 0.0;
  std::vector<Inequality> ineqs;

  int num_cuts() const { return static_cast<int>(ineqs.size()) - 2 * n; }
  const Inequality& cut(int i) const { return ineqs[2 * n + i]; }
};

/// [0,1]^n with one corner removed: sum x_i <= n - rho.
LinearDescription chipped(int n, double rho);

/// [0,1]^n with every corner removed at depth rho; 2^n cuts ordered by
/// the S-mask ascending.
LinearDescription cropped(int n, double rho);

bool contains(const LinearDescription& d, std::span<const double> x, double tol = 1e-9);

/// Membership of (y0; y) in the homogenization cone {(l; l x) : l >= 0, x in P}.
bool homogenized_contains(const LinearDescription& d, std::span<const double> yhat,
                          double tol = 1e-9);

/// 0/1 points of the description, as masks and as vectors (mask ascending).
std::vector<SubsetId> integer_point_masks(const LinearDescription& d);
std::vector<std::vector<double>> integer_points(const LinearDescription& d);

/// Integer hull of the chipped hypercube for non-integer rho: chipped(n, ceil(rho)).
LinearDescription integer_hull_chipped(int n, double rho);

/// Hypercube automorphism: coordinates are permuted first, then the
/// flagged ones are flipped (x_i -> 1 - x_i).
struct Automorphism {
  std::vector<int> perm;  // y_i = x_{perm[i]} before flips (0-based)
  SubsetId flip_mask = 0;

  static Automorphism identity(int n);
  Automorphism inverse() const;
  /// {perm[i] : i in s} — relabels subset masks through the permutation.
  SubsetId apply_to_set(SubsetId s) const;
};

std::vector<double> apply_automorphism(const Automorphism& g, std::span<const double> x);
LinearDescription apply_automorphism(const Automorphism& g, const LinearDescription& d);

/// Feasibility/optimization problems over a description.
LpProblem lp_over(const LinearDescription& d, std::vector<double> objective);

/// One inequality per line: `a0 a1 ... an`, 17 significant digits.
void write_description(std::ostream& os, const LinearDescription& d);

}  // namespace liftproj
