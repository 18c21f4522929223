#pragma once

#include <vector>

#include "liftproj/bits.hpp"
#include "liftproj/errors.hpp"
#include "liftproj/matrices.hpp"

namespace liftproj {

/// A real-valued function on the subsets of [n] with |S| <= level.
struct MomentVector {
  int n = 0;
  int level = 0;
  std::vector<double> v;  // indexed by mask, size 2^n

  MomentVector() = default;
  MomentVector(int n_, int level_);

  double at(SubsetId s) const {
    if (popcount(s) > level) throw ArgumentError("moment vector: value above level requested");
    return v[s];
  }
  double& ref(SubsetId s) { return v[s]; }
};

/// Moment matrix over A_k^+: entry [S|1, T|1] = y[S u T].
SymMatrix moment_matrix(const MomentVector& y, int k);

/// y[S] = theta^{|S|}.
MomentVector bernoulli_moments(int n, double theta);

/// u[S] = sum_{T >= S} (-1)^{|T\S|} y[T]; requires a full level-n vector.
MomentVector mobius_transform(const MomentVector& y);

/// Localizing vector of the cut of the chipped hypercube against the
/// theta-Bernoulli ansatz, together with its closed-form transform
/// coefficients (the generic transform must reproduce them).
struct Localizer {
  MomentVector w;
  MomentVector mobius;  // u[S] = (n - |S| - rho) theta^{|S|} (1-theta)^{n-|S|}
};

/// w[S] = ((n-|S|)(1-theta) - rho) * theta^{|S|}.
Localizer localizer_chipped(int n, double theta, double rho);

/// w[S] = (n - |S| - 2 rho) * 2^{-|S|-1}; the theta = 1/2 specialization.
MomentVector localizer_cropped(int n, double rho);

/// sum_{i=0}^{n-1} C(n,i) / ((n-i-rho) theta^i (1-theta)^{n-i}); evaluated
/// term-by-term in log space for n > 12.
double xi_norm_sq(int n, double theta, double rho);

/// (n+1) theta (1-theta)^n / (2 - [(n-1) theta + 2] (1-theta)^n).
double alphabound(int n, double theta);

/// n-by-n collapse of the top-level cropped localizer matrix: entry (i,j)
/// sums M_{n-1}(w) over the index pairs with |S| = i, |T| = j, computed
/// from the closed binomial formula.
SymMatrix collapsed_w(int n, double rho);

}  // namespace liftproj
