#include "liftproj/moments.hpp"

#include <cmath>

#include "liftproj/cylinders.hpp"

namespace liftproj {

MomentVector::MomentVector(int n_, int level_) : n(n_), level(level_) {
  if (n < 0 || n > 16) throw SizeError("moment vector: n out of range");
  if (level < 0 || level > n) throw ArgumentError("moment vector: bad level");
  v.assign(size_t{1} << n, 0.0);
}

SymMatrix moment_matrix(const MomentVector& y, int k) {
  if (k < 0 || k > y.n) throw ArgumentError("moment_matrix: bad level");
  if (y.level < std::min(y.n, 2 * k))
    throw ArgumentError("moment_matrix: vector not defined up to min(n, 2k)");
  IndexFamily fam = family(y.n, k, FamilyKind::ones);
  SymMatrix m(fam.size());
  for (int i = 0; i < fam.size(); ++i)
    for (int j = i; j < fam.size(); ++j)
      m.set(i, j, y.at(fam[i].ones | fam[j].ones));
  return m;
}

MomentVector bernoulli_moments(int n, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw ArgumentError("bernoulli_moments: theta not in (0,1)");
  MomentVector y(n, n);
  std::vector<double> pow(n + 1, 1.0);
  for (int i = 1; i <= n; ++i) pow[i] = pow[i - 1] * theta;
  for (SubsetId s = 0; s < (SubsetId{1} << n); ++s) y.v[s] = pow[popcount(s)];
  return y;
}

MomentVector mobius_transform(const MomentVector& y) {
  if (y.level != y.n) throw ArgumentError("mobius_transform: full level-n vector required");
  MomentVector u = y;
  for (int b = 0; b < y.n; ++b) {
    SubsetId bit = SubsetId{1} << b;
    for (SubsetId s = 0; s < (SubsetId{1} << y.n); ++s)
      if (!(s & bit)) u.v[s] -= u.v[s | bit];
  }
  return u;
}

Localizer localizer_chipped(int n, double theta, double rho) {
  if (!(theta > 0.0 && theta < 1.0)) throw ArgumentError("localizer_chipped: theta not in (0,1)");
  if (!(rho > 0.0)) throw ArgumentError("localizer_chipped: rho must be positive");
  Localizer loc{MomentVector(n, n), MomentVector(n, n)};
  for (SubsetId s = 0; s < (SubsetId{1} << n); ++s) {
    int c = popcount(s);
    double tp = std::pow(theta, c);
    loc.w.v[s] = ((n - c) * (1.0 - theta) - rho) * tp;
    loc.mobius.v[s] = (n - c - rho) * tp * std::pow(1.0 - theta, n - c);
  }
  return loc;
}

MomentVector localizer_cropped(int n, double rho) {
  if (!(rho > 0.0)) throw ArgumentError("localizer_cropped: rho must be positive");
  MomentVector w(n, n);
  for (SubsetId s = 0; s < (SubsetId{1} << n); ++s) {
    int c = popcount(s);
    w.v[s] = (n - c - 2.0 * rho) * std::ldexp(1.0, -c - 1);
  }
  return w;
}

double xi_norm_sq(int n, double theta, double rho) {
  if (!(theta > 0.0 && theta < 1.0)) throw ArgumentError("xi_norm_sq: theta not in (0,1)");
  if (!(rho > 0.0 && rho < 1.0)) throw ArgumentError("xi_norm_sq: rho not in (0,1)");
  double total = 0.0;
  if (n <= 12) {
    for (int i = 0; i < n; ++i)
      total += binomial(n, i) /
               ((n - i - rho) * std::pow(theta, i) * std::pow(1.0 - theta, n - i));
  } else {
    double lt = std::log(theta), l1t = std::log1p(-theta);
    for (int i = 0; i < n; ++i)
      total += std::exp(log_binomial(n, i) - std::log(n - i - rho) - i * lt - (n - i) * l1t);
  }
  return total;
}

double alphabound(int n, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw ArgumentError("alphabound: theta not in (0,1)");
  double q = std::pow(1.0 - theta, n);
  return (n + 1) * theta * q / (2.0 - ((n - 1) * theta + 2.0) * q);
}

SymMatrix collapsed_w(int n, double rho) {
  if (n < 2) throw ArgumentError("collapsed_w: n must be at least 2");
  if (!(rho > 0.0)) throw ArgumentError("collapsed_w: rho must be positive");
  SymMatrix w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s1 = 0.0, s2 = 0.0;
      for (int k = 0; k <= std::min(i, j); ++k) {
        double prod = binomial(i, k) * binomial(j, k);
        s1 += prod / binomial(n - 1, k);
        s2 += prod / binomial(n, k);
      }
      double v = std::ldexp(1.0, -i - j - 1) * n * binomial(n - 1, i) * binomial(n - 1, j) * s1 -
                 rho * std::ldexp(1.0, -i - j) * binomial(n, i) * binomial(n, j) * s2;
      w.set(i, j, v);
    }
  }
  return w;
}

}  // namespace liftproj
