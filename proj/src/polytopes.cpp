#include "liftproj/polytopes.hpp"

#include <cmath>
#include <ostream>

#include "liftproj/matrices.hpp"

namespace liftproj {

std::string family_name(PolyFamily f) {
  switch (f) {
    case PolyFamily::chipped: return "chipped";
    case PolyFamily::cropped: return "cropped";
    default: return "custom";
  }
}

static std::vector<Inequality> box_facets(int n) {
  std::vector<Inequality> out;
  out.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    Inequality lo{0.0, std::vector<double>(n, 0.0)};
    lo.a[i] = 1.0;
    out.push_back(std::move(lo));
  }
  for (int i = 0; i < n; ++i) {
    Inequality hi{1.0, std::vector<double>(n, 0.0)};
    hi.a[i] = -1.0;
    out.push_back(std::move(hi));
  }
  return out;
}

LinearDescription chipped(int n, double rho) {
  if (n < 1) throw ArgumentError("chipped: n must be positive");
  if (!(rho > 0.0 && rho < n)) throw ArgumentError("chipped: rho must lie in (0, n)");
  LinearDescription d;
  d.n = n;
  d.family = PolyFamily::chipped;
  d.rho = rho;
  d.ineqs = box_facets(n);
  Inequality cut{double(n) - rho, std::vector<double>(n, -1.0)};
  d.ineqs.push_back(std::move(cut));
  return d;
}

LinearDescription cropped(int n, double rho) {
  if (n < 1) throw ArgumentError("cropped: n must be positive");
  if (!(rho > 0.0)) throw ArgumentError("cropped: rho must be positive");
  if (n > 16) throw SizeError("cropped: n > 16");
  LinearDescription d;
  d.n = n;
  d.family = PolyFamily::cropped;
  d.rho = rho;
  d.ineqs = box_facets(n);
  for (SubsetId s = 0; s <= full_mask(n); ++s) {
    // sum_{i in S}(1-x_i) + sum_{i not in S} x_i >= rho
    Inequality cut{double(popcount(s)) - rho, std::vector<double>(n, 0.0)};
    for (int i = 0; i < n; ++i) cut.a[i] = (s >> i) & 1 ? -1.0 : 1.0;
    d.ineqs.push_back(std::move(cut));
    if (s == full_mask(n)) break;
  }
  return d;
}

bool contains(const LinearDescription& d, std::span<const double> x, double tol) {
  if (static_cast<int>(x.size()) != d.n) throw ArgumentError("contains: dimension mismatch");
  for (const Inequality& q : d.ineqs) {
    double v = q.a0;
    for (int i = 0; i < d.n; ++i) v += q.a[i] * x[i];
    if (v < -tol) return false;
  }
  return true;
}

bool homogenized_contains(const LinearDescription& d, std::span<const double> yhat,
                          double tol) {
  if (static_cast<int>(yhat.size()) != d.n + 1)
    throw ArgumentError("homogenized_contains: dimension mismatch");
  if (yhat[0] < -tol) return false;
  for (const Inequality& q : d.ineqs) {
    double v = q.a0 * yhat[0];
    for (int i = 0; i < d.n; ++i) v += q.a[i] * yhat[i + 1];
    if (v < -tol) return false;
  }
  return true;
}

std::vector<SubsetId> integer_point_masks(const LinearDescription& d) {
  if (d.n > 16) throw SizeError("integer_point_masks: n > 16");
  std::vector<SubsetId> out;
  std::vector<double> x(d.n);
  for (SubsetId m = 0; m <= full_mask(d.n); ++m) {
    for (int i = 0; i < d.n; ++i) x[i] = (m >> i) & 1 ? 1.0 : 0.0;
    if (contains(d, x)) out.push_back(m);
    if (m == full_mask(d.n)) break;
  }
  return out;
}

std::vector<std::vector<double>> integer_points(const LinearDescription& d) {
  std::vector<std::vector<double>> out;
  for (SubsetId m : integer_point_masks(d)) {
    std::vector<double> x(d.n);
    for (int i = 0; i < d.n; ++i) x[i] = (m >> i) & 1 ? 1.0 : 0.0;
    out.push_back(std::move(x));
  }
  return out;
}

LinearDescription integer_hull_chipped(int n, double rho) {
  if (rho == std::floor(rho)) throw ArgumentError("integer_hull_chipped: rho must be non-integer");
  return chipped(n, std::ceil(rho));
}

Automorphism Automorphism::identity(int n) {
  Automorphism g;
  g.perm.resize(n);
  for (int i = 0; i < n; ++i) g.perm[i] = i;
  return g;
}

Automorphism Automorphism::inverse() const {
  int n = static_cast<int>(perm.size());
  Automorphism h;
  h.perm.resize(n);
  for (int i = 0; i < n; ++i) h.perm[perm[i]] = i;
  for (int j = 0; j < n; ++j)
    if ((flip_mask >> h.perm[j]) & 1) h.flip_mask |= SubsetId{1} << j;
  return h;
}

SubsetId Automorphism::apply_to_set(SubsetId s) const {
  SubsetId out = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if ((s >> i) & 1) out |= SubsetId{1} << perm[i];
  return out;
}

std::vector<double> apply_automorphism(const Automorphism& g, std::span<const double> x) {
  int n = static_cast<int>(g.perm.size());
  if (static_cast<int>(x.size()) != n) throw ArgumentError("automorphism: dimension mismatch");
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double v = x[g.perm[i]];
    y[i] = ((g.flip_mask >> i) & 1) ? 1.0 - v : v;
  }
  return y;
}

LinearDescription apply_automorphism(const Automorphism& g, const LinearDescription& d) {
  int n = d.n;
  if (static_cast<int>(g.perm.size()) != n)
    throw ArgumentError("automorphism: dimension mismatch");
  LinearDescription out;
  out.n = n;
  out.family = PolyFamily::custom;
  out.rho = d.rho;
  out.ineqs.reserve(d.ineqs.size());
  bool moved = g.flip_mask != 0;
  for (int i = 0; i < n; ++i) moved = moved || g.perm[i] != i;
  if (!moved) {
    out = d;
    return out;
  }
  for (const Inequality& q : d.ineqs) {
    Inequality r{q.a0, std::vector<double>(n, 0.0)};
    for (int i = 0; i < n; ++i) r.a[i] = q.a[g.perm[i]];
    for (int i = 0; i < n; ++i) {
      if ((g.flip_mask >> i) & 1) {
        r.a0 += r.a[i];
        r.a[i] = -r.a[i];
      }
    }
    out.ineqs.push_back(std::move(r));
  }
  return out;
}

LpProblem lp_over(const LinearDescription& d, std::vector<double> objective) {
  LpProblem p;
  p.num_vars = d.n;
  for (const Inequality& q : d.ineqs) p.add_ge(q.a0, q.a);
  p.objective = std::move(objective);
  return p;
}

void write_description(std::ostream& os, const LinearDescription& d) {
  for (const Inequality& q : d.ineqs) {
    os << format_double(q.a0);
    for (double v : q.a) os << ' ' << format_double(v);
    os << '\n';
  }
}

}  // namespace liftproj
