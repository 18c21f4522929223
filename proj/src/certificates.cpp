#include "liftproj/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace liftproj {

const ConditionRecord* CertificateReport::find(const std::string& name) const {
  for (const ConditionRecord& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> CertificateReport::failed_names() const {
  std::vector<std::string> out;
  for (const ConditionRecord& c : conditions)
    if (!c.pass) out.push_back(c.name);
  return out;
}

std::string CertificateReport::worst_failure() const {
  const ConditionRecord* worst = nullptr;
  for (const ConditionRecord& c : conditions)
    if (!c.pass && (!worst || c.worst > worst->worst)) worst = &c;
  return worst ? worst->name : "";
}

namespace {

struct ConditionTracker {
  ConditionRecord rec;
  explicit ConditionTracker(std::string name) { rec.name = std::move(name); }
  void violation(double v, const std::string& where) {
    if (v > rec.worst) {
      rec.worst = v;
      rec.offender = where;
    }
  }
  ConditionRecord done(double tol) {
    rec.pass = rec.worst <= tol;
    return rec;
  }
  /// For PSD-style conditions where pass/fail is decided externally.
  ConditionRecord done_with(bool pass) {
    rec.pass = pass;
    return rec;
  }
};

void finish(CertificateReport& rep) {
  rep.pass = true;
  for (const ConditionRecord& c : rep.conditions) rep.pass = rep.pass && c.pass;
}

std::uint64_t cyl_key(const Cylinder& c) {
  if (c.empty) return ~std::uint64_t{0};
  return (std::uint64_t(c.ones) << 24) | std::uint64_t(c.zeros);
}

}  // namespace

CertificateReport check_sa_plus(const SaPlusCertificate& cert, const LinearDescription& desc,
                                double tol) {
  const IndexFamily& fam = cert.family;
  const SymMatrix& Y = cert.Y;
  if (Y.dim != fam.size()) throw ArgumentError("check_sa_plus: matrix/family size mismatch");
  if (desc.n != cert.n) throw ArgumentError("check_sa_plus: ground-set mismatch");
  const int dim = fam.size();
  const int n = cert.n;

  CertificateReport rep;

  ConditionTracker c1("SA+1");
  c1.violation(std::fabs(Y.at(0, 0) - 1.0), "[F,F]");
  rep.conditions.push_back(c1.done(tol));

  // SA+2(i): the homogenized projection of every column lies in the cone.
  ConditionTracker c2i("SA+2i");
  std::vector<int> xrow(n);
  for (int i = 0; i < n; ++i) xrow[i] = fam.index_of(Cylinder{n, SubsetId{1} << i, 0, false});
  std::vector<double> yhat(n + 1);
  for (int b = 0; b < dim; ++b) {
    yhat[0] = Y.at(0, b);
    for (int i = 0; i < n; ++i) yhat[i + 1] = Y.at(xrow[i], b);
    double viol = std::max(0.0, -yhat[0]);
    int bad_ineq = -1;
    for (size_t q = 0; q < desc.ineqs.size(); ++q) {
      const Inequality& iq = desc.ineqs[q];
      double v = iq.a0 * yhat[0];
      for (int i = 0; i < n; ++i) v += iq.a[i] * yhat[i + 1];
      if (-v > viol) {
        viol = -v;
        bad_ineq = static_cast<int>(q);
      }
    }
    if (viol > 0)
      c2i.violation(viol, "alpha=" + fam[b].to_string() + ",ineq=" + std::to_string(bad_ineq));
  }
  rep.conditions.push_back(c2i.done(tol));

  ConditionTracker c2ii("SA+2ii");
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      if (Y.at(i, j) < 0)
        c2ii.violation(-Y.at(i, j), "[" + fam[i].to_string() + "," + fam[j].to_string() + "]");
  rep.conditions.push_back(c2ii.done(tol));

  // SA+3: column splitting along every free coordinate.
  ConditionTracker c3("SA+3");
  for (int a = 0; a < dim; ++a) {
    const Cylinder& base = fam[a];
    if (base.level() > cert.k - 1) continue;
    SubsetId fixed = base.ones | base.zeros;
    for (int j = 0; j < n; ++j) {
      SubsetId bit = SubsetId{1} << j;
      if (fixed & bit) continue;
      int c_one = fam.index_of(Cylinder{n, base.ones | bit, base.zeros, false});
      int c_zero = fam.index_of(Cylinder{n, base.ones, base.zeros | bit, false});
      for (int r = 0; r < dim; ++r) {
        double v = std::fabs(Y.at(r, c_one) + Y.at(r, c_zero) - Y.at(r, a));
        if (v > 0)
          c3.violation(v, "alpha=" + base.to_string() + ",j=" + std::to_string(j + 1) +
                              ",row=" + fam[r].to_string());
      }
    }
  }
  rep.conditions.push_back(c3.done(tol));

  // SA+4 / SA+5 over intersection classes.
  ConditionTracker c4("SA+4");
  struct Group {
    double lo, hi;
    int lo_i, lo_j, hi_i, hi_j;
  };
  std::map<std::uint64_t, Group> groups;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      Cylinder meet = cylinder_intersect(fam[i], fam[j]);
      double v = Y.at(i, j);
      if (meet.empty && std::fabs(v) > 0)
        c4.violation(std::fabs(v), "[" + fam[i].to_string() + "," + fam[j].to_string() + "]");
      auto [it, fresh] = groups.try_emplace(cyl_key(meet), Group{v, v, i, j, i, j});
      if (!fresh) {
        Group& g = it->second;
        if (v < g.lo) {
          g.lo = v;
          g.lo_i = i;
          g.lo_j = j;
        }
        if (v > g.hi) {
          g.hi = v;
          g.hi_i = i;
          g.hi_j = j;
        }
      }
    }
  }
  rep.conditions.push_back(c4.done(tol));
  ConditionTracker c5("SA+5");
  for (const auto& [key, g] : groups) {
    double spread = g.hi - g.lo;
    if (spread > 0)
      c5.violation(spread, "[" + fam[g.lo_i].to_string() + "," + fam[g.lo_j].to_string() +
                               "] vs [" + fam[g.hi_i].to_string() + "," +
                               fam[g.hi_j].to_string() + "]");
  }
  rep.conditions.push_back(c5.done(tol));

  ConditionTracker psd("PSD");
  EigenResult eig = eigenvalues(Y);
  psd.violation(std::max(0.0, -eig.min()), "lambda_min");
  rep.conditions.push_back(psd.done_with(eig.min() >= -tol * std::max(1.0, std::fabs(eig.max()))));

  finish(rep);
  return rep;
}

SaPlusCertificate build_sa_plus_prop3(int n, double rho) {
  if (n < 2) throw ArgumentError("build_sa_plus_prop3: n must be at least 2");
  if (!(rho > 0.0 && rho < 1.0)) throw ArgumentError("build_sa_plus_prop3: rho not in (0,1)");
  IndexFamily fam = family(n, n - 1, FamilyKind::cylinders);
  const double c = rho / (n * rho + 1.0 - rho);
  SymMatrix Y(fam.size());
  for (int i = 0; i < fam.size(); ++i) {
    for (int j = i; j < fam.size(); ++j) {
      Cylinder meet = cylinder_intersect(fam[i], fam[j]);
      double v = 0.0;
      if (!meet.empty) {
        int z = popcount(meet.zeros);
        if (z == 0)
          v = 1.0 - c * popcount(meet.ones);
        else if (z == 1)
          v = c;
      }
      Y.set(i, j, v);
    }
  }
  return SaPlusCertificate{n, n - 1, std::move(fam), std::move(Y)};
}

SaPlusCertificate build_sa_plus_thm13(int n, double rho, int k) {
  if (n < 2) throw ArgumentError("build_sa_plus_thm13: n must be at least 2");
  if (!(rho > 0.0 && rho < 1.0)) throw ArgumentError("build_sa_plus_thm13: rho not in (0,1)");
  if (k < 1 || k > n) throw ArgumentError("build_sa_plus_thm13: k out of range");
  const double denom = n - k + k * rho;
  MomentVector y(n, n);
  for (SubsetId s = 0; s < (SubsetId{1} << n); ++s) y.v[s] = 1.0 - popcount(s) * rho / denom;
  SymMatrix mk = moment_matrix(y, k);
  Matrix l = l_matrix(n, k, FamilyKind::ones);
  SymMatrix Y = congruence(l, mk);
  return SaPlusCertificate{n, k, family(n, k, FamilyKind::cylinders), std::move(Y)};
}

CertificateReport check_las(const LasCertificate& cert, double tol) {
  const IndexFamily& fam = cert.family;  // A_{k+1}^+
  const SymMatrix& Y = cert.Y;
  if (Y.dim != fam.size()) throw ArgumentError("check_las: matrix/family size mismatch");
  if (cert.desc.n != cert.n) throw ArgumentError("check_las: ground-set mismatch");
  const int n = cert.n;
  const int k = cert.k;

  CertificateReport rep;

  ConditionTracker c1("Las1");
  c1.violation(std::fabs(Y.at(0, 0) - 1.0), "[F,F]");
  rep.conditions.push_back(c1.done(tol));

  // Las2: one localizer per inequality of the description.
  IndexFamily sub = family(n, k, FamilyKind::ones);
  ConditionTracker c2("Las2");
  bool las2_pass = true;
  for (size_t q = 0; q < cert.desc.ineqs.size(); ++q) {
    const Inequality& iq = cert.desc.ineqs[q];
    SymMatrix loc(sub.size());
    for (int i = 0; i < sub.size(); ++i) {
      for (int j = i; j < sub.size(); ++j) {
        SubsetId S = sub[i].ones, T = sub[j].ones;
        double v = iq.a0 * Y.at(fam.find_ones(S), fam.find_ones(T));
        for (int t = 0; t < n; ++t) {
          SubsetId bit = SubsetId{1} << t;
          v += iq.a[t] * Y.at(fam.find_ones(S | bit), fam.find_ones(T | bit));
        }
        loc.set(i, j, v);
      }
    }
    EigenResult eig = eigenvalues(loc);
    bool ok = eig.min() >= -tol * std::max(1.0, std::fabs(eig.max()));
    las2_pass = las2_pass && ok;
    if (eig.min() < 0) c2.violation(-eig.min(), "ineq=" + std::to_string(q));
  }
  rep.conditions.push_back(c2.done_with(las2_pass));

  // Las3 over union classes of the level-k index pairs.
  ConditionTracker c3("Las3");
  struct Group {
    double lo, hi;
    SubsetId lo_s, lo_t, hi_s, hi_t;
  };
  std::map<SubsetId, Group> groups;
  for (int i = 0; i < sub.size(); ++i) {
    for (int j = i; j < sub.size(); ++j) {
      SubsetId S = sub[i].ones, T = sub[j].ones;
      double v = Y.at(fam.find_ones(S), fam.find_ones(T));
      auto [it, fresh] = groups.try_emplace(S | T, Group{v, v, S, T, S, T});
      if (!fresh) {
        Group& g = it->second;
        if (v < g.lo) {
          g.lo = v;
          g.lo_s = S;
          g.lo_t = T;
        }
        if (v > g.hi) {
          g.hi = v;
          g.hi_s = S;
          g.hi_t = T;
        }
      }
    }
  }
  for (const auto& [key, g] : groups) {
    double spread = g.hi - g.lo;
    if (spread > 0)
      c3.violation(spread, "union mask " + std::to_string(key));
  }
  rep.conditions.push_back(c3.done(tol));

  ConditionTracker psd("PSD");
  EigenResult eig = eigenvalues(Y);
  psd.violation(std::max(0.0, -eig.min()), "lambda_min");
  rep.conditions.push_back(psd.done_with(eig.min() >= -tol * std::max(1.0, std::fabs(eig.max()))));

  finish(rep);
  return rep;
}

LasCertificate build_las_chipped(int n, double theta, double rho) {
  MomentVector y = bernoulli_moments(n, theta);
  SymMatrix Y = moment_matrix(y, n);
  return LasCertificate{n, n - 1, family(n, n, FamilyKind::ones), std::move(Y), chipped(n, rho)};
}

LasCertificate build_las_cropped(int n, int k, double rho) {
  if (n > 12) throw SizeError("build_las_cropped: n > 12");
  if (k < 1 || k > n - 1) throw ArgumentError("build_las_cropped: k out of range");
  MomentVector y = bernoulli_moments(n, 0.5);
  SymMatrix Y = moment_matrix(y, k + 1);
  return LasCertificate{n, k, family(n, k + 1, FamilyKind::ones), std::move(Y), cropped(n, rho)};
}

LasCertificate transport_las(const LasCertificate& cert, const Automorphism& g) {
  const int n = cert.n;
  if (static_cast<int>(g.perm.size()) != n) throw ArgumentError("transport_las: bad automorphism");
  const IndexFamily& fam = cert.family;
  SymMatrix Y(fam.size());
  // Coordinate swaps: pure index relabeling.
  for (int i = 0; i < fam.size(); ++i)
    for (int j = i; j < fam.size(); ++j)
      Y.set(i, j, cert.Y.at(fam.find_ones(g.apply_to_set(fam[i].ones)),
                            fam.find_ones(g.apply_to_set(fam[j].ones))));
  // Flips: inclusion-exclusion congruence, one coordinate at a time.
  for (int f = 0; f < n; ++f) {
    if (!((g.flip_mask >> f) & 1)) continue;
    SubsetId bit = SubsetId{1} << f;
    SymMatrix next(fam.size());
    for (int i = 0; i < fam.size(); ++i) {
      for (int j = i; j < fam.size(); ++j) {
        SubsetId S = fam[i].ones, T = fam[j].ones;
        double v;
        if ((S & bit) && (T & bit)) {
          v = Y.at(fam.find_ones(S & ~bit), fam.find_ones(T & ~bit)) -
              Y.at(fam.find_ones(S), fam.find_ones(T & ~bit)) -
              Y.at(fam.find_ones(S & ~bit), fam.find_ones(T)) + Y.at(i, j);
        } else if (S & bit) {
          v = Y.at(fam.find_ones(S & ~bit), j) - Y.at(i, j);
        } else if (T & bit) {
          v = Y.at(i, fam.find_ones(T & ~bit)) - Y.at(i, j);
        } else {
          v = Y.at(i, j);
        }
        next.set(i, j, v);
      }
    }
    Y = std::move(next);
  }
  return LasCertificate{n, cert.k, fam, std::move(Y), apply_automorphism(g, cert.desc)};
}

std::vector<double> projected_point(const SaPlusCertificate& cert) {
  std::vector<double> x(cert.n);
  for (int i = 0; i < cert.n; ++i)
    x[i] = cert.Y.at(cert.family.index_of(Cylinder{cert.n, SubsetId{1} << i, 0, false}), 0);
  return x;
}

std::vector<double> projected_point(const LasCertificate& cert) {
  std::vector<double> x(cert.n);
  for (int i = 0; i < cert.n; ++i)
    x[i] = cert.Y.at(cert.family.find_ones(SubsetId{1} << i), 0);
  return x;
}

std::vector<double> xij(std::span<const double> x, SubsetId I, SubsetId J) {
  if (I & J) throw ArgumentError("xij: index sets overlap");
  std::vector<double> out(x.begin(), x.end());
  for (size_t i = 0; i < out.size(); ++i) {
    SubsetId bit = SubsetId{1} << i;
    if (I & bit) out[i] = 1.0;
    if (J & bit) out[i] = 0.0;
  }
  return out;
}

SubsetId support_fractional(std::span<const double> x) {
  SubsetId s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0.0 && x[i] < 1.0) s |= SubsetId{1} << i;
  return s;
}

bool sa_plus_sufficient(const LinearDescription& desc, std::span<const double> x, int k) {
  if (k < 0 || k > desc.n) throw ArgumentError("sa_plus_sufficient: k out of range");
  SubsetId sup = support_fractional(x);
  bool ok = true;
  for_each_submask(sup, [&](SubsetId I) {
    if (!ok || popcount(I) > k) return;
    SubsetId rest = sup & ~I;
    for_each_submask(rest, [&](SubsetId J) {
      if (!ok || popcount(I) + popcount(J) > k) return;
      if (!contains(desc, xij(x, I, J))) ok = false;
    });
  });
  return ok;
}

double tilde_ls_max_symmetric(int n, double rho, int k) {
  if (k < 1 || k > n) throw ArgumentError("tilde_ls_max_symmetric: k out of range");
  if (!(rho > 0.0 && rho < n) || rho == std::floor(rho))
    throw ArgumentError("tilde_ls_max_symmetric: rho must be non-integer in (0, n)");
  if (k == n) return (n - std::ceil(rho)) / n;

  // Vertical segments {(i/k, v) : 0 <= v <= cap_i} for each feasible
  // integral pattern weight i; the answer is where the diagonal leaves
  // their convex hull.
  struct Pt {
    double x, y;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= k; ++i) {
    if (i > n - rho) break;
    double cap = std::min(1.0, (n - i - rho) / (n - k));
    pts.push_back({double(i) / k, cap});
  }
  // Upper hull (points already ascending in x).
  std::vector<Pt> hull;
  for (const Pt& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull[hull.size() - 1];
      if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  double theta = std::min(hull[0].x, hull[0].y);
  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    const Pt& a = hull[e];
    const Pt& b = hull[e + 1];
    if (b.y >= b.x) {
      theta = b.x;
      continue;
    }
    double denom = (b.x - a.x) - (b.y - a.y);
    double t = (a.y - a.x) / denom;
    theta = a.x + t * (b.x - a.x);
    break;
  }
  return theta;
}

bool tilde_ls_membership_lp(const LinearDescription& desc, std::span<const double> x, int k,
                            bool symmetric_shortcut) {
  const int n = desc.n;
  if (static_cast<int>(x.size()) != n) throw ArgumentError("tilde_ls: dimension mismatch");
  if (k < 1 || k > n) throw ArgumentError("tilde_ls: k out of range");
  if (symmetric_shortcut) {
    if (desc.family == PolyFamily::custom)
      throw ArgumentError("tilde_ls: shortcut needs a coordinate-symmetric description");
    for (int i = 1; i < n; ++i)
      if (x[i] != x[0]) throw ArgumentError("tilde_ls: shortcut needs x proportional to e");
  } else if (n > 6) {
    throw SizeError("tilde_ls: n > 6 without the symmetric shortcut");
  }

  std::vector<SubsetId> index_sets =
      symmetric_shortcut ? std::vector<SubsetId>{full_mask(k)} : masks_with_popcount(n, k);

  for (SubsetId S : index_sets) {
    // Disjunctive LP: one homogenized block per 0/1 pattern on S.
    std::vector<SubsetId> patterns;
    for_each_submask(S, [&](SubsetId t) { patterns.push_back(t); });
    std::sort(patterns.begin(), patterns.end());
    std::vector<int> freev;  // coordinates outside S
    for (int i = 0; i < n; ++i)
      if (!((S >> i) & 1)) freev.push_back(i);
    const int nb = static_cast<int>(patterns.size());
    const int nf = static_cast<int>(freev.size());
    const int nvars = nb * (1 + nf);  // lambda_T, then z_{T,i}
    auto lam = [&](int b) { return b * (1 + nf); };
    auto zv = [&](int b, int fi) { return b * (1 + nf) + 1 + fi; };

    LpProblem p;
    p.num_vars = nvars;
    p.nonneg.assign(nvars, true);
    for (int b = 0; b < nb; ++b) {
      for (const Inequality& iq : desc.ineqs) {
        std::vector<double> row(nvars, 0.0);
        double lam_coef = iq.a0;
        for (int i = 0; i < n; ++i)
          if ((S >> i) & 1 && (patterns[b] >> i) & 1) lam_coef += iq.a[i];
        row[lam(b)] = lam_coef;
        for (int fi = 0; fi < nf; ++fi) row[zv(b, fi)] = iq.a[freev[fi]];
        p.add_ge(0.0, std::move(row));
      }
    }
    for (int i = 0; i < n; ++i) {
      std::vector<double> row(nvars, 0.0);
      if ((S >> i) & 1) {
        for (int b = 0; b < nb; ++b)
          if ((patterns[b] >> i) & 1) row[lam(b)] = 1.0;
      } else {
        int fi = static_cast<int>(std::lower_bound(freev.begin(), freev.end(), i) - freev.begin());
        for (int b = 0; b < nb; ++b) row[zv(b, fi)] = 1.0;
      }
      p.add_eq(-x[i], std::move(row));
    }
    std::vector<double> sum_row(nvars, 0.0);
    for (int b = 0; b < nb; ++b) sum_row[lam(b)] = 1.0;
    p.add_eq(-1.0, std::move(sum_row));

    if (!lp_feasible(p)) return false;
  }
  return true;
}

std::vector<Obstruction> enumerate_obstructions(const LinearDescription& desc, int k) {
  if (desc.n > 16) throw SizeError("enumerate_obstructions: n > 16");
  if (k < 0) throw ArgumentError("enumerate_obstructions: k must be nonnegative");
  std::vector<Obstruction> out;
  for (int q = 0; q < desc.num_cuts(); ++q) {
    int idx = 2 * desc.n + q;
    const Inequality& iq = desc.ineqs[idx];
    // <= orientation: (-a)^T x <= a0 with nonnegative row and positive rhs.
    if (!(iq.a0 > 0.0))
      throw ArgumentError("enumerate_obstructions: right-hand side not positive");
    SubsetId supp = 0;
    for (int i = 0; i < desc.n; ++i) {
      if (iq.a[i] > 0.0)
        throw ArgumentError("enumerate_obstructions: negative-coefficient description");
      if (iq.a[i] != 0.0) supp |= SubsetId{1} << i;
    }
    int supp_size = popcount(supp);
    for (SubsetId o = 1; o <= full_mask(desc.n); ++o) {
      if ((o & ~supp) == 0) {
        double coefsum = 0.0;
        for (int i = 0; i < desc.n; ++i)
          if ((o >> i) & 1) coefsum += -iq.a[i];
        int osz = popcount(o);
        if (coefsum > iq.a0 && (osz <= k + 1 || osz >= supp_size - (k + 1)))
          out.push_back(Obstruction{o, idx, osz <= k + 1});
      }
      if (o == full_mask(desc.n)) break;
    }
  }
  return out;
}

LinearDescription refined_polytope(const LinearDescription& desc, int k) {
  LinearDescription out = desc;
  out.family = PolyFamily::custom;
  for (const Obstruction& ob : enumerate_obstructions(desc, k)) {
    Inequality cut{double(popcount(ob.members)) - 1.0, std::vector<double>(desc.n, 0.0)};
    for (int i = 0; i < desc.n; ++i)
      if ((ob.members >> i) & 1) cut.a[i] = -1.0;
    out.ineqs.push_back(std::move(cut));
  }
  return out;
}

static void require_fractional(double rho, const char* who) {
  if (rho == std::floor(rho)) throw ArgumentError(std::string(who) + ": rho must be non-integer");
}

int sa_plus_rank_upper(int n, double rho) {
  if (n < 2) throw ArgumentError("sa_plus_rank_upper: n must be at least 2");
  if (!(rho > 0.0 && rho < n)) throw ArgumentError("sa_plus_rank_upper: rho out of (0, n)");
  require_fractional(rho, "sa_plus_rank_upper");
  return n - static_cast<int>(std::ceil(rho)) + 1;
}

int sa_plus_rank_lower(int n, double rho) {
  if (n < 2) throw ArgumentError("sa_plus_rank_lower: n must be at least 2");
  if (!(rho > 0.0 && rho < n)) throw ArgumentError("sa_plus_rank_lower: rho out of (0, n)");
  require_fractional(rho, "sa_plus_rank_lower");
  double ceil_rho = std::ceil(rho);
  double bound = n * (ceil_rho - rho) / ceil_rho;
  int maxk = static_cast<int>(std::floor(bound));
  if (maxk >= bound) maxk -= 1;  // strict inequality
  if (maxk < 0) maxk = 0;
  return 1 + maxk;
}

int tilde_ls_rank(int n, double rho) {
  if (n < 2) throw ArgumentError("tilde_ls_rank: n must be at least 2");
  if (!(rho > 0.0 && rho < n - 1)) throw ArgumentError("tilde_ls_rank: rho out of (0, n-1)");
  require_fractional(rho, "tilde_ls_rank");
  return n;
}

BzBound bz_lower(int n) {
  if (n < 5) throw ArgumentError("bz_lower: n must be at least 5");
  double s = std::sqrt(double(n));
  int fl = static_cast<int>(std::floor(s));
  if (fl * fl == n) throw ArgumentError("bz_lower: n must not be a perfect square");
  double eps = 0.5 * (1.0 - std::ceil(s) * (s - 1.0) / n);
  return BzBound{fl + eps, static_cast<int>(std::floor((s + 1.0) / 2.0))};
}

double sa_plus_iterate_cropped(int n, double rho, int k) {
  if (!(rho > 0.0 && rho <= 0.5))
    throw ArgumentError("sa_plus_iterate_cropped: rho out of (0, 1/2]");
  if (k < 0 || k > n) throw ArgumentError("sa_plus_iterate_cropped: k out of range");
  return rho + k / 2.0;
}

int sa_plus_rank_cropped(int n, double rho) {
  if (!(rho > 0.0 && rho <= 0.5))
    throw ArgumentError("sa_plus_rank_cropped: rho out of (0, 1/2]");
  // smallest k with rho + k/2 > n/2
  int k = static_cast<int>(std::floor(n - 2.0 * rho)) + 1;
  return std::min(k, n);
}

static void write_family_and_matrix(std::ostream& os, const IndexFamily& fam,
                                    const SymMatrix& Y) {
  for (int i = 0; i < fam.size(); ++i)
    os << fam[i].ones << ' ' << fam[i].zeros << '\n';
  write_csv(os, Y);
}

void write_certificate(std::ostream& os, const SaPlusCertificate& cert) {
  os << "sa-plus " << cert.k << ' ' << cert.n << '\n';
  write_family_and_matrix(os, cert.family, cert.Y);
}

void write_certificate(std::ostream& os, const LasCertificate& cert) {
  os << "las " << cert.k << ' ' << cert.n << '\n';
  write_family_and_matrix(os, cert.family, cert.Y);
}

StoredCertificate read_certificate(std::istream& is) {
  StoredCertificate sc;
  if (!(is >> sc.op >> sc.k >> sc.n)) throw ArgumentError("certificate: bad header");
  IndexFamily fam;
  if (sc.op == "sa-plus")
    fam = family(sc.n, sc.k, FamilyKind::cylinders);
  else if (sc.op == "las")
    fam = family(sc.n, sc.k + 1, FamilyKind::ones);
  else
    throw ArgumentError("certificate: unknown operator " + sc.op);
  for (int i = 0; i < fam.size(); ++i) {
    SubsetId ones, zeros;
    if (!(is >> ones >> zeros)) throw ArgumentError("certificate: truncated family");
    if (ones != fam[i].ones || zeros != fam[i].zeros)
      throw ArgumentError("certificate: family does not match the canonical ordering");
  }
  std::string line;
  std::getline(is, line);  // consume end of last family line
  sc.Y = SymMatrix(fam.size());
  Matrix raw(fam.size(), fam.size());
  for (int i = 0; i < fam.size(); ++i) {
    if (!std::getline(is, line)) throw ArgumentError("certificate: truncated matrix");
    std::stringstream ss(line);
    std::string cell;
    for (int j = 0; j < fam.size(); ++j) {
      if (!std::getline(ss, cell, ',')) throw ArgumentError("certificate: short matrix row");
      raw.at(i, j) = std::stod(cell);
    }
  }
  sc.Y = SymMatrix::symmetrized(raw);
  return sc;
}

}  // namespace liftproj
