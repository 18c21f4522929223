#include "liftproj/cylinders.hpp"

#include <algorithm>

#include "liftproj/matrices.hpp"

namespace liftproj {

std::string Cylinder::to_string() const {
  if (empty) return "empty";
  if (is_full()) return "F";
  std::string s;
  auto list = [&](SubsetId m) {
    std::string r = "{";
    bool first = true;
    for (int i = 0; i < n; ++i)
      if (m & (SubsetId{1} << i)) {
        if (!first) r += ',';
        r += std::to_string(i + 1);
        first = false;
      }
    return r + "}";
  };
  if (ones) s += list(ones) + "|1";
  if (ones && zeros) s += "&";
  if (zeros) s += list(zeros) + "|0";
  return s;
}

Cylinder cylinder_intersect(const Cylinder& a, const Cylinder& b) {
  if (a.n != b.n) throw ArgumentError("cylinder_intersect: mismatched ground sets");
  if (a.empty || b.empty) return Cylinder::empty_set(a.n);
  SubsetId ones = a.ones | b.ones;
  SubsetId zeros = a.zeros | b.zeros;
  if (ones & zeros) return Cylinder::empty_set(a.n);
  return Cylinder{a.n, ones, zeros, false};
}

static std::uint64_t pos_key(const Cylinder& c) {
  return (std::uint64_t(c.ones) << 24) | std::uint64_t(c.zeros);
}

IndexFamily::IndexFamily(int n, int level, FamilyKind kind, std::vector<Cylinder> elems)
    : n_(n), level_(level), kind_(kind), elems_(std::move(elems)) {
  pos_.reserve(elems_.size() * 2);
  for (int i = 0; i < size(); ++i) pos_.emplace(pos_key(elems_[i]), i);
}

int IndexFamily::find(const Cylinder& c) const {
  if (c.empty || c.n != n_) return -1;
  auto it = pos_.find(pos_key(c));
  return it == pos_.end() ? -1 : it->second;
}

int IndexFamily::index_of(const Cylinder& c) const {
  int i = find(c);
  if (i < 0) throw ArgumentError("index_of: cylinder not in family: " + c.to_string());
  return i;
}

IndexFamily family(int n, int level, FamilyKind kind) {
  if (n < 0 || n > kMaxGroundSet) throw ArgumentError("family: ground set out of range");
  if (level < 0 || level > n) throw ArgumentError("family: level out of range");
  std::vector<Cylinder> elems;
  for (int lvl = 0; lvl <= level; ++lvl) {
    std::vector<Cylinder> layer;
    if (kind == FamilyKind::ones) {
      for (SubsetId s : masks_with_popcount(n, lvl)) layer.push_back(Cylinder{n, s, 0, false});
    } else if (kind == FamilyKind::zeros) {
      for (SubsetId s : masks_with_popcount(n, lvl)) layer.push_back(Cylinder{n, 0, s, false});
    } else {
      for (int so = 0; so <= lvl; ++so) {
        for (SubsetId ones : masks_with_popcount(n, so)) {
          SubsetId rest = full_mask(n) & ~ones;
          // zeros: submasks of rest with popcount lvl-so
          int need = lvl - so;
          for_each_submask(rest, [&](SubsetId z) {
            if (popcount(z) == need) layer.push_back(Cylinder{n, ones, z, false});
          });
        }
      }
      std::sort(layer.begin(), layer.end(), [](const Cylinder& a, const Cylinder& b) {
        return a.ones != b.ones ? a.ones < b.ones : a.zeros < b.zeros;
      });
    }
    elems.insert(elems.end(), layer.begin(), layer.end());
  }
  return IndexFamily(n, level, kind, std::move(elems));
}

Matrix zeta_matrix(int n) {
  if (n > 16) throw SizeError("zeta_matrix: n > 16");
  IndexFamily fam = family(n, n, FamilyKind::ones);
  Matrix z(fam.size(), fam.size());
  for (int i = 0; i < fam.size(); ++i)
    for (int j = 0; j < fam.size(); ++j)
      if ((fam[i].ones & ~fam[j].ones) == 0) z.at(i, j) = 1.0;
  return z;
}

Matrix mobius_matrix(int n) {
  if (n > 16) throw SizeError("mobius_matrix: n > 16");
  IndexFamily fam = family(n, n, FamilyKind::ones);
  Matrix m(fam.size(), fam.size());
  for (int i = 0; i < fam.size(); ++i)
    for (int j = 0; j < fam.size(); ++j) {
      SubsetId s = fam[i].ones, t = fam[j].ones;
      if ((s & ~t) == 0) m.at(i, j) = (popcount(t & ~s) % 2 == 0) ? 1.0 : -1.0;
    }
  return m;
}

Matrix l_matrix(int n, int k, FamilyKind target) {
  if (k > n) throw ArgumentError("l_matrix: k > n");
  if (target != FamilyKind::ones && target != FamilyKind::zeros)
    throw ArgumentError("l_matrix: target must be a pure family");
  IndexFamily rows = family(n, k, FamilyKind::cylinders);
  IndexFamily cols = family(n, k, target);
  Matrix l(rows.size(), cols.size());
  for (int r = 0; r < rows.size(); ++r) {
    const Cylinder& c = rows[r];
    SubsetId base = (target == FamilyKind::ones) ? c.ones : c.zeros;
    SubsetId extra = (target == FamilyKind::ones) ? c.zeros : c.ones;
    for_each_submask(extra, [&](SubsetId add) {
      Cylinder col = (target == FamilyKind::ones) ? Cylinder{n, base | add, 0, false}
                                                  : Cylinder{n, 0, base | add, false};
      l.at(r, cols.index_of(col)) = (popcount(add) % 2 == 0) ? 1.0 : -1.0;
    });
  }
  return l;
}

Matrix u_matrix(int n, int level) {
  if (level > n) throw ArgumentError("u_matrix: level > n");
  IndexFamily rows = family(n, level, FamilyKind::ones);
  IndexFamily cols = family(n, level, FamilyKind::cylinders);
  Matrix u(rows.size(), cols.size());
  for (int c = 0; c < cols.size(); ++c) {
    const Cylinder& col = cols[c];
    for_each_submask(col.zeros, [&](SubsetId add) {
      SubsetId s = col.ones | add;
      int r = rows.find_ones(s);
      if (r >= 0) u.at(r, c) = (popcount(add) % 2 == 0) ? 1.0 : -1.0;
    });
  }
  return u;
}

}  // namespace liftproj
