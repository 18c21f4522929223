#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "liftproj/bits.hpp"
#include "liftproj/errors.hpp"
#include "liftproj/matrices_fwd.hpp"

namespace liftproj {

/// A partial 0/1 assignment: the points of {0,1}^n with coordinates in
/// `ones` fixed to 1 and coordinates in `zeros` fixed to 0.  The whole
/// space is (0, 0); a contradictory assignment collapses to a single
/// canonical empty value so that equality is a plain mask comparison.
struct Cylinder {
  int n = 0;
  SubsetId ones = 0;
  SubsetId zeros = 0;
  bool empty = false;

  static Cylinder full(int n) { return Cylinder{n, 0, 0, false}; }

  static Cylinder empty_set(int n) { return Cylinder{n, 0, 0, true}; }

  static Cylinder make(int n, SubsetId ones, SubsetId zeros) {
    if (n < 0 || n > kMaxGroundSet) throw ArgumentError("cylinder: ground set out of range");
    SubsetId univ = full_mask(n);
    if ((ones & ~univ) || (zeros & ~univ))
      throw ArgumentError("cylinder: mask uses bits beyond the ground set");
    if (ones & zeros) return empty_set(n);
    return Cylinder{n, ones, zeros, false};
  }

  int level() const { return popcount(ones) + popcount(zeros); }
  bool is_full() const { return !empty && ones == 0 && zeros == 0; }

  friend bool operator==(const Cylinder& a, const Cylinder& b) {
    return a.n == b.n && a.empty == b.empty && a.ones == b.ones && a.zeros == b.zeros;
  }

  std::string to_string() const;
};

/// Set intersection of two cylinders over the same ground set.
Cylinder cylinder_intersect(const Cylinder& a, const Cylinder& b);

enum class FamilyKind {
  cylinders,  // all S|1 n T|0 with |S|+|T| <= level
  ones,       // all S|1 with |S| <= level
  zeros,      // all S|0 with |S| <= level
};

/// An ordered, duplicate-free family of cylinders with reverse lookup.
/// Ordering is deterministic: ascending by |S|+|T|, ties broken by the
/// (ones, zeros) mask pair; the full space comes first and, for the
/// pure-ones family at level n, the all-ones set comes last.
class IndexFamily {
 public:
  IndexFamily() : n_(0), level_(0), kind_(FamilyKind::cylinders) {}
  IndexFamily(int n, int level, FamilyKind kind, std::vector<Cylinder> elems);

  int n() const { return n_; }
  int level() const { return level_; }
  FamilyKind kind() const { return kind_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Cylinder& operator[](int i) const { return elems_[i]; }
  const std::vector<Cylinder>& elements() const { return elems_; }

  /// Position of a cylinder, or -1 if absent (empty cylinders are never members).
  int find(const Cylinder& c) const;
  /// Position of a cylinder; throws if absent.
  int index_of(const Cylinder& c) const;
  /// Position of the pure-ones cylinder S|1; -1 if absent.
  int find_ones(SubsetId s) const { return find(Cylinder{n_, s, 0, false}); }

 private:
  int n_, level_;
  FamilyKind kind_;
  std::vector<Cylinder> elems_;
  std::unordered_map<std::uint64_t, int> pos_;
};

IndexFamily family(int n, int level, FamilyKind kind);

/// Subset-inclusion matrix over the full pure-ones family: Z[S,T] = 1 iff S <= T.
Matrix zeta_matrix(int n);
/// Inverse of the zeta matrix: M[S,T] = (-1)^{|T\S|} iff S <= T.
Matrix mobius_matrix(int n);

/// Inclusion-exclusion change of basis from cylinders at level k to pure
/// sign-set columns.  For the ones target, row S|1 n T|0 carries
/// (-1)^{|U\S|} at every column U|1 with S <= U <= S u T; for the zeros
/// target, (-1)^{|U\T|} at every column U|0 with T <= U <= S u T.  The
/// extreme column U = S u T carries (-1)^{|T|} for the ones target and
/// (-1)^{|S|} for the zeros target.
Matrix l_matrix(int n, int k, FamilyKind target);

/// Lifting matrix over A_l^+ x A_l: entry [S|1, T|1 n W|0] is
/// (-1)^{|S\T|} when T <= S <= T u W, zero otherwise.
Matrix u_matrix(int n, int level);

}  // namespace liftproj
