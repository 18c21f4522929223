#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace liftproj {

/// Subset of the ground set [n] encoded as a bit mask (element i -> bit i-1).
using SubsetId = std::uint32_t;

inline constexpr int kMaxGroundSet = 24;

inline int popcount(SubsetId s) { return std::popcount(s); }

inline SubsetId full_mask(int n) { return (n >= 32) ? ~SubsetId{0} : ((SubsetId{1} << n) - 1); }

/// Calls f(sub) for every submask of m, including m itself and 0.
template <typename F>
void for_each_submask(SubsetId m, F&& f) {
  SubsetId sub = m;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

/// Exact binomial coefficient as a double (fine for n <= 32).
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return std::round(r);
}

inline double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// All masks over [n] with the given popcount, ascending as integers.
inline std::vector<SubsetId> masks_with_popcount(int n, int k) {
  std::vector<SubsetId> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  SubsetId m = full_mask(k);  // smallest mask with k bits
  SubsetId limit = full_mask(n);
  while (m <= limit) {
    out.push_back(m);
    // Gosper's hack: next mask with the same popcount.
    SubsetId c = m & (~m + 1);
    SubsetId r = m + c;
    if (r > limit || r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

}  // namespace liftproj
