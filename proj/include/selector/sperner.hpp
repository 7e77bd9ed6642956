#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "selector/error.hpp"
#include "selector/rational.hpp"

namespace selector {

// Antichain of nonempty subsets of {1..n}, each set a bitmask (bit i-1 is
// element i), sorted by (cardinality, numeric mask). Immutable after build.
struct SpernerFamily {
  int n = 0;
  std::vector<std::uint32_t> sets;

  int k() const { return static_cast<int>(sets.size()); }
  bool operator==(const SpernerFamily& o) const { return n == o.n && sets == o.sets; }
  bool operator!=(const SpernerFamily& o) const { return !(*this == o); }
};

struct BooleanPoint {
  int n = 0;
  std::uint32_t bits = 0;
};

// a[k] = #points with k zeros and H=0; b[k] = #points with k ones and H=1.
struct Profile {
  int n = 0;
  std::vector<long long> a, b;
};

// A family derived by pinning or deleting a coordinate; the constant tags
// stand for the degenerate modules h == 0 and h == 1.
struct DerivedFamily {
  enum class Tag { family, const_zero, const_one } tag = Tag::family;
  SpernerFamily fam;

  static DerivedFamily zero() { return {Tag::const_zero, {}}; }
  static DerivedFamily one() { return {Tag::const_one, {}}; }
  static DerivedFamily of(SpernerFamily f) { return {Tag::family, std::move(f)}; }
};

namespace detail {

inline void sort_canonical(std::vector<std::uint32_t>& sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

// Keep inclusion-minimal sets; input may contain duplicates.
inline std::vector<std::uint32_t> minimalize(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : sets) {
    bool dominated = false;
    for (std::uint32_t t : sets)
      if (t != s && (t & s) == t) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  sort_canonical(out);
  return out;
}

// Drop coordinate r (1-based) from a mask not containing it, shifting the
// higher coordinates down by one.
inline std::uint32_t drop_coordinate(std::uint32_t s, int r) {
  std::uint32_t low = s & ((1u << (r - 1)) - 1u);
  std::uint32_t high = (s >> r) << (r - 1);
  return low | high;
}

}  // namespace detail

inline SpernerFamily canonicalize(const std::vector<std::uint32_t>& raw_sets, int n) {
  if (n < 1 || n > 20)
    fail(errc::ground_too_large, "ground-set size " + std::to_string(n) + " outside 1..20");
  if (raw_sets.empty()) fail(errc::empty_family, "no sets given");
  for (std::uint32_t s : raw_sets) {
    if (s == 0) fail(errc::empty_set, "empty set in input");
    if (s >= (1u << n))
      fail(errc::coordinate_out_of_range, "set uses an element above n=" + std::to_string(n));
  }
  SpernerFamily f;
  f.n = n;
  f.sets = detail::minimalize(raw_sets);
  if (f.sets.empty()) fail(errc::empty_family, "no sets remain after minimalization");
  if (f.k() > 20)
    fail(errc::family_too_large, "family has " + std::to_string(f.k()) + " sets, cap is 20");
  return f;
}

// Convenience for 1-based element lists.
inline SpernerFamily make_family(const std::vector<std::vector<int>>& sets, int n) {
  std::vector<std::uint32_t> masks;
  for (const auto& s : sets) {
    std::uint32_t m = 0;
    for (int e : s) {
      if (e < 1 || e > n)
        fail(errc::coordinate_out_of_range, "element " + std::to_string(e) + " outside 1..n");
      m |= 1u << (e - 1);
    }
    masks.push_back(m);
  }
  return canonicalize(masks, n);
}

// H(x) = max over sets of min over elements; value is always one of the
// coordinates. Returns (value, smallest 1-based coordinate attaining it).
template <class T>
std::pair<T, int> evaluate(const SpernerFamily& f, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != f.n)
    fail(errc::dimension_mismatch, "point has " + std::to_string(x.size()) +
                                       " coordinates, family ground is " + std::to_string(f.n));
  bool first = true;
  T best{};
  for (std::uint32_t s : f.sets) {
    bool inner_first = true;
    T inner{};
    for (int j = 0; j < f.n; ++j)
      if (s & (1u << j)) {
        if (inner_first || x[j] < inner) inner = x[j];
        inner_first = false;
      }
    if (first || inner > best) best = inner;
    first = false;
  }
  int idx = 0;
  for (int j = 0; j < f.n; ++j)
    if (x[j] == best) {
      idx = j + 1;
      break;
    }
  return {best, idx};
}

// Boolean fast path: H on a bitmask point.
inline int evaluate_bits(const SpernerFamily& f, std::uint32_t bits) {
  for (std::uint32_t s : f.sets)
    if ((bits & s) == s) return 1;
  return 0;
}

inline std::pair<int, int> evaluate(const SpernerFamily& f, const BooleanPoint& p) {
  if (p.n != f.n) fail(errc::dimension_mismatch, "point dimension differs from family ground");
  int v = evaluate_bits(f, p.bits);
  int idx = 0;
  for (int j = 0; j < f.n; ++j)
    if (((p.bits >> j) & 1u) == static_cast<std::uint32_t>(v)) {
      idx = j + 1;
      break;
    }
  return {v, idx};
}

// Full 2^n cube sweep.
inline Profile profile(const SpernerFamily& f) {
  Profile pr;
  pr.n = f.n;
  pr.a.assign(f.n + 1, 0);
  pr.b.assign(f.n + 1, 0);
  for (std::uint32_t m = 0; m < (1u << f.n); ++m) {
    int ones = std::popcount(m);
    if (evaluate_bits(f, m))
      ++pr.b[ones];
    else
      ++pr.a[f.n - ones];
  }
  return pr;
}

inline DerivedFamily derive(const SpernerFamily& f, int r, bool tack) {
  if (r < 1 || r > f.n)
    fail(errc::coordinate_out_of_range, "coordinate " + std::to_string(r) + " outside 1..n");
  std::uint32_t bit = 1u << (r - 1);
  if (tack) {
    std::vector<std::uint32_t> kept;
    for (std::uint32_t s : f.sets)
      if (!(s & bit)) kept.push_back(s);
    if (kept.empty()) return DerivedFamily::one();  // r lies in every set
    return DerivedFamily::of(SpernerFamily{f.n, std::move(kept)});
  }
  // minus: delete r everywhere, then re-minimalize.
  for (std::uint32_t s : f.sets)
    if (s == bit) return DerivedFamily::zero();  // {r} present
  std::vector<std::uint32_t> stripped;
  for (std::uint32_t s : f.sets) stripped.push_back(s & ~bit);
  return DerivedFamily::of(SpernerFamily{f.n, detail::minimalize(stripped)});
}

// Statistic with coordinate r pinned to bit, on ground {1..n-1} (surviving
// coordinates relabeled preserving order).
inline DerivedFamily restrict(const SpernerFamily& f, int r, int bit) {
  if (r < 1 || r > f.n)
    fail(errc::coordinate_out_of_range, "coordinate " + std::to_string(r) + " outside 1..n");
  std::uint32_t rb = 1u << (r - 1);
  if (bit) {
    for (std::uint32_t s : f.sets)
      if (s == rb) return DerivedFamily::one();  // {r} forces H=1 when x_r=1
    std::vector<std::uint32_t> stripped;
    for (std::uint32_t s : f.sets) stripped.push_back(detail::drop_coordinate(s & ~rb, r));
    return DerivedFamily::of(SpernerFamily{f.n - 1, detail::minimalize(stripped)});
  }
  std::vector<std::uint32_t> kept;
  for (std::uint32_t s : f.sets)
    if (!(s & rb)) kept.push_back(detail::drop_coordinate(s, r));
  if (kept.empty()) return DerivedFamily::zero();
  detail::sort_canonical(kept);
  return DerivedFamily::of(SpernerFamily{f.n - 1, std::move(kept)});
}

// Family of minimal transversals. A transversal is minimal iff no single
// element can be dropped; brute force over all 2^n candidates.
inline SpernerFamily transversal_dual(const SpernerFamily& f) {
  auto hits_all = [&](std::uint32_t t) {
    for (std::uint32_t s : f.sets)
      if (!(s & t)) return false;
    return true;
  };
  std::vector<std::uint32_t> duals;
  for (std::uint32_t t = 1; t < (1u << f.n); ++t) {
    if (!hits_all(t)) continue;
    bool minimal = true;
    for (int j = 0; j < f.n && minimal; ++j)
      if (t & (1u << j))
        if (hits_all(t & ~(1u << j))) minimal = false;
    if (minimal) duals.push_back(t);
  }
  detail::sort_canonical(duals);
  return SpernerFamily{f.n, std::move(duals)};
}

// (M, b) with t^b <= h(t) <= 1-(1-t)^M: M = smallest set size, b = smallest
// transversal size.
inline std::pair<int, int> bounds_exponents(const SpernerFamily& f) {
  int M = f.n;
  for (std::uint32_t s : f.sets) M = std::min(M, std::popcount(s));
  int b = f.n;
  for (std::uint32_t t = 1; t < (1u << f.n); ++t) {
    bool ok = true;
    for (std::uint32_t s : f.sets)
      if (!(s & t)) {
        ok = false;
        break;
      }
    if (ok) b = std::min(b, std::popcount(t));
  }
  return {M, b};
}

// I_p(H) = sum over the cube of mu_p(B) * #boundary edges at B; equals g'(p)
// by Russo's lemma. Exact rational.
inline Rational total_influence(const SpernerFamily& f, const Rational& p) {
  if (!(p > 0 && p < 1)) fail(errc::probability_out_of_range, "p must lie in (0,1)");
  std::uint32_t size = 1u << f.n;
  std::vector<char> h(size);
  for (std::uint32_t m = 0; m < size; ++m) h[m] = static_cast<char>(evaluate_bits(f, m));
  std::vector<Rational> pp(f.n + 1), qq(f.n + 1);
  pp[0] = qq[0] = 1;
  for (int i = 1; i <= f.n; ++i) {
    pp[i] = pp[i - 1] * p;
    qq[i] = qq[i - 1] * (1 - p);
  }
  Rational total = 0;
  for (std::uint32_t m = 0; m < size; ++m) {
    int flips = 0;
    for (int j = 0; j < f.n; ++j)
      if (h[m] != h[m ^ (1u << j)]) ++flips;
    if (flips) {
      int ones = std::popcount(m);
      total += pp[ones] * qq[f.n - ones] * flips;
    }
  }
  return total;
}

// Minimal true sets of a monotone table (indexed by bitmask, size 2^n).
inline SpernerFamily from_truth_table(const std::vector<int>& table, int n) {
  if (n < 1 || n > 20)
    fail(errc::ground_too_large, "ground-set size " + std::to_string(n) + " outside 1..20");
  std::uint32_t size = 1u << n;
  if (table.size() != size)
    fail(errc::dimension_mismatch, "table must have 2^n entries");
  bool any0 = false, any1 = false;
  for (std::uint32_t m = 0; m < size; ++m) (table[m] ? any1 : any0) = true;
  if (!any0 || !any1) fail(errc::degenerate_constant, "table is constant");
  for (std::uint32_t m = 0; m < size; ++m)
    for (int j = 0; j < n; ++j)
      if (!(m & (1u << j)) && table[m] > table[m | (1u << j)])
        fail(errc::not_monotone, "witness pair: F(" + std::to_string(m) + ") > F(" +
                                     std::to_string(m | (1u << j)) + ") with the first mask "
                                     "contained in the second");
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m = 1; m < size; ++m) {
    if (!table[m]) continue;
    bool is_minimal = true;
    for (int j = 0; j < n && is_minimal; ++j)
      if ((m & (1u << j)) && table[m & ~(1u << j)]) is_minimal = false;
    if (is_minimal) minimal.push_back(m);
  }
  detail::sort_canonical(minimal);
  return SpernerFamily{n, std::move(minimal)};
}

// Brute force over coordinate permutations; n <= 8 keeps this at 8! remaps.
inline bool are_isomorphic(const SpernerFamily& f, const SpernerFamily& g) {
  if (f.n != g.n) fail(errc::dimension_mismatch, "families live on different ground sets");
  if (f.n > 8)
    fail(errc::ground_too_large_for_isomorphism, "isomorphism search capped at n=8");
  if (f.k() != g.k()) return false;
  for (int i = 0; i < f.k(); ++i)
    if (std::popcount(f.sets[i]) != std::popcount(g.sets[i])) return false;
  std::vector<int> perm(f.n);
  for (int i = 0; i < f.n; ++i) perm[i] = i;
  do {
    std::vector<std::uint32_t> mapped;
    mapped.reserve(f.sets.size());
    for (std::uint32_t s : f.sets) {
      std::uint32_t m = 0;
      for (int j = 0; j < f.n; ++j)
        if (s & (1u << j)) m |= 1u << perm[j];
      mapped.push_back(m);
    }
    detail::sort_canonical(mapped);
    if (mapped == g.sets) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Classification helpers shared by the fixed-point module.
inline bool has_singleton(const SpernerFamily& f) {
  for (std::uint32_t s : f.sets)
    if (std::popcount(s) == 1) return true;
  return false;
}

inline std::uint32_t common_intersection(const SpernerFamily& f) {
  std::uint32_t acc = ~0u;
  for (std::uint32_t s : f.sets) acc &= s;
  return acc & ((1u << f.n) - 1u);
}

inline bool is_identity_family(const SpernerFamily& f) {
  return f.k() == 1 && std::popcount(f.sets[0]) == 1;
}

}  // namespace selector
