#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "selector/error.hpp"
#include "selector/poly.hpp"
#include "selector/rational.hpp"
#include "selector/sperner.hpp"

namespace selector {

// h and its reflection g(x) = 1 - h(1-x), tagged with the construction route.
struct ModulePair {
  RationalPoly h, g;
  enum class Source { cube, inclusion_exclusion, recursion, closed_form } source;
};

inline RationalPoly sperner_g_of(const RationalPoly& h) {
  // g(x) = 1 - h(1-x)
  RationalPoly one_minus_x({Rational(1), Rational(-1)});
  return sub(poly_const(Rational(1)), compose(h, one_minus_x));
}

// h(t) = sum c_k t^k (1-t)^(n-k) for a count sequence c_0..c_n. Feeding the
// a-profile yields h; feeding the b-profile yields g.
inline RationalPoly module_from_counts(const std::vector<long long>& c, int n) {
  if (static_cast<int>(c.size()) != n + 1)
    fail(errc::invalid_profile, "count sequence must have n+1 entries");
  if (c[0] != 0 || c[n] != 1)
    fail(errc::invalid_profile, "profile must start at 0 and end at 1");
  for (int k = 0; k <= n; ++k)
    if (c[k] < 0 || Int(c[k]) > binomial(n, k))
      fail(errc::invalid_profile, "count " + std::to_string(c[k]) +
                                      " outside [0, C(n,k)] at k=" + std::to_string(k));
  RationalPoly acc;
  for (int k = 0; k <= n; ++k) {
    if (c[k] == 0) continue;
    RationalPoly term = one_minus_t_pow(static_cast<unsigned>(n - k));
    std::vector<Rational> shifted(term.coeffs.size() + k, Rational(0));
    for (std::size_t i = 0; i < term.coeffs.size(); ++i)
      shifted[i + k] = term.coeffs[i] * Rational(c[k]);
    acc = add(acc, RationalPoly(std::move(shifted)));
  }
  return acc;
}

inline RationalPoly module_from_profile(const Profile& pr) {
  for (int k = 0; k <= pr.n; ++k)
    if (Int(pr.a[pr.n - k]) != binomial(pr.n, k) - Int(pr.b[k]))
      fail(errc::invalid_profile, "a/b duality violated at k=" + std::to_string(k));
  return module_from_counts(pr.a, pr.n);
}

// h(t) = 1 - sum (1-t)^{|A_i|} + sum (1-t)^{|A_i u A_j|} - ...
inline RationalPoly module_inclusion_exclusion(const SpernerFamily& f) {
  int k = f.k();
  if (k > 20) fail(errc::family_too_large, "inclusion-exclusion capped at 20 sets");
  std::vector<std::uint32_t> uni(std::size_t(1) << k, 0u);
  std::vector<long long> count(f.n + 1, 0);  // signed multiplicity per union size
  for (std::uint32_t T = 1; T < (1u << k); ++T) {
    std::uint32_t low = T & (~T + 1u);
    int idx = std::countr_zero(low);
    uni[T] = uni[T ^ low] | f.sets[idx];
    count[std::popcount(uni[T])] += (std::popcount(T) & 1) ? 1 : -1;
  }
  RationalPoly acc = poly_const(Rational(1));
  for (int u = 0; u <= f.n; ++u) {
    if (count[u] == 0) continue;
    acc = sub(acc, scale(one_minus_t_pow(static_cast<unsigned>(u)), Rational(count[u])));
  }
  return acc;
}

namespace detail {

inline RationalPoly module_recurse(const DerivedFamily& d) {
  if (d.tag == DerivedFamily::Tag::const_zero) return poly_zero();
  if (d.tag == DerivedFamily::Tag::const_one) return poly_const(Rational(1));
  const SpernerFamily& f = d.fam;
  if (f.k() == 1)  // single set: h = 1 - (1-t)^|A|
    return sub(poly_const(Rational(1)),
               one_minus_t_pow(static_cast<unsigned>(std::popcount(f.sets[0]))));
  // Pivot: most frequent element, ties to the smallest.
  std::vector<int> freq(f.n, 0);
  for (std::uint32_t s : f.sets)
    for (int j = 0; j < f.n; ++j)
      if (s & (1u << j)) ++freq[j];
  int r = 0;
  for (int j = 1; j < f.n; ++j)
    if (freq[j] > freq[r]) r = j;
  ++r;  // 1-based
  RationalPoly ht = module_recurse(derive(f, r, true));
  RationalPoly hm = module_recurse(derive(f, r, false));
  // h = t*h_tack + (1-t)*h_minus
  return add(mul(poly_t(), ht), mul(RationalPoly({Rational(1), Rational(-1)}), hm));
}

}  // namespace detail

// h = t*h_{S tack r} + (1-t)*h_{S minus r}; the split is pivot-independent,
// which the tests exercise for every choice of r.
inline RationalPoly module_by_recursion(const SpernerFamily& f) {
  return detail::module_recurse(DerivedFamily::of(f));
}

// h_{r:n} = sum_{j=r}^{n} B_j^(n)
inline RationalPoly order_statistic_module(int r, int n) {
  if (n < 1 || r < 1 || r > n)
    fail(errc::index_out_of_range, "order statistic needs 1 <= r <= n");
  BernsteinCoeffs b;
  b.n = n;
  b.beta.assign(n + 1, Rational(0));
  for (int j = r; j <= n; ++j) b.beta[j] = 1;
  return from_bernstein(b);
}

// prod_j (1 - (1-t)^{a_j}) for pairwise disjoint blocks of the given sizes.
inline RationalPoly zermelo_module(const std::vector<int>& sizes) {
  if (sizes.empty()) fail(errc::empty_sizes, "no block sizes given");
  RationalPoly acc = poly_const(Rational(1));
  for (int a : sizes) {
    if (a < 1) fail(errc::parameter_out_of_range, "block sizes must be >= 1");
    acc = mul(acc, sub(poly_const(Rational(1)), one_minus_t_pow(static_cast<unsigned>(a))));
  }
  return acc;
}

// h'(0) = |intersection of all sets|, h'(1) = number of singletons; at most
// one of the two is nonzero. Cross-checked against derivative(h).
inline std::pair<int, int> endpoint_derivatives(const SpernerFamily& f) {
  if (is_identity_family(f))
    fail(errc::projection_excluded, "projection: both endpoint derivatives are 1");
  int d0 = std::popcount(common_intersection(f));
  int d1 = 0;
  for (std::uint32_t s : f.sets)
    if (std::popcount(s) == 1) ++d1;
  RationalPoly hp = derivative(module_inclusion_exclusion(f));
  if (eval(hp, Rational(0)) != d0 || eval(hp, Rational(1)) != d1)
    throw std::logic_error("endpoint derivative mismatch against exact h'");
  return {d0, d1};
}

// P(H(Bern(p_1)..Bern(p_n)) = 0) by inclusion-exclusion over the family.
inline Rational stochastic_logic_probability(const SpernerFamily& f,
                                             const std::vector<Rational>& p) {
  if (static_cast<int>(p.size()) != f.n)
    fail(errc::dimension_mismatch, "need one probability per coordinate");
  for (const auto& x : p)
    if (x < 0 || x > 1) fail(errc::probability_out_of_range, "probabilities must lie in [0,1]");
  int k = f.k();
  std::vector<std::uint32_t> uni(std::size_t(1) << k, 0u);
  std::map<std::uint32_t, long long> count;  // signed multiplicity per union mask
  for (std::uint32_t T = 1; T < (1u << k); ++T) {
    std::uint32_t low = T & (~T + 1u);
    uni[T] = uni[T ^ low] | f.sets[std::countr_zero(low)];
    count[uni[T]] += (std::popcount(T) & 1) ? 1 : -1;
  }
  Rational acc = 1;
  for (const auto& [mask, c] : count) {
    if (c == 0) continue;
    Rational prod = 1;
    for (int j = 0; j < f.n; ++j)
      if (mask & (1u << j)) prod *= 1 - p[j];
    acc -= Rational(c) * prod;
  }
  return acc;
}

// g(t) = t*g1(t) + (1-t)*g0(t), split on coordinate 1. The identity family
// {{1}} gives (1, 0); a family ignoring coordinate 1 gives g1 = g0 = g.
inline std::pair<RationalPoly, RationalPoly> g_split(const SpernerFamily& f) {
  auto g_of = [](const DerivedFamily& d) {
    if (d.tag == DerivedFamily::Tag::const_zero) return poly_zero();
    if (d.tag == DerivedFamily::Tag::const_one) return poly_const(Rational(1));
    return sperner_g_of(module_inclusion_exclusion(d.fam));
  };
  return {g_of(restrict(f, 1, 1)), g_of(restrict(f, 1, 0))};
}

inline ModulePair make_module(const SpernerFamily& f) {
  ModulePair mp;
  mp.h = module_inclusion_exclusion(f);
  mp.g = sperner_g_of(mp.h);
  mp.source = ModulePair::Source::inclusion_exclusion;
  return mp;
}

}  // namespace selector
