#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "selector/error.hpp"
#include "selector/module_calc.hpp"
#include "selector/poly.hpp"
#include "selector/rational.hpp"
#include "selector/sperner.hpp"

namespace selector {

enum class Classification { identity, lower, upper, interior };

inline const char* classification_name(Classification c) {
  switch (c) {
    case Classification::identity: return "Identity";
    case Classification::lower: return "Lower";
    case Classification::upper: return "Upper";
    case Classification::interior: return "Interior";
  }
  return "Unknown";
}

// Interior reports carry a certified rational bracket [lo,hi] around the
// unique repellent fixed point; Lower pins omega=1 and Upper omega=0.
struct FixedPointReport {
  Classification cls = Classification::identity;
  Rational lo, hi;
  double omega = 0.0;
  double hprime_at_omega = 0.0;
  std::vector<double> alpha_witness;
};

inline Classification classify(const SpernerFamily& f) {
  if (is_identity_family(f)) return Classification::identity;
  bool singleton = has_singleton(f);
  bool common = common_intersection(f) != 0;
  if (singleton) return Classification::lower;  // singleton + common part forces identity
  if (common) return Classification::upper;
  return Classification::interior;
}

namespace detail {

// Certified bisection. sgn must be negative strictly left of the root and
// positive strictly right; brackets start at [2^-s, 1-2^-s] with s grown
// until the signs split. Exact rational endpoints throughout.
template <class SignFn>
std::pair<Rational, Rational> bracket_bisect(SignFn&& sgn, const Rational& tol) {
  Rational lo, hi;
  bool bracketed = false;
  for (int s = 2; s <= 64; ++s) {
    lo = Rational(1, Int(1) << s);
    hi = 1 - lo;
    int sl = sgn(lo), sh = sgn(hi);
    if (sl == 0) return {lo, lo};
    if (sh == 0) return {hi, hi};
    if (sl < 0 && sh > 0) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) throw std::logic_error("no sign change found on (0,1)");
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    int sm = sgn(mid);
    if (sm == 0) return {mid, mid};
    (sm < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

inline int sign_h_minus_t(const RationalPoly& h, const Rational& t) {
  return sign_of(eval(h, t) - t);
}

}  // namespace detail

// Equispaced alpha(t) = g(t)(1-t) / ((1-g(t)) t) samples; strictly increasing
// for Interior families, which is asserted here since it is a theorem.
inline std::vector<std::pair<Rational, Rational>> alpha_scan(const SpernerFamily& f,
                                                             int grid_size) {
  if (classify(f) != Classification::interior)
    fail(errc::not_interior_case, "alpha scan needs an Interior family");
  if (grid_size < 3) fail(errc::parameter_out_of_range, "grid size must be >= 3");
  RationalPoly g = sperner_g_of(module_inclusion_exclusion(f));
  std::vector<std::pair<Rational, Rational>> out;
  for (int i = 1; i <= grid_size; ++i) {
    Rational t(i, grid_size + 1);
    Rational gt = eval(g, t);
    Rational alpha = gt * (1 - t) / ((1 - gt) * t);
    if (!out.empty() && !(alpha > out.back().second))
      throw std::logic_error("alpha(t) failed to increase strictly");
    out.emplace_back(t, alpha);
  }
  return out;
}

// Locate omega_H. Interior: exact-sign bisection on h(t)-t, reporting the
// bracket, float midpoint, and the advisory repellence number h'(omega).
inline FixedPointReport sperner_point(const SpernerFamily& f, const Rational& tol) {
  if (!(tol > 0)) fail(errc::parameter_out_of_range, "tolerance must be positive");
  Classification cls = classify(f);
  if (cls == Classification::identity)
    fail(errc::identity_has_no_sperner_point, "projection module is the identity");
  RationalPoly h = module_inclusion_exclusion(f);
  RationalPoly hp = derivative(h);
  FixedPointReport rep;
  rep.cls = cls;
  if (cls == Classification::lower) {
    rep.lo = rep.hi = 1;
    rep.omega = 1.0;
    rep.hprime_at_omega = eval_float(hp, 1.0);
    return rep;
  }
  if (cls == Classification::upper) {
    rep.lo = rep.hi = 0;
    rep.omega = 0.0;
    rep.hprime_at_omega = eval_float(hp, 0.0);
    return rep;
  }
  auto [lo, hi] =
      detail::bracket_bisect([&](const Rational& t) { return detail::sign_h_minus_t(h, t); }, tol);
  rep.lo = lo;
  rep.hi = hi;
  rep.omega = to_double((lo + hi) / 2);
  rep.hprime_at_omega = eval_float(hp, rep.omega);
  if (!(rep.hprime_at_omega > 1.0))
    throw std::logic_error("interior fixed point not repellent");
  for (const auto& [t, a] : alpha_scan(f, 9)) rep.alpha_witness.push_back(to_double(a));
  return rep;
}

// Fixed point of h_{r:n} for 1 < r < n, with built-in sanity boxes:
// Hoeffding |omega - (2r-1)/(2n)| <= sqrt(ln n / n), the mirror symmetry
// omega_{r:n} + omega_{n-r+1:n} = 1, and omega_{2:n} >= 1/n^2 checked by the
// exact sign of h(1/n^2) - 1/n^2.
inline FixedPointReport order_stat_point(int r, int n, const Rational& tol) {
  if (r <= 1 || r >= n)
    fail(errc::extreme_order_statistic, "extreme order statistics have no interior point");
  if (!(tol > 0)) fail(errc::parameter_out_of_range, "tolerance must be positive");
  RationalPoly h = order_statistic_module(r, n);
  auto [lo, hi] =
      detail::bracket_bisect([&](const Rational& t) { return detail::sign_h_minus_t(h, t); }, tol);
  FixedPointReport rep;
  rep.cls = Classification::interior;
  rep.lo = lo;
  rep.hi = hi;
  rep.omega = to_double((lo + hi) / 2);
  rep.hprime_at_omega = eval_float(derivative(h), rep.omega);
  RationalPoly hm = order_statistic_module(n - r + 1, n);
  auto [mlo, mhi] = detail::bracket_bisect(
      [&](const Rational& t) { return detail::sign_h_minus_t(hm, t); }, tol);
  Rational sum = (lo + hi) / 2 + (mlo + mhi) / 2;
  if (boost::multiprecision::abs(Rational(sum - 1)) > 2 * tol)
    throw std::logic_error("order-statistic symmetry violated");
  double target = (2.0 * r - 1.0) / (2.0 * n);
  if (std::fabs(rep.omega - target) > std::sqrt(std::log(double(n)) / n))
    throw std::logic_error("Hoeffding box violated");
  if (r == 2) {
    Rational t0(1, Int(n) * n);
    if (detail::sign_h_minus_t(h, t0) > 0)
      throw std::logic_error("omega_{2:n} >= 1/n^2 violated");
  }
  return rep;
}

// Unique s in (0,1) with prod_j (1 - s^{alpha_j}) = 1 - s; omega = 1 - s.
// Signs are decided in integer arithmetic at dyadic points.
inline std::pair<double, double> zermelo_point(const std::vector<int>& alphas,
                                               const Rational& tol) {
  if (alphas.size() < 2) fail(errc::parameter_out_of_range, "need at least two blocks");
  for (int a : alphas) {
    if (a == 1) fail(errc::singleton_block, "block of size 1: no interior fixed point");
    if (a < 1) fail(errc::parameter_out_of_range, "block sizes must be >= 1");
  }
  if (!(tol > 0)) fail(errc::parameter_out_of_range, "tolerance must be positive");
  // f(s) = prod (1 - s^a_j) - (1 - s) is positive near 0 and negative near 1;
  // bisect on -f. With s = p/q: sign(-f) = sign((q-p) q^(A-1) - prod (q^a_j - p^a_j)),
  // A = sum a_j.
  auto sgn = [&](const Rational& s) {
    Int p = boost::multiprecision::numerator(s);
    Int q = boost::multiprecision::denominator(s);
    Int prod = 1;
    long long total = 0;
    for (int a : alphas) {
      prod *= boost::multiprecision::pow(q, a) - boost::multiprecision::pow(p, a);
      total += a;
    }
    Int rhs = (q - p) * boost::multiprecision::pow(q, static_cast<unsigned>(total - 1));
    return sign_of(Rational(rhs - prod));
  };
  auto [lo, hi] = detail::bracket_bisect(sgn, tol);
  double s = to_double((lo + hi) / 2);
  return {s, 1.0 - s};
}

// Fixed point of (1 - (1-t)^m)^k plus the two-sided decay bound
// (1/b) k^(-1/(m-1)) <= 1 - eta <= b k^(-1/(m-1)), b = 3 (ln m)^(1/(m-1)).
inline std::pair<double, bool> eta_km(int k, int m, const Rational& tol) {
  if (k < 2 || m < 2) fail(errc::parameter_out_of_range, "need k >= 2 and m >= 2");
  if (!(tol > 0)) fail(errc::parameter_out_of_range, "tolerance must be positive");
  // sign(h(t) - t) with t = p/q in integers: h = ((q^m - (q-p)^m)/q^m)^k.
  auto sgn = [&](const Rational& t) {
    Int p = boost::multiprecision::numerator(t);
    Int q = boost::multiprecision::denominator(t);
    Int v = boost::multiprecision::pow(q, m) - boost::multiprecision::pow(q - p, m);
    Int lhs = boost::multiprecision::pow(v, k);
    Int rhs = p * boost::multiprecision::pow(q, m * k - 1);
    return sign_of(Rational(lhs - rhs));
  };
  auto [lo, hi] = detail::bracket_bisect(sgn, tol);
  double eta = to_double((lo + hi) / 2);
  double decay = std::pow(double(k), -1.0 / (m - 1));
  double b = 3.0 * std::pow(std::log(double(m)), 1.0 / (m - 1));
  double u = 1.0 - eta;
  bool ok = decay / b <= u && u <= b * decay;
  return {eta, ok};
}

}  // namespace selector
