#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "selector/error.hpp"
#include "selector/rational.hpp"

namespace selector {

// Univariate polynomial over Q, monomial basis, coeffs[k] multiplies t^k.
// Canonical form: no stored trailing zeros; the zero polynomial is empty.
struct RationalPoly {
  std::vector<Rational> coeffs;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational coeff(std::size_t k) const {
    return k < coeffs.size() ? coeffs[k] : Rational(0);
  }
  bool operator==(const RationalPoly& o) const { return coeffs == o.coeffs; }
  bool operator!=(const RationalPoly& o) const { return !(*this == o); }
};

inline RationalPoly poly_zero() { return RationalPoly{}; }
inline RationalPoly poly_const(const Rational& c) { return RationalPoly({c}); }
inline RationalPoly poly_t() { return RationalPoly({Rational(0), Rational(1)}); }

inline RationalPoly add(const RationalPoly& p, const RationalPoly& q) {
  std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
  return RationalPoly(std::move(c));
}

inline RationalPoly sub(const RationalPoly& p, const RationalPoly& q) {
  std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] -= q.coeffs[i];
  return RationalPoly(std::move(c));
}

inline RationalPoly mul(const RationalPoly& p, const RationalPoly& q) {
  if (p.is_zero() || q.is_zero()) return poly_zero();
  std::vector<Rational> c(p.coeffs.size() + q.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) c[i + j] += p.coeffs[i] * q.coeffs[j];
  return RationalPoly(std::move(c));
}

inline RationalPoly scale(const RationalPoly& p, const Rational& s) {
  std::vector<Rational> c = p.coeffs;
  for (auto& x : c) x *= s;
  return RationalPoly(std::move(c));
}

// (1-t)^e expanded.
inline RationalPoly one_minus_t_pow(unsigned e) {
  std::vector<Rational> c(e + 1);
  for (unsigned i = 0; i <= e; ++i) {
    c[i] = Rational(binomial(static_cast<int>(e), static_cast<int>(i)));
    if (i & 1u) c[i] = -c[i];
  }
  return RationalPoly(std::move(c));
}

inline Rational eval(const RationalPoly& p, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * t + p.coeffs[i];
  return acc;
}

// Horner in double; the shadow of eval for plotting and iteration.
inline double eval_float(const RationalPoly& p, double t) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * t + to_double(p.coeffs[i]);
  return acc;
}

inline RationalPoly derivative(const RationalPoly& p) {
  if (p.coeffs.size() <= 1) return poly_zero();
  std::vector<Rational> c(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = p.coeffs[i] * Rational(i);
  return RationalPoly(std::move(c));
}

// p(q(t)). Guarded: the iteration module never composes symbolically, so any
// legitimate degree product here is tiny.
inline RationalPoly compose(const RationalPoly& p, const RationalPoly& q) {
  long dp = std::max(p.degree(), 0), dq = std::max(q.degree(), 0);
  if (dp * dq > 4096)
    fail(errc::composition_degree_overflow,
         "compose degree product " + std::to_string(dp * dq) + " exceeds 4096");
  RationalPoly acc;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    acc = mul(acc, q);
    if (p.coeffs[i] != 0) acc = add(acc, poly_const(p.coeffs[i]));
  }
  return acc;
}

// Degree-n Bernstein coordinates beta_0..beta_n.
struct BernsteinCoeffs {
  int n = 0;
  std::vector<Rational> beta;
};

inline RationalPoly from_bernstein(const BernsteinCoeffs& b) {
  if (static_cast<int>(b.beta.size()) != b.n + 1)
    fail(errc::invalid_profile, "Bernstein coefficient count must be n+1");
  RationalPoly acc;
  for (int j = 0; j <= b.n; ++j) {
    if (b.beta[j] == 0) continue;
    RationalPoly term = one_minus_t_pow(static_cast<unsigned>(b.n - j));
    std::vector<Rational> shifted(term.coeffs.size() + j, Rational(0));
    Rational w = b.beta[j] * Rational(binomial(b.n, j));
    for (std::size_t i = 0; i < term.coeffs.size(); ++i)
      shifted[i + j] = term.coeffs[i] * w;
    acc = add(acc, RationalPoly(std::move(shifted)));
  }
  return acc;
}

// beta_j = sum_{k<=j} c_k C(j,k)/C(n,k); exact inverse of from_bernstein.
inline BernsteinCoeffs to_bernstein(const RationalPoly& p, int n) {
  if (n < p.degree())
    fail(errc::degree_too_small, "Bernstein degree " + std::to_string(n) +
                                     " below polynomial degree " + std::to_string(p.degree()));
  BernsteinCoeffs b;
  b.n = n;
  b.beta.assign(n + 1, Rational(0));
  for (int j = 0; j <= n; ++j) {
    Rational s = 0;
    for (int k = 0; k <= j && k < static_cast<int>(p.coeffs.size()); ++k)
      s += p.coeffs[k] * Rational(binomial(j, k), binomial(n, k));
    b.beta[j] = s;
  }
  return b;
}

// Single Bernstein basis element B_j^(n).
inline RationalPoly bernstein_element(int n, int j) {
  BernsteinCoeffs b;
  b.n = n;
  b.beta.assign(n + 1, Rational(0));
  if (j < 0 || j > n) return poly_zero();
  b.beta[j] = 1;
  return from_bernstein(b);
}

}  // namespace selector
