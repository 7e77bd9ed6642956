#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "selector/enumerate.hpp"
#include "selector/module_calc.hpp"
#include "selector/rng.hpp"
#include "selector/sperner.hpp"

using namespace selector;

TEST_CASE("canonicalize validates and minimalizes") {
  // supersets are dropped, duplicates collapse
  SpernerFamily f = make_family({{1, 2}, {1, 2, 3}, {2, 1}}, 3);
  REQUIRE(f.sets.size() == 1);
  REQUIRE(f.sets[0] == 0b011u);

  REQUIRE_THROWS_AS(make_family({{1}}, 0), selector_error);
  REQUIRE_THROWS_AS(make_family({{1}}, 21), selector_error);
  REQUIRE_THROWS_AS(make_family({}, 3), selector_error);
  REQUIRE_THROWS_AS(make_family({{4}}, 3), selector_error);
  REQUIRE_THROWS_AS(make_family({{}}, 3), selector_error);

  std::vector<std::vector<int>> many;
  for (int i = 1; i <= 20; ++i) many.push_back({i});
  REQUIRE_NOTHROW(make_family(many, 20));
  // 21 pairwise incomparable 2-sets from {1..7}
  std::vector<std::vector<int>> too_many;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) too_many.push_back({i, j});
  REQUIRE(too_many.size() == 21);
  REQUIRE_THROWS_AS(make_family(too_many, 7), selector_error);
}

TEST_CASE("statistic is max of mins and reports the selecting coordinate") {
  SpernerFamily f = make_family({{1, 2}, {3, 4}}, 4);
  std::vector<double> x = {0.9, 0.1, 0.5, 0.6};
  auto [value, coord] = evaluate(f, x);
  // min(0.9,0.1)=0.1, min(0.5,0.6)=0.5 -> max 0.5, attained at coordinate 3
  REQUIRE(value == 0.5);
  REQUIRE(coord == 3);
}

TEST_CASE("statistic properties on random vectors") {
  SpernerFamily fams[] = {
      make_family({{1, 2}, {3, 4}}, 4),
      make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4),
      make_family({{1}, {2, 3}, {4, 5}}, 5),
      make_family({{1, 2}, {1, 3}, {2, 3}}, 3),
  };
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  for (const auto& f : fams) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(f.n), y(f.n);
      for (int i = 0; i < f.n; ++i) {
        x[i] = unif(gen);
        y[i] = x[i] + std::abs(unif(gen));  // y >= x coordinatewise
      }
      double hx = evaluate(f, x).first;
      double hy = evaluate(f, y).first;
      // selecting: the value is one of the inputs
      REQUIRE(std::find(x.begin(), x.end(), hx) != x.end());
      // monotone
      REQUIRE(hx <= hy);
      // translation equivariance
      std::vector<double> xs(x);
      for (auto& v : xs) v += 1.25;
      REQUIRE(evaluate(f, xs).first == hx + 1.25);
    }
  }
}

TEST_CASE("boolean evaluation agrees with the real statistic on 0/1 vectors") {
  SpernerFamily f = make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4);
  for (std::uint32_t mask = 0; mask < 16u; ++mask) {
    std::vector<double> x(4);
    for (int i = 0; i < 4; ++i) x[i] = (mask >> i) & 1u ? 1.0 : 0.0;
    REQUIRE(static_cast<double>(evaluate_bits(f, mask)) == evaluate(f, x).first);
  }
}

TEST_CASE("profile counts split the cube by the statistic") {
  SpernerFamily f = make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4);
  Profile pr = profile(f);
  long long total = 0;
  for (long long v : pr.a) total += v;
  for (long long v : pr.b) total += v;
  REQUIRE(total == 16);
  REQUIRE(pr.a[0] == 0);  // all-ones point evaluates to 1
  REQUIRE(pr.b[0] == 0);  // all-zeros point evaluates to 0
  REQUIRE(pr.a[4] == 1);  // only all-zeros has four zeros and H=0
  REQUIRE(pr.b[4] == 1);
}

TEST_CASE("profile duality holds for every family on up to 5 points") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& f : all_families(n)) {
      Profile pr = profile(f);
      for (int k = 0; k <= n; ++k)
        REQUIRE(Int(pr.a[n - k]) == binomial(n, k) - Int(pr.b[k]));
    }
}

TEST_CASE("profile duality holds for sampled families on 6 points") {
  StreamRng rng(99, 0);
  for (int trial = 0; trial < 500; ++trial) {
    SpernerFamily f = random_family(rng, 6, 20);
    Profile pr = profile(f);
    for (int k = 0; k <= 6; ++k)
      REQUIRE(Int(pr.a[6 - k]) == binomial(6, k) - Int(pr.b[k]));
  }
}

TEST_CASE("derive with tack keeps the ground set and pins a coordinate to 1") {
  SpernerFamily f = make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4);
  DerivedFamily d = derive(f, 1, /*tack=*/true);
  REQUIRE(d.tag == DerivedFamily::Tag::family);
  REQUIRE(d.fam.n == 4);
  // sets avoiding 1, unchanged: just {2,3,4} here
  SpernerFamily expected = make_family({{2, 3, 4}}, 4);
  REQUIRE(d.fam.sets == expected.sets);

  // removing a coordinate present as a singleton forces the zero branch
  SpernerFamily g = make_family({{1}, {2, 3}}, 3);
  REQUIRE(derive(g, 1, /*tack=*/false).tag == DerivedFamily::Tag::const_zero);
  // coordinate in every set forces the one branch under tack
  SpernerFamily h = make_family({{1, 2}, {1, 3}}, 3);
  REQUIRE(derive(h, 1, /*tack=*/true).tag == DerivedFamily::Tag::const_one);
  // generic minus: strip the coordinate everywhere and re-minimalize
  DerivedFamily m = derive(f, 1, /*tack=*/false);
  SpernerFamily mexp = make_family({{2}, {3}}, 4);
  REQUIRE(m.fam.sets == mexp.sets);
  REQUIRE(m.fam.n == 4);
}

TEST_CASE("restrict relabels the ground set down by one") {
  SpernerFamily f = make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4);
  DerivedFamily d1 = restrict(f, 1, 1);
  REQUIRE(d1.tag == DerivedFamily::Tag::family);
  REQUIRE(d1.fam.n == 3);
  // pin x1=1: {2},{3},{2,3,4} minimalizes to {2},{3}; relabel -> {1},{2}
  SpernerFamily e1 = make_family({{1}, {2}}, 3);
  REQUIRE(d1.fam.sets == e1.sets);

  DerivedFamily d0 = restrict(f, 1, 0);
  REQUIRE(d0.tag == DerivedFamily::Tag::family);
  REQUIRE(d0.fam.n == 3);
  // pin x1=0: only {2,3,4} survives; relabel -> {1,2,3}
  SpernerFamily e0 = make_family({{1, 2, 3}}, 3);
  REQUIRE(d0.fam.sets == e0.sets);

  // constants: singleton {r} pinned to 1, or every set through r pinned to 0
  SpernerFamily s = make_family({{1}, {2, 3}}, 3);
  REQUIRE(restrict(s, 1, 1).tag == DerivedFamily::Tag::const_one);
  SpernerFamily u = make_family({{1, 2}, {1, 3}}, 3);
  REQUIRE(restrict(u, 1, 0).tag == DerivedFamily::Tag::const_zero);
}

TEST_CASE("restriction agrees with evaluation on the full cube") {
  StreamRng rng(17, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_u64() % 4);
    SpernerFamily f = random_family(rng, n, 8);
    int r = 1 + static_cast<int>(rng.next_u64() % n);
    for (int bit = 0; bit <= 1; ++bit) {
      DerivedFamily d = restrict(f, r, bit);
      for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) {
        // reinsert coordinate r with the pinned bit
        std::uint32_t low = m & ((1u << (r - 1)) - 1u);
        std::uint32_t high = (m >> (r - 1)) << r;
        std::uint32_t full = low | high | (bit ? (1u << (r - 1)) : 0u);
        int expect = evaluate_bits(f, full);
        int got = d.tag == DerivedFamily::Tag::const_zero  ? 0
                  : d.tag == DerivedFamily::Tag::const_one ? 1
                                                           : evaluate_bits(d.fam, m);
        REQUIRE(got == expect);
      }
    }
  }
}

TEST_CASE("transversal dual is an involution on small grounds") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : all_families(n)) {
      SpernerFamily dual = transversal_dual(f);
      REQUIRE(transversal_dual(dual) == f);
    }
}

TEST_CASE("transversal dual on named families") {
  // dual of {{1,2},{3,4}} is the four transversals {i,j}, i in {1,2}, j in {3,4}
  SpernerFamily f = make_family({{1, 2}, {3, 4}}, 4);
  SpernerFamily d = transversal_dual(f);
  SpernerFamily expected = make_family({{1, 3}, {1, 4}, {2, 3}, {2, 4}}, 4);
  REQUIRE(d.sets == expected.sets);
  // self-dual: the 2-out-of-3 majority
  SpernerFamily maj = make_family({{1, 2}, {1, 3}, {2, 3}}, 3);
  REQUIRE(transversal_dual(maj).sets == maj.sets);
}

TEST_CASE("bounds exponents are the extreme set and transversal sizes") {
  SpernerFamily f = make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4);
  auto [M, b] = bounds_exponents(f);
  REQUIRE(M == 2);
  REQUIRE(b == 2);  // {1,2} or {1,3} or {2,3} hit everything
  auto [Mi, bi] = bounds_exponents(make_family({{1}}, 1));
  REQUIRE(Mi == 1);
  REQUIRE(bi == 1);
}

TEST_CASE("truth table round trip recovers the family") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : all_families(n)) {
      std::vector<int> table(std::size_t(1) << n);
      for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = evaluate_bits(f, m);
      REQUIRE(from_truth_table(table, n) == f);
    }
}

TEST_CASE("truth table rejects non-monotone and constant inputs") {
  // x1 XOR x2 is not monotone
  std::vector<int> xor2 = {0, 1, 1, 0};
  REQUIRE_THROWS_AS(from_truth_table(xor2, 2), selector_error);
  try {
    from_truth_table(xor2, 2);
  } catch (const selector_error& e) {
    REQUIRE(e.code() == errc::not_monotone);
  }
  for (int v : {0, 1}) {
    std::vector<int> constant(4, v);
    try {
      from_truth_table(constant, 2);
      FAIL("expected DegenerateConstant");
    } catch (const selector_error& e) {
      REQUIRE(e.code() == errc::degenerate_constant);
    }
  }
}

TEST_CASE("isomorphism detection separates same-module families") {
  SpernerFamily a = make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4);
  SpernerFamily b = make_family({{1, 2}, {3, 4}}, 4);
  // relabeling 1 <-> 4 of a
  SpernerFamily a2 = make_family({{4, 2}, {4, 3}, {2, 3, 1}}, 4);
  REQUIRE(are_isomorphic(a, a2));
  REQUIRE_FALSE(are_isomorphic(a, b));
  REQUIRE_THROWS_AS(are_isomorphic(a, make_family({{1}}, 3)), selector_error);
}

TEST_CASE("enumeration counts match the antichain ladder") {
  // nonconstant monotone functions: Dedekind(n) - 2
  REQUIRE(all_families(1).size() == 1);
  REQUIRE(all_families(2).size() == 4);
  REQUIRE(all_families(3).size() == 18);
  REQUIRE(all_families(4).size() == 166);
}

TEST_CASE("total influence equals the derivative of g") {
  std::vector<Rational> ps = {Rational(1, 3), Rational(1, 2), Rational(7, 9)};
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : all_families(n)) {
      RationalPoly gp = derivative(sperner_g_of(module_inclusion_exclusion(f)));
      for (const auto& p : ps) REQUIRE(total_influence(f, p) == eval(gp, p));
    }
  StreamRng rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 5 + static_cast<int>(rng.next_u64() % 2);
    SpernerFamily f = random_family(rng, n, 10);
    RationalPoly gp = derivative(sperner_g_of(module_inclusion_exclusion(f)));
    REQUIRE(total_influence(f, Rational(2, 5)) == eval(gp, Rational(2, 5)));
  }
  SpernerFamily f = make_family({{1, 2}}, 2);
  REQUIRE_THROWS_AS(total_influence(f, Rational(0)), selector_error);
  REQUIRE_THROWS_AS(total_influence(f, Rational(1)), selector_error);
}

TEST_CASE("classification helpers") {
  REQUIRE(is_identity_family(make_family({{1}}, 1)));
  REQUIRE(is_identity_family(make_family({{2}}, 3)));
  REQUIRE_FALSE(is_identity_family(make_family({{1}, {2}}, 2)));
  REQUIRE(has_singleton(make_family({{1}, {2, 3}}, 3)));
  REQUIRE_FALSE(has_singleton(make_family({{1, 2}, {3, 4}}, 4)));
  REQUIRE(common_intersection(make_family({{1, 2}, {1, 3}}, 3)) == 0b001u);
  REQUIRE(common_intersection(make_family({{1, 2}, {3, 4}}, 4)) == 0u);
}
