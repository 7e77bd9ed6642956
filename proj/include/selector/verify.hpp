#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "selector/distribution.hpp"
#include "selector/enumerate.hpp"
#include "selector/error.hpp"
#include "selector/fixed_point.hpp"
#include "selector/io.hpp"
#include "selector/iterate.hpp"
#include "selector/module_calc.hpp"
#include "selector/poly.hpp"
#include "selector/simulate.hpp"
#include "selector/sperner.hpp"

namespace selector {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace verify_detail {

inline SpernerFamily mm() { return make_family({{1, 2}, {3, 4}}, 4); }
inline SpernerFamily tree() { return make_family({{1, 2}, {2, 3}}, 3); }

template <class Fn>
CheckResult run_check(const std::string& name, Fn&& fn) {
  CheckResult r;
  r.name = name;
  try {
    std::string detail = fn();
    r.pass = true;
    r.detail = detail.empty() ? "ok" : detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

}  // namespace verify_detail

// Hermetic library self-checks: fixed seed, no I/O, deterministic output.
inline std::vector<CheckResult> run_verification() {
  using namespace verify_detail;
  std::vector<CheckResult> out;
  const std::uint64_t seed = 0x5E1EC70BULL;

  out.push_back(run_check("module_threeway_exhaustive_n_le_4", [&] {
    int count = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& f : all_families(n)) {
        RationalPoly a = module_from_profile(profile(f));
        RationalPoly b = module_inclusion_exclusion(f);
        RationalPoly c = module_by_recursion(f);
        require(a == b && b == c, "route disagreement at " + family_to_text(f));
        ++count;
      }
    require(count == 1 + 4 + 18 + 166, "family count drifted");
    return std::to_string(count) + " families";
  }));

  out.push_back(run_check("module_threeway_random_n5_n6", [&] {
    StreamRng rng(seed, 1);
    for (int i = 0; i < 80; ++i) {
      SpernerFamily f = random_family(rng, 5 + (i & 1), 8);
      RationalPoly a = module_from_profile(profile(f));
      require(a == module_inclusion_exclusion(f) && a == module_by_recursion(f),
              "route disagreement at " + family_to_text(f));
    }
    return "80 families";
  }));

  out.push_back(run_check("worked_examples", [&] {
    Profile pm = profile(mm());
    require(pm.a == std::vector<long long>({0, 0, 4, 4, 1}), "Mm a-profile");
    RationalPoly hm = module_inclusion_exclusion(mm());
    require(hm == RationalPoly({Rational(0), Rational(0), Rational(4), Rational(-4),
                                Rational(1)}),
            "Mm module");  // (1-(1-t)^2)^2 = 4t^2 - 4t^3 + t^4
    RationalPoly ht = module_inclusion_exclusion(tree());
    require(ht == RationalPoly({Rational(0), Rational(1), Rational(1), Rational(-1)}),
            "tree module t+t^2-t^3");
    RationalPoly gt = sperner_g_of(ht);
    require(gt == RationalPoly({Rational(0), Rational(0), Rational(2), Rational(-1)}),
            "tree g = 2t^2 - t^3");
    Profile pt = profile(tree());
    require(pt.b[2] == 2 && pt.b[3] == 1, "tree b-profile");
    SpernerFamily f1 = make_family({{1, 2}, {1, 3}, {2, 3, 4}}, 4);
    SpernerFamily f2 = make_family({{1, 2}, {3, 4}}, 4);
    require(module_inclusion_exclusion(f1) == module_inclusion_exclusion(f2),
            "shared module 1-2(1-t)^2+(1-t)^4");
    require(!are_isomorphic(f1, f2), "same module but not isomorphic");
    return std::string();
  }));

  out.push_back(run_check("russo_total_influence", [&] {
    std::vector<Rational> ps = {Rational(1, 4), Rational(1, 2), Rational(2, 3)};
    for (int n = 1; n <= 3; ++n)
      for (const auto& f : all_families(n)) {
        RationalPoly gp = derivative(sperner_g_of(module_inclusion_exclusion(f)));
        for (const auto& p : ps)
          require(total_influence(f, p) == eval(gp, p), "Russo at " + family_to_text(f));
      }
    StreamRng rng(seed, 2);
    for (int i = 0; i < 60; ++i) {
      SpernerFamily f = random_family(rng, 4 + static_cast<int>(rng.next_u64() % 3), 8);
      RationalPoly gp = derivative(sperner_g_of(module_inclusion_exclusion(f)));
      for (const auto& p : ps)
        require(total_influence(f, p) == eval(gp, p), "Russo at " + family_to_text(f));
    }
    require(total_influence(tree(), Rational(1, 2)) == Rational(5, 4), "tree influence 5/4");
    return std::string();
  }));

  out.push_back(run_check("isoperimetric_bound", [&] {
    for (int n = 1; n <= 3; ++n)
      for (const auto& f : all_families(n)) {
        RationalPoly g = sperner_g_of(module_inclusion_exclusion(f));
        RationalPoly gp = derivative(g);
        bool projection = is_identity_family(f);
        for (int i = 1; i <= 19; ++i) {
          Rational t(i, 20);
          Rational gt = eval(g, t);
          Rational lhs = eval(gp, t);
          Rational rhs = gt * (1 - gt) / (t * (1 - t));
          require(lhs >= rhs, "bound failed at " + family_to_text(f));
          if (!projection) require(lhs != rhs, "non-projection equality");
        }
      }
    return std::string();
  }));

  out.push_back(run_check("bernstein_basis", [&] {
    // Partition of unity and the t = sum (j/n) B_j identity.
    for (int n = 1; n <= 8; ++n) {
      BernsteinCoeffs ones{n, std::vector<Rational>(n + 1, Rational(1))};
      require(from_bernstein(ones) == poly_const(Rational(1)), "partition of unity");
      BernsteinCoeffs lin{n, {}};
      for (int j = 0; j <= n; ++j) lin.beta.push_back(Rational(j, n));
      require(from_bernstein(lin) == poly_t(), "t identity");
    }
    // Derivative identity d/dt B_j^(n) = n (B_{j-1}^(n-1) - B_j^(n-1)).
    for (int n = 1; n <= 6; ++n)
      for (int j = 0; j <= n; ++j) {
        RationalPoly lhs = derivative(bernstein_element(n, j));
        RationalPoly rhs = scale(
            sub(bernstein_element(n - 1, j - 1), bernstein_element(n - 1, j)), Rational(n));
        require(lhs == rhs, "derivative identity");
      }
    // Round trip on seeded rational polynomials.
    StreamRng rng(seed, 3);
    for (int i = 0; i < 40; ++i) {
      std::vector<Rational> c;
      int deg = 1 + static_cast<int>(rng.next_u64() % 12);
      for (int d = 0; d <= deg; ++d)
        c.emplace_back(static_cast<long long>(rng.next_u64() % 41) - 20,
                       1 + static_cast<long long>(rng.next_u64() % 7));
      RationalPoly p(c);
      require(from_bernstein(to_bernstein(p, deg + 2)) == p, "round trip");
    }
    return std::string();
  }));

  out.push_back(run_check("fixed_point_mm_and_zermelo", [&] {
    Rational tol(1, Int(1) << 45);
    FixedPointReport rep = sperner_point(mm(), tol);
    double golden = (3.0 - std::sqrt(5.0)) / 2.0;
    require(std::fabs(rep.omega - golden) < 1e-12, "omega vs (3-sqrt5)/2");
    require(rep.hprime_at_omega > 1.0, "repellence");
    auto [s, omega] = zermelo_point({2, 2}, tol);
    require(std::fabs(omega - rep.omega) < 2e-12, "zermelo vs sperner point");
    require(std::fabs(s - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-12, "s vs 1/phi");
    return std::string();
  }));

  out.push_back(run_check("order_statistic_points", [&] {
    Rational tol(1, Int(1) << 40);
    for (int n = 3; n <= 10; ++n) {
      double prev = 0.0;
      for (int r = 2; r < n; ++r) {
        FixedPointReport rep = order_stat_point(r, n, tol);  // self-checks inside
        require(rep.omega > prev, "omega not increasing in r");
        prev = rep.omega;
      }
    }
    FixedPointReport r23 = order_stat_point(2, 3, tol);
    require(std::fabs(r23.omega - 0.5) < 1e-9, "omega_{2:3} = 1/2");
    return std::string();
  }));

  out.push_back(run_check("eta_km_bounds", [&] {
    Rational tol(1, Int(1) << 40);
    for (int m : {3, 7})
      for (int k : {2, 20, 100}) {
        auto [eta, ok] = eta_km(k, m, tol);
        require(ok, "bound failed at k=" + std::to_string(k) + " m=" + std::to_string(m));
        require(eta > 0.0 && eta < 1.0, "eta range");
      }
    return std::string();
  }));

  out.push_back(run_check("recursion_lemma_split", [&] {
    StreamRng rng(seed, 4);
    for (int i = 0; i < 60; ++i) {
      int n = 2 + static_cast<int>(rng.next_u64() % 5);
      SpernerFamily f = random_family(rng, n, 8);
      RationalPoly h = module_inclusion_exclusion(f);
      // pick r = 1 + i mod n; h = t*h_tack + (1-t)*h_minus
      int r = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
      auto poly_of = [](const DerivedFamily& d) {
        if (d.tag == DerivedFamily::Tag::const_zero) return poly_zero();
        if (d.tag == DerivedFamily::Tag::const_one) return poly_const(Rational(1));
        return module_inclusion_exclusion(d.fam);
      };
      RationalPoly rhs = add(mul(poly_t(), poly_of(derive(f, r, true))),
                             mul(RationalPoly({Rational(1), Rational(-1)}),
                                 poly_of(derive(f, r, false))));
      require(h == rhs, "recursion identity at " + family_to_text(f));
      // g split on coordinate 1.
      auto [g1, g0] = g_split(f);
      RationalPoly g = sperner_g_of(h);
      RationalPoly gs = add(mul(poly_t(), g1),
                            mul(RationalPoly({Rational(1), Rational(-1)}), g0));
      require(g == gs, "g recurrence at " + family_to_text(f));
    }
    return std::string();
  }));

  out.push_back(run_check("transversal_duality", [&] {
    for (int n = 1; n <= 4; ++n)
      for (const auto& f : all_families(n)) {
        SpernerFamily d = transversal_dual(f);
        require(transversal_dual(d) == f, "dual not involutive at " + family_to_text(f));
        require(module_inclusion_exclusion(d) ==
                    sperner_g_of(module_inclusion_exclusion(f)),
                "module of dual is not g at " + family_to_text(f));
      }
    return std::string();
  }));

  out.push_back(run_check("quantile_and_predicted_limit", [&] {
    DistributionModel two = DistributionModel::discrete({{0.0, Rational(2, 5)},
                                                         {1.0, Rational(3, 5)}});
    QuantileValue below = quantile(two, Rational(1, 5));
    require(below.kind == QuantileValue::Kind::constant && below.a == 0.0, "eta below");
    QuantileValue at = quantile(two, Rational(2, 5));
    require(at.kind == QuantileValue::Kind::two_valued && at.a == 0.0 && at.z == 1.0 &&
                at.eta == Rational(2, 5),
            "eta at the jump");
    QuantileValue above = quantile(two, Rational(1, 2));
    require(above.kind == QuantileValue::Kind::constant && above.a == 1.0, "eta above");
    QuantileValue u = quantile(DistributionModel::uniform01(), Rational(3, 10));
    require(u.kind == QuantileValue::Kind::constant && std::fabs(u.a - 0.3) < 1e-15,
            "uniform quantile");
    QuantileValue pl = predicted_limit(mm(), DistributionModel::uniform01());
    require(pl.kind == QuantileValue::Kind::constant &&
                std::fabs(pl.a - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-9,
            "Mm uniform limit is omega");
    SpernerFamily lower = make_family({{1}, {2, 3}}, 3);
    QuantileValue ql = predicted_limit(lower, DistributionModel::uniform01());
    require(ql.kind == QuantileValue::Kind::constant && ql.a == 1.0, "lower limit ess sup");
    // All 2-subsets of {1,2,3}: omega = 1/2 exactly, so a 1/2 atom boundary
    // must come out TwoValued.
    SpernerFamily med = make_family({{1, 2}, {1, 3}, {2, 3}}, 3);
    DistributionModel half = DistributionModel::discrete({{-1.0, Rational(1, 2)},
                                                          {2.0, Rational(1, 2)}});
    QuantileValue qm = predicted_limit(med, half);
    require(qm.kind == QuantileValue::Kind::two_valued && qm.a == -1.0 && qm.z == 2.0 &&
                qm.eta == Rational(1, 2),
            "median family keeps both atoms");
    return std::string();
  }));

  out.push_back(run_check("iterate_capture_and_l1_decay", [&] {
    RationalPoly h = module_inclusion_exclusion(mm());
    FixedPointReport rep = sperner_point(mm(), Rational(1, Int(1) << 45));
    require(iterate_eval_exact(h, Rational(1, 2), 1) == Rational(9, 16), "h(1/2)");
    require(iterate_eval_exact(h, Rational(1, 2), 2) == Rational(42849, 65536), "h^2(1/2)");
    double below = rep.omega - 0.05, above = rep.omega + 0.05;
    bool captured_low = false, captured_high = false;
    for (int n = 1; n <= 60 && !(captured_low && captured_high); ++n) {
      if (iterate_eval(h, below, n) < 1e-6) captured_low = true;
      if (iterate_eval(h, above, n) > 1.0 - 1e-6) captured_high = true;
    }
    require(captured_low && captured_high, "monotone capture");
    // the seed rep.omega is off the true point by ~2^-46; that error grows by
    // h'(omega)^n per step, so only a short horizon stays provably tiny
    for (int n = 1; n <= 20; ++n)
      require(std::fabs(iterate_eval(h, rep.omega, n) - rep.omega) < 1e-8,
              "fixed point drift");
    double prev = l1_distance(h, rep, 0, 2000);
    require(std::fabs(prev - (rep.omega * rep.omega / 2 +
                              (1 - rep.omega) * (1 - rep.omega) / 2)) < 1e-3,
            "N=0 closed form");
    for (int n = 1; n <= 10; ++n) {
      double cur = l1_distance(h, rep, n, 2000);
      require(cur < prev, "L1 not decreasing at N=" + std::to_string(n));
      prev = cur;
    }
    return std::string();
  }));

  out.push_back(run_check("simulate_bernoulli_identity", [&] {
    SimConfig cfg;
    cfg.seed = seed;
    cfg.replicates = 20000;
    cfg.N = 1;
    cfg.family = mm();
    cfg.dist = DistributionModel::bernoulli(Rational(1, 2));  // P(X=1) = 1-p, p = 1/2
    SimReport rep = empirical_vs_theory(cfg);
    require(rep.discrete_mode && rep.pass, "4-sigma atom bands");
    return "freq0=" + format_double(rep.atoms[0].freq) +
           " theory=" + format_double(rep.atoms[0].theory);
  }));

  out.push_back(run_check("simulate_uniform_ks", [&] {
    SimConfig cfg;
    cfg.seed = seed + 1;
    cfg.replicates = 4000;
    cfg.N = 4;
    cfg.family = mm();
    cfg.dist = DistributionModel::uniform01();
    SimReport rep = empirical_vs_theory(cfg);
    require(rep.pass, "KS above the 1% band: " + format_double(rep.ks_stat));
    return "ks=" + format_double(rep.ks_stat);
  }));

  out.push_back(run_check("zermelo_selector_agreement", [&] {
    ZermeloReport z = zermelo_game(2, 0.4, seed + 2, 20000, FirstMover::alpha);
    require(z.pass, "zermelo off theory");
    SimConfig cfg;
    cfg.seed = seed + 3;
    cfg.replicates = 20000;
    cfg.N = 2;
    cfg.family = mm();
    cfg.dist = DistributionModel::bernoulli(Rational(3, 5));  // P(X=0) = p = 0.4
    SimReport srep = empirical_vs_theory(cfg);
    require(srep.pass, "selector sim off theory");
    double combined = 4.0 * (z.sigma + srep.atoms[0].sigma);
    require(std::fabs(z.estimate - srep.atoms[0].freq) <= combined,
            "game and selector sims disagree");
    return std::string();
  }));

  out.push_back(run_check("zermelo_monotone_in_p", [&] {
    double prev = -1.0, prev_sigma = 0.0;
    for (int i = 1; i <= 9; ++i) {
      ZermeloReport z = zermelo_game(2, i / 10.0, seed + 4, 5000, FirstMover::alpha);
      require(z.estimate >= prev - 3.0 * (z.sigma + prev_sigma), "estimate dropped");
      prev = z.estimate;
      prev_sigma = z.sigma;
    }
    return std::string();
  }));

  out.push_back(run_check("determinism_fixed_seed", [&] {
    SimConfig cfg;
    cfg.seed = seed + 5;
    cfg.replicates = 2000;
    cfg.N = 3;
    cfg.family = mm();
    cfg.dist = DistributionModel::uniform01();
    SimReport a = empirical_vs_theory(cfg);
    SimReport b = empirical_vs_theory(cfg);
    require(a.ks_stat == b.ks_stat && a.cdf_points.size() == b.cdf_points.size(),
            "repeat run differs");
    for (std::size_t i = 0; i < a.cdf_points.size(); ++i)
      require(a.cdf_points[i].x == b.cdf_points[i].x, "sample stream differs");
    ZermeloReport za = zermelo_game(3, 0.35, seed + 6, 3000, FirstMover::coin);
    ZermeloReport zb = zermelo_game(3, 0.35, seed + 6, 3000, FirstMover::coin);
    require(za.estimate == zb.estimate, "zermelo repeat differs");
    return std::string();
  }));

  out.push_back(run_check("error_contracts", [&] {
    auto expect = [](errc code, auto&& fn) {
      try {
        fn();
      } catch (const selector_error& e) {
        require(e.code() == code, std::string("wrong code: got ") + e.code_name());
        return;
      }
      throw std::runtime_error(std::string("expected ") + errc_name(code));
    };
    expect(errc::empty_set, [] { canonicalize({0u}, 3); });
    expect(errc::empty_family, [] { canonicalize({}, 3); });
    expect(errc::ground_too_large, [] { canonicalize({1u}, 21); });
    expect(errc::coordinate_out_of_range, [] { canonicalize({1u << 5}, 3); });
    expect(errc::dimension_mismatch,
           [] { evaluate(make_family({{1, 2}}, 2), std::vector<double>{0.5}); });
    expect(errc::identity_has_no_sperner_point,
           [] { sperner_point(make_family({{1}}, 1), Rational(1, 1024)); });
    expect(errc::singleton_block, [] { zermelo_point({1, 2}, Rational(1, 1024)); });
    expect(errc::extreme_order_statistic,
           [] { order_stat_point(1, 4, Rational(1, 1024)); });
    expect(errc::parameter_out_of_range, [] { eta_km(1, 3, Rational(1, 1024)); });
    expect(errc::projection_has_trivial_dynamics,
           [] { predicted_limit(make_family({{1}}, 1), DistributionModel::uniform01()); });
    expect(errc::not_monotone, [] {
      from_truth_table({0, 1, 0, 0, 0, 1, 1, 1}, 3);
    });
    expect(errc::tree_too_deep, [] { zermelo_game(14, 0.5, 1, 10, FirstMover::alpha); });
    expect(errc::composition_degree_overflow, [] {
      std::vector<Rational> big(70, Rational(1));
      compose(RationalPoly(big), RationalPoly(big));
    });
    return std::string();
  }));

  return out;
}

inline std::string verification_to_json(const std::vector<CheckResult>& checks) {
  std::vector<std::string> rows;
  int passed = 0;
  for (const auto& c : checks) {
    JsonWriter w;
    w.str("name", c.name).boolean("pass", c.pass).str("detail", c.detail);
    rows.push_back(w.done());
    if (c.pass) ++passed;
  }
  JsonWriter top;
  top.field("checks", json_array(rows));
  top.integer("passed", passed);
  top.integer("failed", static_cast<long long>(checks.size()) - passed);
  top.boolean("all_pass", passed == static_cast<int>(checks.size()));
  return top.done();
}

}  // namespace selector
