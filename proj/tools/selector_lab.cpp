// selector-lab: single-binary front end for the Sperner statistics toolkit.
// Subcommands: module, fixpoint, iterate, simulate, zermelo, verify.
// Exit codes: 0 success, 1 domain error (JSON error object on stderr),
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selector/selector.hpp"

namespace {

using namespace selector;

std::string module_json(const SpernerFamily& f) {
  ModulePair mp = make_module(f);
  Profile pr = profile(f);
  if (module_from_profile(pr) != mp.h)
    throw std::logic_error("profile route disagrees with inclusion-exclusion");
  int d0, d1;
  if (is_identity_family(f)) {
    d0 = d1 = 1;  // projection: h = t
  } else {
    auto [a, b] = endpoint_derivatives(f);
    d0 = a;
    d1 = b;
  }
  JsonWriter w;
  w.field("h", poly_to_json(mp.h));
  w.field("g", poly_to_json(mp.g));
  w.field("a", counts_to_json(pr.a));
  w.field("b", counts_to_json(pr.b));
  w.integer("hprime0", d0);
  w.integer("hprime1", d1);
  w.str("classification", classification_name(classify(f)));
  return w.done();
}

std::string module_pretty(const SpernerFamily& f) {
  ModulePair mp = make_module(f);
  std::string out = "family          " + family_to_text(f) + "\n";
  out += "classification  " + std::string(classification_name(classify(f))) + "\n";
  auto poly_str = [](const RationalPoly& p) {
    if (p.is_zero()) return std::string("0");
    std::string s;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      if (p.coeffs[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += rational_to_string(p.coeffs[k]);
      if (k > 0) s += "*t^" + std::to_string(k);
    }
    return s;
  };
  out += "h(t)            " + poly_str(mp.h) + "\n";
  out += "g(t)            " + poly_str(mp.g) + "\n";
  return out;
}

std::string fixpoint_json(const SpernerFamily& f, const Rational& tol) {
  FixedPointReport rep = sperner_point(f, tol);
  JsonWriter w;
  w.str("classification", classification_name(rep.cls));
  w.str("omega_lo", rational_to_string(rep.lo));
  w.str("omega_hi", rational_to_string(rep.hi));
  w.num("omega", rep.omega);
  w.num("hprime_omega", rep.hprime_at_omega);
  return w.done();
}

FixedPointReport report_for_iteration(const SpernerFamily& f, const Rational& tol) {
  if (classify(f) == Classification::identity) {
    FixedPointReport rep;
    rep.cls = Classification::identity;
    return rep;
  }
  return sperner_point(f, tol);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Sperner statistics laboratory: modules, fixed points, iteration, simulation"};
  app.require_subcommand(1);

  std::string family_text, dist_text = "uniform", out_mode = "json", tol_text, csv_path;
  std::uint64_t seed = 1;
  long long replicates = 10000;
  int N = 6, grid = 201, l1_grid = 10000;
  std::string p_text = "1/2";
  std::string first_mover = "alpha";

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", family_text,
                    "family as n=4;{1,2},{3,4} or {\"n\":4,\"sets\":[[1,2],[3,4]]}")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd, const char* modes) {
    cmd->add_option("--out", out_mode, std::string("output format: ") + modes);
  };

  CLI::App* cmd_module = app.add_subcommand("module", "module h, Sperner g, profiles");
  add_family(cmd_module);
  add_out(cmd_module, "json|pretty");

  CLI::App* cmd_fix = app.add_subcommand("fixpoint", "certified Sperner point");
  add_family(cmd_fix);
  add_out(cmd_fix, "json|pretty");
  cmd_fix->add_option("--tol", tol_text, "bracket width, rational or decimal (default 2^-40)");

  CLI::App* cmd_iter = app.add_subcommand("iterate", "pointwise h^(N) and the limit step");
  add_family(cmd_iter);
  add_out(cmd_iter, "json|csv|pretty");
  cmd_iter->add_option("--N", N, "iteration depth")->required();
  cmd_iter->add_option("--tol", tol_text, "fixed point tolerance");
  cmd_iter->add_option("--grid", grid, "CSV grid points (default 201)");
  cmd_iter->add_option("--l1-grid", l1_grid, "quadrature grid for the L1 gap (default 10000)");

  CLI::App* cmd_sim = app.add_subcommand("simulate", "Monte Carlo H^(N)(X) vs h^(N) o F_X");
  add_family(cmd_sim);
  add_out(cmd_sim, "json|pretty");
  cmd_sim->add_option("--dist", dist_text,
                      "uniform | bernoulli:q | normal:m,s | discrete:v1:p1,...");
  cmd_sim->add_option("--N", N, "iteration depth");
  cmd_sim->add_option("--replicates", replicates, "Monte Carlo replicates");
  cmd_sim->add_option("--seed", seed, "64-bit stream seed");
  cmd_sim->add_option("--csv", csv_path, "also write empirical CDF points to this file");

  CLI::App* cmd_z = app.add_subcommand("zermelo", "randomized Zermelo game on depth-2N tree");
  add_out(cmd_z, "json|pretty");
  cmd_z->add_option("--N", N, "rounds (tree depth 2N)")->required();
  cmd_z->add_option("--p", p_text, "leaf is 0 with probability p, rational or decimal")
      ->required();
  cmd_z->add_option("--replicates", replicates, "Monte Carlo replicates");
  cmd_z->add_option("--seed", seed, "64-bit stream seed");
  cmd_z->add_option("--first-mover", first_mover, "alpha | beta | coin");

  CLI::App* cmd_verify = app.add_subcommand("verify", "hermetic library self-checks");
  add_out(cmd_verify, "json|pretty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Rational tol = tol_text.empty() ? Rational(1, Int(1) << 40) : parse_rational(tol_text);

  if (cmd_module->parsed()) {
    SpernerFamily f = parse_family(family_text);
    std::cout << (out_mode == "pretty" ? module_pretty(f) : module_json(f) + "\n");
    return 0;
  }

  if (cmd_fix->parsed()) {
    SpernerFamily f = parse_family(family_text);
    if (out_mode == "pretty") {
      FixedPointReport rep = sperner_point(f, tol);
      std::printf("classification  %s\nomega           %.17g\nh'(omega)       %.17g\n",
                  classification_name(rep.cls), rep.omega, rep.hprime_at_omega);
    } else {
      std::cout << fixpoint_json(f, tol) << "\n";
    }
    return 0;
  }

  if (cmd_iter->parsed()) {
    SpernerFamily f = parse_family(family_text);
    RationalPoly h = module_inclusion_exclusion(f);
    FixedPointReport rep = report_for_iteration(f, tol);
    if (out_mode == "csv") {
      std::string out = "t,hN,hinf\n";
      for (int i = 0; i < grid; ++i) {
        double t = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
        out += format_double(t) + "," + format_double(iterate_eval(h, t, N)) + "," +
               format_double(limit_function(rep, t)) + "\n";
      }
      std::cout << out;
      return 0;
    }
    double l1 = l1_distance(h, rep, N, l1_grid);
    JsonWriter w;
    w.integer("N", N);
    w.num("l1", l1);
    if (rep.cls == Classification::identity)
      w.field("omega", "null");
    else
      w.num("omega", rep.omega);
    if (out_mode == "pretty")
      std::printf("N      %d\nl1     %.17g\nomega  %s\n", N, l1,
                  rep.cls == Classification::identity ? "none" : format_double(rep.omega).c_str());
    else
      std::cout << w.done() << "\n";
    return 0;
  }

  if (cmd_sim->parsed()) {
    SimConfig cfg;
    cfg.seed = seed;
    cfg.replicates = replicates;
    cfg.N = N;
    cfg.family = parse_family(family_text);
    cfg.dist = parse_dist(dist_text);
    SimReport rep = empirical_vs_theory(cfg);
    JsonWriter w;
    w.str("mode", rep.discrete_mode ? "atoms" : "ks");
    w.integer("replicates", rep.replicates);
    w.integer("N", rep.N);
    w.num("ks_stat", rep.ks_stat);
    w.num("threshold", rep.threshold);
    w.boolean("pass", rep.pass);
    if (rep.discrete_mode) {
      std::vector<std::string> rows;
      for (const auto& a : rep.atoms) {
        JsonWriter r;
        r.num("value", a.value).num("freq", a.freq).num("theory", a.theory).num("sigma", a.sigma);
        rows.push_back(r.done());
      }
      w.field("atoms", json_array(rows));
    }
    if (out_mode == "pretty")
      std::printf("mode %s  ks %.17g  threshold %.17g  pass %s\n",
                  rep.discrete_mode ? "atoms" : "ks", rep.ks_stat, rep.threshold,
                  rep.pass ? "yes" : "no");
    else
      std::cout << w.done() << "\n";
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      out << "x,empirical,theory\n";
      for (const auto& pt : rep.cdf_points)
        out << format_double(pt.x) << "," << format_double(pt.emp) << ","
            << format_double(pt.theory) << "\n";
    }
    return 0;
  }

  if (cmd_z->parsed()) {
    FirstMover fm = first_mover == "alpha"  ? FirstMover::alpha
                    : first_mover == "beta" ? FirstMover::beta
                    : first_mover == "coin"
                        ? FirstMover::coin
                        : throw selector_error(errc::parse_error,
                                               "first mover must be alpha, beta, or coin");
    ZermeloReport rep = zermelo_game(N, to_double(parse_rational(p_text)), seed,
                                     replicates, fm);
    JsonWriter w;
    w.integer("N", rep.N);
    w.num("p", rep.p);
    w.str("first_mover", first_mover_name(rep.first_mover));
    w.integer("replicates", rep.replicates);
    w.num("estimate", rep.estimate);
    w.num("theory", rep.theory);
    w.num("abs_error", rep.abs_error);
    w.num("sigma", rep.sigma);
    w.boolean("pass", rep.pass);
    if (out_mode == "pretty")
      std::printf("P(V_N=0) estimate %.17g  theory %.17g  |err| %.17g (sigma %.17g)\n",
                  rep.estimate, rep.theory, rep.abs_error, rep.sigma);
    else
      std::cout << w.done() << "\n";
    return 0;
  }

  // verify
  std::vector<CheckResult> checks = run_verification();
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (out_mode == "pretty") {
    for (const auto& c : checks)
      std::printf("%-38s %s  %s\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                  c.detail.c_str());
  } else {
    std::cout << verification_to_json(checks) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const selector::selector_error& e) {
    std::cerr << selector::error_to_json(e) << "\n";
    return 1;
  } catch (const std::exception& e) {
    selector::JsonWriter inner;
    inner.str("code", "Internal").str("message", e.what());
    selector::JsonWriter outer;
    outer.field("error", inner.done());
    std::cerr << outer.done() << "\n";
    return 1;
  }
}
