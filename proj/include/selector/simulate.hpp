#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "selector/distribution.hpp"
#include "selector/error.hpp"
#include "selector/iterate.hpp"
#include "selector/module_calc.hpp"
#include "selector/rng.hpp"
#include "selector/sperner.hpp"

namespace selector {

struct SimConfig {
  std::uint64_t seed = 1;
  long long replicates = 10000;
  int N = 6;
  SpernerFamily family;
  DistributionModel dist;
};

enum class FirstMover { alpha, beta, coin };

inline const char* first_mover_name(FirstMover m) {
  switch (m) {
    case FirstMover::alpha: return "alpha";
    case FirstMover::beta: return "beta";
    case FirstMover::coin: return "coin";
  }
  return "alpha";
}

namespace detail {

inline int worker_count() {
  if (const char* env = std::getenv("SELECTOR_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 256);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Contiguous replicate chunks per worker. Results must be keyed by replicate
// index (or commutative integer tallies) so worker count cannot change them.
template <class Fn>
void parallel_replicates(long long replicates, Fn&& fn) {
  int workers = static_cast<int>(std::min<long long>(worker_count(), replicates));
  if (workers <= 1) {
    fn(0, replicates);
    return;
  }
  std::vector<std::thread> pool;
  long long chunk = (replicates + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    long long lo = w * chunk, hi = std::min(replicates, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

inline long long leaves_per_draw(int n, int N) {
  long long leaves = 1;
  for (int i = 0; i < N; ++i) {
    leaves *= n;
    if (leaves > (1LL << 26))
      fail(errc::resource_guard_exceeded,
           "n^N exceeds 2^26 leaf samples per replicate");
  }
  return leaves;
}

}  // namespace detail

inline void check_resource_guard(const SimConfig& cfg) {
  if (cfg.replicates < 1) fail(errc::parameter_out_of_range, "need at least one replicate");
  if (cfg.N < 0) fail(errc::parameter_out_of_range, "iteration depth must be >= 0");
  long long leaves = detail::leaves_per_draw(cfg.family.n, cfg.N);
  if (cfg.replicates > (1LL << 36) / leaves)
    fail(errc::resource_guard_exceeded, "replicates * n^N exceeds 2^36 leaf samples");
}

// One draw of H^(N)(X): depth-first over the n-ary sample tree, leaves in
// stream order, so the draw depends only on (seed, replicate).
inline double sample_iterate(const SimConfig& cfg, long long replicate) {
  check_resource_guard(cfg);
  StreamRng rng(cfg.seed, static_cast<std::uint64_t>(replicate));
  // One reusable coordinate buffer per depth keeps the walk allocation-free.
  std::vector<std::vector<double>> buf(static_cast<std::size_t>(cfg.N) + 1,
                                       std::vector<double>(cfg.family.n));
  auto rec = [&](auto&& self, int depth) -> double {
    if (depth == cfg.N) return sample(cfg.dist, rng.next_double());
    std::vector<double>& child = buf[depth];
    for (int i = 0; i < cfg.family.n; ++i) child[i] = self(self, depth + 1);
    return evaluate(cfg.family, child).first;
  };
  return rec(rec, 0);
}

struct SimReport {
  bool discrete_mode = false;
  long long replicates = 0;
  int N = 0;
  double ks_stat = 0.0;
  double threshold = 0.0;
  bool pass = false;
  struct CdfPoint {
    double x, emp, theory;
  };
  std::vector<CdfPoint> cdf_points;  // continuous mode, thinned
  struct AtomRow {
    double value, freq, theory, sigma;
  };
  std::vector<AtomRow> atoms;  // discrete mode
};

// Empirical law of H^(N)(X) against h^(N) o F_X: KS with the 1% Kolmogorov
// band for continuous X, per-atom 4-sigma binomial bands for discrete X.
inline SimReport empirical_vs_theory(const SimConfig& cfg) {
  if (cfg.replicates < 100) fail(errc::parameter_out_of_range, "need replicates >= 100");
  check_resource_guard(cfg);
  RationalPoly h = module_inclusion_exclusion(cfg.family);
  long long R = cfg.replicates;
  std::vector<double> values(static_cast<std::size_t>(R));
  detail::parallel_replicates(R, [&](long long lo, long long hi) {
    for (long long r = lo; r < hi; ++r)
      values[static_cast<std::size_t>(r)] = sample_iterate(cfg, r);
  });
  auto theory_cdf = [&](double t) { return iterate_eval(h, cdf(cfg.dist, t), cfg.N); };

  SimReport rep;
  rep.discrete_mode = cfg.dist.is_discrete();
  rep.replicates = R;
  rep.N = cfg.N;
  rep.threshold = 1.63 / std::sqrt(static_cast<double>(R));
  std::sort(values.begin(), values.end());

  if (!rep.discrete_mode) {
    double d = 0.0;
    for (long long i = 0; i < R; ++i) {
      double ft = theory_cdf(values[static_cast<std::size_t>(i)]);
      d = std::max(d, std::max(ft - static_cast<double>(i) / R,
                               static_cast<double>(i + 1) / R - ft));
    }
    rep.ks_stat = d;
    rep.pass = d <= rep.threshold;
    long long stride = std::max<long long>(1, R / 256);
    for (long long i = 0; i < R; i += stride) {
      double x = values[static_cast<std::size_t>(i)];
      rep.cdf_points.push_back({x, static_cast<double>(i + 1) / R, theory_cdf(x)});
    }
    return rep;
  }

  auto atoms = cfg.dist.atom_list();
  bool all_ok = true;
  double prev_theory = 0.0, emp_cum = 0.0, ks = 0.0;
  Rational cum = 0;
  for (const auto& [v, p] : atoms) {
    cum += p;
    double th_cdf = iterate_eval(h, to_double(cum), cfg.N);
    double th_p = th_cdf - prev_theory;
    prev_theory = th_cdf;
    auto lohi = std::equal_range(values.begin(), values.end(), v);
    double freq = static_cast<double>(lohi.second - lohi.first) / R;
    emp_cum += freq;
    ks = std::max(ks, std::fabs(emp_cum - th_cdf));
    double sigma = std::sqrt(std::max(th_p * (1.0 - th_p), 0.0) / R);
    if (std::fabs(freq - th_p) > 4.0 * sigma) all_ok = false;
    rep.atoms.push_back({v, freq, th_p, sigma});
  }
  rep.ks_stat = ks;
  rep.pass = all_ok;
  return rep;
}

struct ZermeloReport {
  int N = 0;
  double p = 0.0;
  FirstMover first_mover = FirstMover::alpha;
  long long replicates = 0;
  double estimate = 0.0;    // empirical P(V_N = 0)
  double theory = 0.0;      // h^(N)(p), or the swapped/mixed variant
  double abs_error = 0.0;
  double sigma = 0.0;       // binomial se at the theory value
  bool pass = false;        // |estimate - theory| <= 4 sigma
};

// Randomized Zermelo game on the full binary tree of depth 2N: leaves are 0
// with probability p, generations alternate max (even, alpha to move) and min
// (odd); beta swaps the operators, coin tosses per replicate. Leaves are
// folded in order with an explicit stack, memory O(N).
inline ZermeloReport zermelo_game(int N, double p, std::uint64_t seed, long long replicates,
                                  FirstMover first_mover) {
  if (N < 0 || 2 * N > 26) fail(errc::tree_too_deep, "game tree capped at 2N <= 26");
  if (!(p > 0.0 && p < 1.0)) fail(errc::probability_out_of_range, "p must lie in (0,1)");
  if (replicates < 1) fail(errc::parameter_out_of_range, "need at least one replicate");

  std::atomic<long long> zeros{0};
  std::uint64_t leaves = 1ull << (2 * N);
  detail::parallel_replicates(replicates, [&](long long lo, long long hi) {
    long long local = 0;
    int vals[28], hts[28];
    for (long long r = lo; r < hi; ++r) {
      StreamRng rng(seed, static_cast<std::uint64_t>(r));
      bool alpha_moves = first_mover == FirstMover::alpha ||
                         (first_mover == FirstMover::coin && rng.next_double() < 0.5);
      int sp = 0;
      for (std::uint64_t leaf = 0; leaf < leaves; ++leaf) {
        int v = rng.next_double() < p ? 0 : 1;
        int ht = 0;
        while (sp > 0 && hts[sp - 1] == ht) {
          int sib = vals[--sp];
          ++ht;  // node height: odd -> min for alpha, even -> max
          bool use_min = (ht & 1) == (alpha_moves ? 1 : 0);
          v = use_min ? (v & sib) : (v | sib);
        }
        vals[sp] = v;
        hts[sp] = ht;
        ++sp;
      }
      local += vals[0] == 0;
    }
    zeros.fetch_add(local, std::memory_order_relaxed);
  });

  RationalPoly hA = zermelo_module({2, 2});              // (1-(1-t)^2)^2
  RationalPoly hB = sperner_g_of(hA);                    // 2t^2 - t^4
  double tA = iterate_eval(hA, p, N), tB = iterate_eval(hB, p, N);
  ZermeloReport rep;
  rep.N = N;
  rep.p = p;
  rep.first_mover = first_mover;
  rep.replicates = replicates;
  rep.estimate = static_cast<double>(zeros.load()) / replicates;
  rep.theory = first_mover == FirstMover::alpha ? tA
               : first_mover == FirstMover::beta ? tB
                                                 : 0.5 * (tA + tB);
  rep.abs_error = std::fabs(rep.estimate - rep.theory);
  rep.sigma = std::sqrt(std::max(rep.theory * (1.0 - rep.theory), 0.0) /
                        static_cast<double>(replicates));
  rep.pass = rep.abs_error <= 4.0 * rep.sigma;
  return rep;
}

}  // namespace selector
