#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "selector/distribution.hpp"
#include "selector/error.hpp"
#include "selector/fixed_point.hpp"
#include "selector/poly.hpp"
#include "selector/rational.hpp"
#include "selector/sperner.hpp"

namespace selector {

// h composed with itself N times, evaluated pointwise. Exact mode is capped
// at N=32 (denominators square with every degree-d application); the float
// path clamps each step to [0,1] to stop roundoff from escaping the cube.
inline Rational iterate_eval_exact(const RationalPoly& h, Rational t, int N) {
  if (N < 0 || N > 32)
    fail(errc::parameter_out_of_range, "exact iteration supports 0 <= N <= 32");
  for (int i = 0; i < N; ++i) t = eval(h, t);
  return t;
}

inline double iterate_eval(const RationalPoly& h, double t, int N) {
  if (N < 0) fail(errc::parameter_out_of_range, "iteration depth must be >= 0");
  for (int i = 0; i < N; ++i) t = std::clamp(eval_float(h, t), 0.0, 1.0);
  return t;
}

// h^(infinity): a step through omega in the Interior case, degenerate steps
// for Lower/Upper, the identity for projections. Inside the certified
// bracket the reported midpoint stands in for omega.
inline double limit_function(const FixedPointReport& rep, double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(errc::parameter_out_of_range, "t must lie in [0,1]");
  switch (rep.cls) {
    case Classification::identity:
      return t;
    case Classification::lower:
      return t < 1.0 ? 0.0 : 1.0;
    case Classification::upper:
      return t > 0.0 ? 1.0 : 0.0;
    case Classification::interior: {
      if (t < to_double(rep.lo)) return 0.0;
      if (t > to_double(rep.hi)) return 1.0;
      return rep.omega;
    }
  }
  return t;
}

// Q_X(omega_H), the limit law of H^(N)(X). For discrete X the comparison of
// each cumulative F against the (generally irrational) omega is decided by
// the exact sign of h(F)-F, so TwoValued outcomes are detected exactly.
inline QuantileValue predicted_limit(const SpernerFamily& f, const DistributionModel& dist,
                                     const Rational& tol = Rational(1, Int(1) << 40)) {
  Classification cls = classify(f);
  if (cls == Classification::identity)
    fail(errc::projection_has_trivial_dynamics, "projection: H^(N)(X) is X for every N");
  if (cls == Classification::lower) return quantile(dist, Rational(1));
  if (cls == Classification::upper) return quantile(dist, Rational(0));
  if (!dist.is_discrete()) {
    FixedPointReport rep = sperner_point(f, tol);
    if (dist.kind == DistributionModel::Kind::uniform01)
      return QuantileValue::constant(rep.omega);
    return QuantileValue::constant(normal_quantile(rep.omega, dist.mean, dist.sd));
  }
  RationalPoly h = module_inclusion_exclusion(f);
  auto atoms = dist.atom_list();
  // below(F) <=> F < omega, via the Interior sign structure of h(t)-t.
  auto below = [&](const Rational& F) {
    if (F <= 0) return true;
    if (F >= 1) return false;
    return sign_of(eval(h, F) - F) < 0;
  };
  auto at_omega = [&](const Rational& F) {
    return F > 0 && F < 1 && sign_of(eval(h, F) - F) == 0;
  };
  Rational cum = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    cum += atoms[i].second;
    if (at_omega(cum)) {
      // F sits exactly on omega: omega is rational and the limit keeps both
      // neighbors, the lower one with probability omega itself.
      double z = i + 1 < atoms.size() ? atoms[i + 1].first : atoms[i].first;
      return QuantileValue::two_valued(atoms[i].first, z, cum);
    }
    if (!below(cum)) return QuantileValue::constant(atoms[i].first);
  }
  return QuantileValue::constant(atoms.back().first);
}

namespace detail {

// Shared quadrature grid: uniform plus dyadic clustering toward each kink of
// |h^(N) - h^(inf)|. The grid depends only on (report, grid_points), so L1
// values at different N are comparable term by term.
inline std::vector<double> l1_grid(const FixedPointReport& rep, int grid_points) {
  std::vector<double> ts;
  ts.reserve(grid_points + 100);
  for (int i = 0; i <= grid_points; ++i)
    ts.push_back(static_cast<double>(i) / grid_points);
  auto cluster = [&](double center) {
    ts.push_back(center);
    for (int k = 2; k <= 44; ++k) {
      double d = std::ldexp(1.0, -k);
      if (center - d > 0.0) ts.push_back(center - d);
      if (center + d < 1.0) ts.push_back(center + d);
    }
  };
  if (rep.cls == Classification::interior)
    cluster(rep.omega);
  else if (rep.cls == Classification::lower)
    cluster(1.0);
  else if (rep.cls == Classification::upper)
    cluster(0.0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace detail

// Composite trapezoid for the L1 (Wasserstein) gap between h^(N) and the
// limit step. O(1/grid^2) away from the kink, which the clustered points
// resolve; identical grids across N make the decay monotone numerically.
inline double l1_distance(const RationalPoly& h, const FixedPointReport& rep, int N,
                          int grid_points = 10000) {
  if (grid_points < 1000) fail(errc::parameter_out_of_range, "need at least 1000 grid points");
  std::vector<double> ts = detail::l1_grid(rep, grid_points);
  double acc = 0.0, prev_t = ts[0],
         prev_f = std::fabs(iterate_eval(h, ts[0], N) - limit_function(rep, ts[0]));
  for (std::size_t i = 1; i < ts.size(); ++i) {
    double f = std::fabs(iterate_eval(h, ts[i], N) - limit_function(rep, ts[i]));
    acc += (ts[i] - prev_t) * 0.5 * (prev_f + f);
    prev_t = ts[i];
    prev_f = f;
  }
  return acc;
}

}  // namespace selector
