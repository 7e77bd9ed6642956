#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "selector/error.hpp"
#include "selector/rational.hpp"

namespace selector {

// Input laws for the iteration and simulation modules. FiniteDiscrete keeps
// exact rational atom probabilities; atom positions are plain doubles.
struct DistributionModel {
  enum class Kind { finite_discrete, uniform01, bernoulli, normal } kind = Kind::uniform01;
  std::vector<std::pair<double, Rational>> atoms;  // strictly increasing values
  Rational q;                                      // bernoulli: P(X=1)
  double mean = 0.0, sd = 1.0;

  static DistributionModel uniform01() { return {}; }

  static DistributionModel bernoulli(const Rational& q) {
    if (!(q > 0 && q < 1)) fail(errc::probability_out_of_range, "bernoulli q must lie in (0,1)");
    DistributionModel d;
    d.kind = Kind::bernoulli;
    d.q = q;
    return d;
  }

  static DistributionModel normal(double mean, double sd) {
    if (!(sd > 0)) fail(errc::parameter_out_of_range, "normal sd must be positive");
    DistributionModel d;
    d.kind = Kind::normal;
    d.mean = mean;
    d.sd = sd;
    return d;
  }

  static DistributionModel discrete(std::vector<std::pair<double, Rational>> atoms) {
    if (atoms.empty()) fail(errc::parameter_out_of_range, "discrete law needs atoms");
    Rational total = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!(atoms[i].second > 0))
        fail(errc::probability_out_of_range, "atom probabilities must be positive");
      if (i > 0 && !(atoms[i].first > atoms[i - 1].first))
        fail(errc::parameter_out_of_range, "atom values must strictly increase");
      total += atoms[i].second;
    }
    if (total != 1) fail(errc::probability_out_of_range, "atom probabilities must sum to 1");
    DistributionModel d;
    d.kind = Kind::finite_discrete;
    d.atoms = std::move(atoms);
    return d;
  }

  bool is_discrete() const {
    return kind == Kind::finite_discrete || kind == Kind::bernoulli;
  }

  // Discrete laws as a uniform atom list; bernoulli becomes {0,1}.
  std::vector<std::pair<double, Rational>> atom_list() const {
    if (kind == Kind::bernoulli) return {{0.0, 1 - q}, {1.0, q}};
    return atoms;
  }
};

// The limit law Q_X(eta): a_X(eta) with probability eta, z_X(eta) otherwise;
// collapses to a constant when the two quantiles agree. Infinite essential
// bounds (normal at eta 0/1) are explicit infinities, serialized as strings.
struct QuantileValue {
  enum class Kind { constant, two_valued } kind = Kind::constant;
  double a = 0.0, z = 0.0;
  Rational eta;

  static QuantileValue constant(double v) { return {Kind::constant, v, v, Rational(0)}; }
  static QuantileValue two_valued(double a, double z, const Rational& eta) {
    return {Kind::two_valued, a, z, eta};
  }
};

inline double normal_cdf(double t, double mean, double sd) {
  return 0.5 * std::erfc(-(t - mean) / (sd * std::numbers::sqrt2));
}

// Inverse normal CDF by bisection; the CDF side is erfc-based with absolute
// error well under 1e-12, and the bracket +-12 sd covers every 53-bit eta.
inline double normal_quantile(double eta, double mean, double sd) {
  if (eta <= 0.0) return -std::numeric_limits<double>::infinity();
  if (eta >= 1.0) return std::numeric_limits<double>::infinity();
  double lo = mean - 12.0 * sd, hi = mean + 12.0 * sd;
  for (int i = 0; i < 90; ++i) {
    double mid = 0.5 * (lo + hi);
    (normal_cdf(mid, mean, sd) < eta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double cdf(const DistributionModel& d, double t) {
  switch (d.kind) {
    case DistributionModel::Kind::uniform01:
      return t < 0 ? 0.0 : t > 1 ? 1.0 : t;
    case DistributionModel::Kind::normal:
      return normal_cdf(t, d.mean, d.sd);
    default: {
      Rational acc = 0;
      for (const auto& [v, p] : d.atom_list())
        if (v <= t) acc += p;
      return to_double(acc);
    }
  }
}

inline QuantileValue quantile(const DistributionModel& d, const Rational& eta) {
  if (eta < 0 || eta > 1) fail(errc::eta_out_of_range, "eta must lie in [0,1]");
  switch (d.kind) {
    case DistributionModel::Kind::uniform01:
      return QuantileValue::constant(to_double(eta));
    case DistributionModel::Kind::normal:
      return QuantileValue::constant(
          eta == 0 ? -std::numeric_limits<double>::infinity()
                   : eta == 1 ? std::numeric_limits<double>::infinity()
                              : normal_quantile(to_double(eta), d.mean, d.sd));
    default: {
      auto atoms = d.atom_list();
      // a_X(eta) = first atom with cumulative >= eta; z_X(eta) with > eta.
      double a = atoms.back().first, z = atoms.back().first;
      Rational cum = 0;
      bool a_set = false, z_set = false;
      for (const auto& [v, p] : atoms) {
        cum += p;
        if (!a_set && cum >= eta) {
          a = v;
          a_set = true;
        }
        if (!z_set && cum > eta) {
          z = v;
          z_set = true;
        }
        if (a_set && z_set) break;
      }
      if (a == z || eta == 0 || eta == 1) return QuantileValue::constant(eta == 1 ? z : a);
      return QuantileValue::two_valued(a, z, eta);
    }
  }
}

// Inverse-CDF sampling from one uniform draw u in [0,1).
inline double sample(const DistributionModel& d, double u) {
  switch (d.kind) {
    case DistributionModel::Kind::uniform01:
      return u;
    case DistributionModel::Kind::normal:
      return normal_quantile(u, d.mean, d.sd);
    default: {
      auto atoms = d.atom_list();
      double cum = 0.0;
      for (const auto& [v, p] : atoms) {
        cum += to_double(p);
        if (u < cum) return v;
      }
      return atoms.back().first;
    }
  }
}

}  // namespace selector
