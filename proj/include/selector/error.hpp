#pragma once

#include <stdexcept>
#include <string>

namespace selector {

// Stable machine-readable failure codes. The CLI maps these to exit code 1
// and a JSON error object; names never change once published.
enum class errc {
  empty_family,
  empty_set,
  ground_too_large,
  dimension_mismatch,
  coordinate_out_of_range,
  probability_out_of_range,
  not_monotone,
  degenerate_constant,
  ground_too_large_for_isomorphism,
  degree_too_small,
  composition_degree_overflow,
  invalid_profile,
  family_too_large,
  index_out_of_range,
  empty_sizes,
  projection_excluded,
  dimension_too_small,
  identity_has_no_sperner_point,
  extreme_order_statistic,
  singleton_block,
  parameter_out_of_range,
  not_interior_case,
  eta_out_of_range,
  projection_has_trivial_dynamics,
  resource_guard_exceeded,
  tree_too_deep,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_family: return "EmptyFamily";
    case errc::empty_set: return "EmptySet";
    case errc::ground_too_large: return "GroundTooLarge";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::coordinate_out_of_range: return "CoordinateOutOfRange";
    case errc::probability_out_of_range: return "ProbabilityOutOfRange";
    case errc::not_monotone: return "NotMonotone";
    case errc::degenerate_constant: return "DegenerateConstant";
    case errc::ground_too_large_for_isomorphism: return "GroundTooLargeForIsomorphism";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::composition_degree_overflow: return "CompositionDegreeOverflow";
    case errc::invalid_profile: return "InvalidProfile";
    case errc::family_too_large: return "FamilyTooLarge";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::empty_sizes: return "EmptySizes";
    case errc::projection_excluded: return "ProjectionExcluded";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::identity_has_no_sperner_point: return "IdentityHasNoSpernerPoint";
    case errc::extreme_order_statistic: return "ExtremeOrderStatistic";
    case errc::singleton_block: return "SingletonBlock";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::not_interior_case: return "NotInteriorCase";
    case errc::eta_out_of_range: return "EtaOutOfRange";
    case errc::projection_has_trivial_dynamics: return "ProjectionHasTrivialDynamics";
    case errc::resource_guard_exceeded: return "ResourceGuardExceeded";
    case errc::tree_too_deep: return "TreeTooDeep";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class selector_error : public std::runtime_error {
 public:
  selector_error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw selector_error(code, message);
}

}  // namespace selector
