#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperzeta/quaternion.hpp"

namespace hyperzeta {

/// 2x2 matrix over the rational quaternions, laid out as
///   ( a1 b1 )
///   ( a2 b2 ).
struct NCMatrix2 {
  Quaternion a1, b1, a2, b2;

  static NCMatrix2 identity() { return {1, 0, 0, 1}; }
  friend bool operator==(const NCMatrix2&, const NCMatrix2&) = default;
};

NCMatrix2 operator*(const NCMatrix2& x, const NCMatrix2& y);

/// The four quasideterminant denominators of the generic-chart inverse.
struct Quasideterminants {
  Quaternion q11;  // a1 - b1 b2^{-1} a2
  Quaternion q21;  // a2 - b2 b1^{-1} a1
  Quaternion q12;  // b1 - a1 a2^{-1} b2
  Quaternion q22;  // b2 - a2 a1^{-1} b1
};

/// Inverse through entrywise inverted quasideterminants:
///   ( (a1 - b1 b2^{-1} a2)^{-1}  (a2 - b2 b1^{-1} a1)^{-1} )
///   ( (b1 - a1 a2^{-1} b2)^{-1}  (b2 - a2 a1^{-1} b1)^{-1} ).
/// Throws ChartUndefined naming the first failed condition when an entry is
/// zero or a quasideterminant vanishes.
NCMatrix2 nc_inverse_2x2(const NCMatrix2& x);

/// Outcome of comparing the two expressions
///   L = (a1 - b1 b2^{-1} a2)^{-1}              defined for b2 != 0, a1 - b1 b2^{-1} a2 != 0
///   R = -a2^{-1} b2 (b1 - a1 a2^{-1} b2)^{-1}  defined for a2 != 0, b1 - a1 a2^{-1} b2 != 0
struct NCIdentityReport {
  bool lhs_defined = false;
  bool rhs_defined = false;
  std::optional<Quaternion> lhs;
  std::optional<Quaternion> rhs;
  /// Set only when both sides are defined.
  std::optional<bool> equal;
  /// "both", "lhs-only", "rhs-only" or "neither".
  std::string coverage;
  /// Domain conditions that failed, e.g. "b2 != 0".
  std::vector<std::string> failed_conditions;
};

NCIdentityReport nc_identity_check(const Quaternion& a1, const Quaternion& b1, const Quaternion& a2,
                                   const Quaternion& b2);

}  // namespace hyperzeta
