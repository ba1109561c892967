#include "hyperzeta/nc_matrix.hpp"

#include "hyperzeta/error.hpp"

namespace hyperzeta {

NCMatrix2 operator*(const NCMatrix2& x, const NCMatrix2& y) {
  return {x.a1 * y.a1 + x.b1 * y.a2, x.a1 * y.b1 + x.b1 * y.b2, x.a2 * y.a1 + x.b2 * y.a2,
          x.a2 * y.b1 + x.b2 * y.b2};
}

NCMatrix2 nc_inverse_2x2(const NCMatrix2& x) {
  if (x.a1.is_zero()) throw ChartUndefined("a1 != 0");
  if (x.b1.is_zero()) throw ChartUndefined("b1 != 0");
  if (x.a2.is_zero()) throw ChartUndefined("a2 != 0");
  if (x.b2.is_zero()) throw ChartUndefined("b2 != 0");
  const Quasideterminants qd{x.a1 - x.b1 * x.b2.inverse() * x.a2, x.a2 - x.b2 * x.b1.inverse() * x.a1,
                             x.b1 - x.a1 * x.a2.inverse() * x.b2, x.b2 - x.a2 * x.a1.inverse() * x.b1};
  if (qd.q11.is_zero()) throw ChartUndefined("a1 - b1 b2^-1 a2 != 0");
  if (qd.q21.is_zero()) throw ChartUndefined("a2 - b2 b1^-1 a1 != 0");
  if (qd.q12.is_zero()) throw ChartUndefined("b1 - a1 a2^-1 b2 != 0");
  if (qd.q22.is_zero()) throw ChartUndefined("b2 - a2 a1^-1 b1 != 0");
  return {qd.q11.inverse(), qd.q21.inverse(), qd.q12.inverse(), qd.q22.inverse()};
}

NCIdentityReport nc_identity_check(const Quaternion& a1, const Quaternion& b1, const Quaternion& a2,
                                   const Quaternion& b2) {
  NCIdentityReport r;
  if (b2.is_zero()) {
    r.failed_conditions.emplace_back("b2 != 0");
  } else {
    const Quaternion q = a1 - b1 * b2.inverse() * a2;
    if (q.is_zero()) {
      r.failed_conditions.emplace_back("a1 - b1 b2^-1 a2 != 0");
    } else {
      r.lhs_defined = true;
      r.lhs = q.inverse();
    }
  }
  if (a2.is_zero()) {
    r.failed_conditions.emplace_back("a2 != 0");
  } else {
    const Quaternion q = b1 - a1 * a2.inverse() * b2;
    if (q.is_zero()) {
      r.failed_conditions.emplace_back("b1 - a1 a2^-1 b2 != 0");
    } else {
      r.rhs_defined = true;
      r.rhs = -(a2.inverse() * b2 * q.inverse());
    }
  }
  if (r.lhs_defined && r.rhs_defined) {
    r.coverage = "both";
    r.equal = *r.lhs == *r.rhs;
  } else if (r.lhs_defined) {
    r.coverage = "lhs-only";
  } else if (r.rhs_defined) {
    r.coverage = "rhs-only";
  } else {
    r.coverage = "neither";
  }
  return r;
}

}  // namespace hyperzeta
