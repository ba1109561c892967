#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperzeta/ffield.hpp"

namespace hyperzeta {

struct Term {
  std::vector<std::int64_t> exponents;
  Elem coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial sum_w c_w t^w in n variables over a finite field.
/// Canonical form: distinct exponent vectors, lexicographically sorted, no
/// zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly(FieldPtr field, std::size_t nvars);
  /// Terms with equal exponents are merged; zero coefficients dropped.
  LaurentPoly(FieldPtr field, std::size_t nvars, std::vector<Term> terms);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Value at a torus point; every coordinate must be nonzero.
  Elem eval(std::span<const Elem> point) const;
  /// Value at the point (g^{e_1}, ..., g^{e_n}).
  Elem eval_dlog(std::span<const std::uint64_t> dlogs) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return same_field(*a.field_, *b.field_) && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  FieldPtr field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Common carrier for a system of Laurent polynomial equations on the torus
/// (F_q^x)^n: the variety t_i != 0, P_1 = ... = P_k = 0.
struct PolySystem {
  FieldPtr field;
  std::size_t nvars = 0;
  std::vector<LaurentPoly> equations;

  /// Throws InvalidArgument unless every equation lives on `field` in `nvars` variables.
  void validate() const;
  PolySystem subsystem(std::span<const std::size_t> indices) const;
};

/// lambda_1 P_1 + ... + lambda_k P_k in k + n variables, the lambdas first.
LaurentPoly cayley_construct(const PolySystem& sys);

/// Coefficients pushed through emb; exponents unchanged.
LaurentPoly base_change(const LaurentPoly& poly, const Embedding& emb);
PolySystem base_change(const PolySystem& sys, const Embedding& emb);

}  // namespace hyperzeta
