#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperzeta {

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

/// Element of a finite field F_{p^k}, stored by its encoding
/// sum(coeffs[i] * p^i) over the polynomial basis 1, x, ..., x^{k-1}.
/// The encoding order is the total order used for every deterministic choice.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_q, q = p^k, realized as F_p[x]/(f) with f the lexicographically smallest
/// monic irreducible polynomial of degree k (constant coefficient compared first).
/// Immutable after construction; share freely across threads.
class Field {
 public:
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  /// Monic defining polynomial, constant term first, length k + 1.
  const std::vector<std::uint32_t>& defining_poly() const noexcept { return defining_; }
  Elem generator() const noexcept { return Elem{exp_[1 % (q_ - 1)]}; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  bool contains(Elem a) const noexcept { return a.code < q_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e for any integer e; 0^0 = 1, negative powers of 0 throw.
  Elem pow(Elem a, std::int64_t e) const;

  /// g^e, e reduced modulo q - 1.
  Elem exp(std::uint64_t e) const noexcept { return Elem{exp_[e % (q_ - 1)]}; }
  /// Discrete log base the generator, in [0, q - 2]. Throws for zero.
  std::uint32_t dlog(Elem a) const;
  std::uint32_t dlog_unchecked(Elem a) const noexcept { return log_[a.code]; }

  /// Tr_{F_q/F_p}(a) as an integer in [0, p).
  std::uint32_t absolute_trace(Elem a) const noexcept { return trace_[a.code]; }

  std::string to_string(Elem a) const;

 private:
  friend FieldPtr make_field(std::uint32_t p, std::uint32_t k, std::uint64_t bound);
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> defining_;
  std::vector<std::uint32_t> exp_;    // dlog -> code, size q - 1
  std::vector<std::uint32_t> log_;    // code -> dlog, size q (entry 0 unused)
  std::vector<std::uint32_t> trace_;  // code -> absolute trace
  std::vector<std::uint32_t> pow_p_;  // p^i for i < k
};

/// Builds (or fetches from the process-wide cache) the field F_{p^k}.
/// Throws InvalidArgument if p is not prime or k == 0, BudgetExceeded if
/// p^k exceeds `bound`.
FieldPtr make_field(std::uint32_t p, std::uint32_t k, std::uint64_t bound = kDefaultFieldBound);

bool same_field(const Field& a, const Field& b) noexcept;

/// The inclusion F_q -> F_{q^d}, realized inside F_{p^{kd}} by sending the
/// base generator to the smallest-encoding root of its minimal polynomial.
class Embedding {
 public:
  const FieldPtr& base() const noexcept { return base_; }
  const FieldPtr& ext() const noexcept { return ext_; }
  std::uint32_t degree() const noexcept { return d_; }
  Elem image_of_base_generator() const noexcept { return Elem{image_[base_->generator().code]}; }

  Elem map(Elem x) const noexcept { return Elem{image_[x.code]}; }
  /// Preimage of an element of the embedded base field, nullopt otherwise.
  std::optional<Elem> pullback(Elem y) const noexcept;
  bool in_base(Elem y) const noexcept { return preimage_[y.code] >= 0; }

  /// y -> y^q, the generator of Gal(F_{q^d}/F_q).
  Elem frobenius(Elem y) const noexcept;
  /// Frobenius on discrete logs: dlog(y^q) = q * dlog(y) mod (q^d - 1).
  std::uint64_t frobenius_dlog(std::uint64_t e) const noexcept;

  /// sum_{i<d} y^{q^i}, returned in base-field coordinates.
  Elem rel_trace(Elem y) const;
  /// prod_{i<d} y^{q^i}, returned in base-field coordinates. Cross-checked
  /// against y^{(q^d-1)/(q-1)}.
  Elem rel_norm(Elem y) const;

 private:
  friend std::shared_ptr<const Embedding> extend(const FieldPtr&, std::uint32_t, std::uint64_t);
  Embedding() = default;

  FieldPtr base_;
  FieldPtr ext_;
  std::uint32_t d_ = 1;
  std::vector<std::uint32_t> image_;    // base code -> ext code
  std::vector<std::int32_t> preimage_;  // ext code -> base code or -1
};

using EmbeddingPtr = std::shared_ptr<const Embedding>;

/// F_q -> F_{q^d}. For d == 1 the extension is the base field itself and the
/// embedding is the identity.
EmbeddingPtr extend(const FieldPtr& base, std::uint32_t d, std::uint64_t bound = kDefaultFieldBound);

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace hyperzeta
