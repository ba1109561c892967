#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hyperzeta/cyclo.hpp"
#include "hyperzeta/ffield.hpp"

namespace hyperzeta {

enum class CharKind { additive, multiplicative };

/// Order of the root-of-unity group all character values of F_q live in:
/// p * (q - 1), i.e. mu_p x mu_{q-1}, the two factors being coprime.
std::uint32_t character_value_order(const Field& f) noexcept;

/// A character of F_q (additive) or F_q^x (multiplicative) with values that
/// are powers of zeta_m, m = character_value_order of the field it was
/// defined on. Lifting along an Embedding keeps m, so sums over all
/// extensions land in one cyclotomic field.
///
/// The additive character is the standard one, t -> zeta_p^{Tr_{F_q/F_p}(t)}.
/// The multiplicative character of index j sends g^a to zeta_{q-1}^{j a}.
class Character {
 public:
  static Character additive(FieldPtr field);
  static Character multiplicative(FieldPtr field, std::uint64_t index);
  static Character trivial(FieldPtr field) { return multiplicative(std::move(field), 0); }

  CharKind kind() const noexcept { return kind_; }
  /// Field the character is evaluated on (the extension, for lifted characters).
  const FieldPtr& domain() const noexcept { return domain_; }
  std::uint32_t value_order() const noexcept { return m_; }
  /// Index on the field the character was originally defined on.
  std::uint64_t index() const noexcept { return index_; }
  std::uint32_t lift_degree() const noexcept { return lift_degree_; }
  bool is_trivial() const noexcept { return kind_ == CharKind::multiplicative && dlog_step_ == 0; }

  /// Value is zeta_m^exponent(x). Multiplicative characters throw at zero.
  std::uint32_t exponent(Elem x) const;
  /// Multiplicative only: exponent of the value at g^e, g the domain generator.
  std::uint32_t exponent_at_dlog(std::uint64_t e) const noexcept;
  /// Multiplicative only: exponent_at_dlog(e) == e * dlog_step() mod m.
  std::uint32_t dlog_step() const noexcept { return dlog_step_; }
  /// Additive only: exponent indexed by element code.
  const std::vector<std::uint32_t>& additive_table() const noexcept { return *additive_table_; }

  CycloNumber operator()(Elem x) const;

  /// chi o Tr_{F_{q^d}/F_q} or pi o N_{F_{q^d}/F_q}. emb.base() must be this
  /// character's domain.
  Character lift(const Embedding& emb) const;

 private:
  Character() = default;

  CharKind kind_ = CharKind::additive;
  FieldPtr domain_;
  std::uint32_t m_ = 1;
  std::uint64_t index_ = 0;
  std::uint32_t lift_degree_ = 1;
  std::shared_ptr<const std::vector<std::uint32_t>> additive_table_;
  std::uint32_t dlog_step_ = 0;
};

inline CycloNumber char_eval(const Character& c, Elem x) { return c(x); }
inline Character char_lift(const Character& c, const Embedding& emb) { return c.lift(emb); }

}  // namespace hyperzeta
