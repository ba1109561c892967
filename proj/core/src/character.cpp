#include "hyperzeta/character.hpp"

#include "hyperzeta/error.hpp"

namespace hyperzeta {

std::uint32_t character_value_order(const Field& f) noexcept {
  return f.characteristic() * (f.order() - 1);
}

Character Character::additive(FieldPtr field) {
  if (!field) throw InvalidArgument("null field");
  Character c;
  c.kind_ = CharKind::additive;
  c.m_ = character_value_order(*field);
  const std::uint32_t scale = field->order() - 1;  // zeta_p = zeta_m^{q-1}
  auto table = std::make_shared<std::vector<std::uint32_t>>(field->order());
  for (std::uint32_t code = 0; code < field->order(); ++code) {
    (*table)[code] = field->absolute_trace(Elem{code}) * scale;
  }
  c.additive_table_ = std::move(table);
  c.domain_ = std::move(field);
  return c;
}

Character Character::multiplicative(FieldPtr field, std::uint64_t index) {
  if (!field) throw InvalidArgument("null field");
  if (index + 2 > field->order()) {
    throw InvalidArgument("multiplicative character index " + std::to_string(index) + " outside [0, " +
                          std::to_string(field->order() - 2) + "]");
  }
  Character c;
  c.kind_ = CharKind::multiplicative;
  c.m_ = character_value_order(*field);
  c.index_ = index;
  // zeta_{q-1} = zeta_m^p
  c.dlog_step_ = static_cast<std::uint32_t>((field->characteristic() * index) % c.m_);
  c.domain_ = std::move(field);
  return c;
}

std::uint32_t Character::exponent(Elem x) const {
  if (kind_ == CharKind::additive) return (*additive_table_)[x.code];
  if (x.code == 0) throw InvalidArgument("multiplicative character evaluated at zero");
  return exponent_at_dlog(domain_->dlog_unchecked(x));
}

std::uint32_t Character::exponent_at_dlog(std::uint64_t e) const noexcept {
  return static_cast<std::uint32_t>(static_cast<unsigned __int128>(e) * dlog_step_ % m_);
}

CycloNumber Character::operator()(Elem x) const { return CycloNumber::root_of_unity(m_, exponent(x)); }

Character Character::lift(const Embedding& emb) const {
  if (!same_field(*emb.base(), *domain_)) throw InvalidArgument("embedding base differs from character domain");
  Character c = *this;
  c.domain_ = emb.ext();
  c.lift_degree_ = lift_degree_ * emb.degree();
  if (emb.degree() == 1) return c;
  const Field& E = *emb.ext();
  if (kind_ == CharKind::additive) {
    auto table = std::make_shared<std::vector<std::uint32_t>>(E.order());
    for (std::uint32_t code = 0; code < E.order(); ++code) {
      (*table)[code] = (*additive_table_)[emb.rel_trace(Elem{code}).code];
    }
    c.additive_table_ = std::move(table);
  } else {
    // pi(N(g_ext^e)) = pi(g_base^{s e}) with s = dlog N(g_ext)
    const std::uint64_t s = emb.base()->dlog(emb.rel_norm(E.generator()));
    c.dlog_step_ = static_cast<std::uint32_t>(static_cast<unsigned __int128>(dlog_step_) * s % m_);
  }
  return c;
}

}  // namespace hyperzeta
