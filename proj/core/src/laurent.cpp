#include "hyperzeta/laurent.hpp"

#include <algorithm>

#include "hyperzeta/error.hpp"

namespace hyperzeta {

LaurentPoly::LaurentPoly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
  if (!field_) throw InvalidArgument("null field");
}

LaurentPoly::LaurentPoly(FieldPtr field, std::size_t nvars, std::vector<Term> terms)
    : LaurentPoly(std::move(field), nvars) {
  for (const auto& t : terms) {
    if (t.exponents.size() != nvars_) throw InvalidArgument("exponent vector length differs from variable count");
    if (!field_->contains(t.coeff)) throw InvalidArgument("coefficient outside the field");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponents == t.exponents) {
      terms_.back().coeff = field_->add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.code == 0) terms_.pop_back();
    } else if (t.coeff.code != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Elem LaurentPoly::eval(std::span<const Elem> point) const {
  if (point.size() != nvars_) throw InvalidArgument("point dimension differs from variable count");
  std::vector<std::uint64_t> dlogs(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (point[i].code == 0) throw InvalidArgument("Laurent polynomial evaluated at a zero coordinate");
    dlogs[i] = field_->dlog(point[i]);
  }
  return eval_dlog(dlogs);
}

Elem LaurentPoly::eval_dlog(std::span<const std::uint64_t> dlogs) const {
  const Field& F = *field_;
  const std::int64_t n = F.order() - 1;
  Elem acc = F.zero();
  for (const auto& t : terms_) {
    __int128 e = F.dlog_unchecked(t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) e += static_cast<__int128>(t.exponents[i]) * dlogs[i];
    e %= n;
    if (e < 0) e += n;
    acc = F.add(acc, F.exp(static_cast<std::uint64_t>(e)));
  }
  return acc;
}

void PolySystem::validate() const {
  if (!field) throw InvalidArgument("polynomial system without a field");
  for (const auto& p : equations) {
    if (!same_field(*p.field(), *field)) throw InvalidArgument("equation over a different field");
    if (p.nvars() != nvars) throw InvalidArgument("equations with mismatched variable counts");
  }
}

PolySystem PolySystem::subsystem(std::span<const std::size_t> indices) const {
  PolySystem out{field, nvars, {}};
  for (auto i : indices) out.equations.push_back(equations.at(i));
  return out;
}

LaurentPoly cayley_construct(const PolySystem& sys) {
  sys.validate();
  const std::size_t k = sys.equations.size();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& t : sys.equations[i].terms()) {
      Term u;
      u.exponents.assign(k, 0);
      u.exponents[i] = 1;
      u.exponents.insert(u.exponents.end(), t.exponents.begin(), t.exponents.end());
      u.coeff = t.coeff;
      terms.push_back(std::move(u));
    }
  }
  return LaurentPoly(sys.field, k + sys.nvars, std::move(terms));
}

LaurentPoly base_change(const LaurentPoly& poly, const Embedding& emb) {
  if (!same_field(*poly.field(), *emb.base())) throw InvalidArgument("base change along an unrelated embedding");
  std::vector<Term> terms;
  terms.reserve(poly.size());
  for (const auto& t : poly.terms()) terms.push_back(Term{t.exponents, emb.map(t.coeff)});
  return LaurentPoly(emb.ext(), poly.nvars(), std::move(terms));
}

PolySystem base_change(const PolySystem& sys, const Embedding& emb) {
  PolySystem out{emb.ext(), sys.nvars, {}};
  for (const auto& p : sys.equations) out.equations.push_back(base_change(p, emb));
  return out;
}

}  // namespace hyperzeta
