#include <gtest/gtest.h>

#include "hyperzeta/character.hpp"
#include "hyperzeta/error.hpp"
#include "oracles.hpp"

using namespace hyperzeta;

namespace {

std::vector<FieldPtr> fields_up_to(std::uint64_t bound) {
  std::vector<FieldPtr> out;
  for (std::uint32_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t k = 1; oracle::ipow(p, k) <= bound; ++k) out.push_back(make_field(p, k));
  }
  return out;
}

// Trace to F_p by the power-sum definition, using only field multiplication.
std::uint32_t trace_by_powers(const Field& f, Elem x) {
  Elem s = f.zero(), c = x;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    s = f.add(s, c);
    c = f.pow(c, f.characteristic());
  }
  return s.code;
}

std::uint32_t dlog_by_search(const Field& f, Elem x) {
  Elem y = f.one();
  for (std::uint32_t e = 0;; ++e) {
    if (y == x) return e;
    y = f.mul(y, f.generator());
  }
}

// Indices tested for a field: all of them for small fields, a spread otherwise.
std::vector<std::uint64_t> indices_for(std::uint32_t q) {
  std::vector<std::uint64_t> out;
  if (q <= 512) {
    for (std::uint64_t j = 1; j + 1 < q; ++j) out.push_back(j);
    return out;
  }
  for (auto r : prime_factors(q - 1)) out.push_back((q - 1) / r);
  for (std::uint64_t j : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{q / 3}, std::uint64_t{q - 2}}) out.push_back(j);
  return out;
}

}  // namespace

TEST(CharEval, Examples) {
  auto f2 = make_field(2, 1);
  EXPECT_EQ(Character::additive(f2)(f2->one()), CycloNumber(-1));
  for (auto f : {make_field(3, 1), make_field(2, 3), make_field(7, 2)})
    EXPECT_EQ(Character::additive(f)(f->zero()), CycloNumber(1));
  auto f5 = make_field(5, 1);
  ASSERT_EQ(f5->generator(), Elem{2});
  const auto quad = Character::multiplicative(f5, 2);
  EXPECT_EQ(quad(Elem{2}), CycloNumber(-1));
  EXPECT_EQ(quad(Elem{4}), CycloNumber(1));
  EXPECT_THROW(quad(f5->zero()), InvalidArgument);
  EXPECT_THROW(Character::multiplicative(f5, 4), InvalidArgument);
  EXPECT_NO_THROW(Character::multiplicative(f5, 3));
}

TEST(CharEval, ValuesMatchDefinitions) {
  for (const auto& f : fields_up_to(64)) {
    const std::uint32_t p = f->characteristic(), q = f->order();
    const auto add = Character::additive(f);
    for (std::uint32_t c = 0; c < q; ++c) {
      const auto v = add(Elem{c}).to_complex();
      ASSERT_LT(std::abs(v - oracle::zeta(p, trace_by_powers(*f, Elem{c}))), 1e-9);
    }
    for (std::uint64_t j : {std::uint64_t{q - 2}, std::uint64_t{q / 2 - 1}}) {
      const auto pi = Character::multiplicative(f, j);
      for (std::uint32_t c = 1; c < q; ++c) {
        const auto v = pi(Elem{c}).to_complex();
        ASSERT_LT(std::abs(v - oracle::zeta(q - 1, j * dlog_by_search(*f, Elem{c}))), 1e-9);
      }
    }
  }
}

TEST(CharEval, OrthogonalityExhaustive) {
  for (const auto& f : fields_up_to(4096)) {
    const std::uint32_t p = f->characteristic(), q = f->order();
    const std::uint32_t m = character_value_order(*f);
    const auto add = Character::additive(f);
    // sum_x psi(a x) = 0 for a != 0; values are p-th roots of unity
    for (std::uint32_t a : {1u, f->generator().code, q - 1}) {
      std::vector<std::int64_t> counts(p, 0);
      std::vector<std::int64_t> full(q <= 64 ? m : 0, 0);
      for (std::uint32_t c = 0; c < q; ++c) {
        const auto e = add.exponent(f->mul(Elem{a}, Elem{c}));
        ASSERT_EQ(e % (q - 1), 0u);
        ++counts[e / (q - 1)];
        if (!full.empty()) ++full[e];
      }
      ASSERT_TRUE(oracle::uniform_on_subgroup(counts)) << "q=" << q << " a=" << a;
      if (!full.empty()) ASSERT_TRUE(CycloNumber::from_exponent_counts(m, full).is_zero());
    }
    // sum_{x != 0} pi_j(x) = 0 for j != 0; values are (q-1)-th roots of unity
    for (std::uint64_t j : indices_for(q)) {
      const auto pi = Character::multiplicative(f, j);
      std::vector<std::int64_t> counts(q - 1, 0);
      std::vector<std::int64_t> full(q <= 64 ? m : 0, 0);
      for (std::uint32_t c = 1; c < q; ++c) {
        const auto e = pi.exponent(Elem{c});
        ASSERT_EQ(e % p, 0u);
        ++counts[e / p];
        if (!full.empty()) ++full[e];
      }
      ASSERT_TRUE(oracle::uniform_on_subgroup(counts)) << "q=" << q << " j=" << j;
      if (!full.empty()) ASSERT_TRUE(CycloNumber::from_exponent_counts(m, full).is_zero());
    }
    const auto triv = Character::trivial(f);
    for (std::uint32_t c = 1; c < q; ++c) ASSERT_EQ(triv.exponent(Elem{c}), 0u);
  }
}

TEST(CharLift, Examples) {
  auto f2 = make_field(2, 1);
  auto e = extend(f2, 2);
  const auto lifted = Character::additive(f2).lift(*e);
  EXPECT_EQ(lifted(Elem{2}), CycloNumber(-1));
  const auto triv = Character::trivial(f2).lift(*e);
  EXPECT_TRUE(triv.is_trivial());
  for (std::uint32_t c = 1; c < 4; ++c) EXPECT_EQ(triv(Elem{c}), CycloNumber(1));
  EXPECT_THROW(Character::additive(make_field(3, 1)).lift(*e), InvalidArgument);
}

TEST(CharLift, TowersExhaustive) {
  for (std::uint32_t p = 2; p < 64; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint32_t k = 1; oracle::ipow(p, k) <= 4096; ++k) {
      for (std::uint32_t d = 2; oracle::ipow(p, k * d) <= 4096; ++d) {
        auto base = make_field(p, k);
        auto emb = extend(base, d);
        const Field& B = *base;
        const Field& E = *emb->ext();
        const auto add = Character::additive(base);
        const auto la = add.lift(*emb);
        EXPECT_EQ(la.value_order(), add.value_order());
        std::vector<std::int64_t> counts(p, 0);
        for (std::uint32_t c = 0; c < E.order(); ++c) {
          // trace by power sum in the extension, pulled back
          Elem s = E.zero(), conj{c};
          for (std::uint32_t i = 0; i < d; ++i) {
            s = E.add(s, conj);
            conj = E.pow(conj, B.order());
          }
          const auto t = emb->pullback(s);
          ASSERT_TRUE(t.has_value());
          ASSERT_EQ(la.exponent(Elem{c}), add.exponent(*t));
          ++counts[la.exponent(Elem{c}) / (B.order() - 1)];
        }
        // lifted additive character is nontrivial
        EXPECT_TRUE(oracle::uniform_on_subgroup(counts));
        for (std::uint64_t j : {std::uint64_t{B.order() - 2}, std::uint64_t{(B.order() - 1) / 2}}) {
          const auto pi = Character::multiplicative(base, j);
          const auto lp = pi.lift(*emb);
          const std::int64_t ne = (std::int64_t{E.order()} - 1) / (std::int64_t{B.order()} - 1);
          for (std::uint32_t c = 1; c < E.order(); ++c) {
            const auto n = emb->pullback(E.pow(Elem{c}, ne));
            ASSERT_TRUE(n.has_value());
            ASSERT_EQ(lp.exponent(Elem{c}), pi.exponent(*n));
          }
        }
      }
    }
  }
}

TEST(CharLift, LiftedCharactersAreCharacters) {
  auto base = make_field(3, 2);
  auto emb = extend(base, 2);
  const Field& E = *emb->ext();
  const auto la = Character::additive(base).lift(*emb);
  const auto lp = Character::multiplicative(base, 3).lift(*emb);
  const std::uint32_t m = la.value_order();
  for (std::uint32_t a = 0; a < E.order(); a += 7) {
    for (std::uint32_t b = 0; b < E.order(); b += 5) {
      EXPECT_EQ(la.exponent(E.add(Elem{a}, Elem{b})), (la.exponent(Elem{a}) + la.exponent(Elem{b})) % m);
      if (a && b)
        EXPECT_EQ(lp.exponent(E.mul(Elem{a}, Elem{b})), (lp.exponent(Elem{a}) + lp.exponent(Elem{b})) % m);
    }
  }
}
