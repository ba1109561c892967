#include <gtest/gtest.h>

#include "hyperzeta/error.hpp"
#include "hyperzeta/laurent.hpp"

using namespace hyperzeta;

TEST(LaurentPoly, CanonicalForm) {
  auto f5 = make_field(5, 1);
  LaurentPoly p(f5, 2, {{{1, 0}, Elem{2}}, {{0, -1}, Elem{1}}, {{1, 0}, Elem{3}}, {{2, 2}, Elem{0}}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].exponents, (std::vector<std::int64_t>{0, -1}));
  EXPECT_THROW(LaurentPoly(f5, 2, {{{1}, Elem{1}}}), InvalidArgument);
  EXPECT_THROW(LaurentPoly(f5, 1, {{{1}, Elem{7}}}), InvalidArgument);
}

TEST(LaurentPoly, EvalExamples) {
  auto f5 = make_field(5, 1);
  const Elem pt[] = {Elem{2}, Elem{3}};
  EXPECT_EQ(LaurentPoly(f5, 2).eval(pt), f5->zero());
  LaurentPoly ratio(f5, 2, {{{1, -1}, Elem{1}}});
  EXPECT_EQ(ratio.eval(pt), Elem{4});
  LaurentPoly tm1(f5, 1, {{{1}, Elem{1}}, {{0}, Elem{4}}});
  const Elem one[] = {Elem{1}};
  EXPECT_EQ(tm1.eval(one), f5->zero());
  const Elem zero[] = {Elem{0}};
  EXPECT_THROW(tm1.eval(zero), InvalidArgument);
}

TEST(LaurentPoly, EvalDlogAgreesWithEval) {
  auto f = make_field(3, 2);
  LaurentPoly p(f, 2, {{{2, -1}, Elem{5}}, {{-2, 0}, Elem{1}}, {{0, 3}, Elem{7}}, {{0, 0}, Elem{2}}});
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      const std::uint64_t dl[] = {a, b};
      const Elem pt[] = {f->exp(a), f->exp(b)};
      // independent: expand each monomial with pow
      Elem expect = f->zero();
      for (const auto& t : p.terms())
        expect = f->add(expect, f->mul(t.coeff, f->mul(f->pow(pt[0], t.exponents[0]), f->pow(pt[1], t.exponents[1]))));
      EXPECT_EQ(p.eval(pt), expect);
      EXPECT_EQ(p.eval_dlog(dl), expect);
    }
  }
}

TEST(CayleyConstruct, Examples) {
  auto f2 = make_field(2, 1);
  PolySystem sys{f2, 1, {LaurentPoly(f2, 1, {{{1}, Elem{1}}}), LaurentPoly(f2, 1, {{{0}, Elem{1}}})}};
  const auto c = cayley_construct(sys);
  EXPECT_EQ(c.nvars(), 3u);
  EXPECT_EQ(c, LaurentPoly(f2, 3, {{{1, 0, 1}, Elem{1}}, {{0, 1, 0}, Elem{1}}}));
  PolySystem empty{f2, 2, {}};
  const auto z = cayley_construct(empty);
  EXPECT_EQ(z.nvars(), 2u);
  EXPECT_TRUE(z.is_zero());
}

TEST(CayleyConstruct, SingleEquationEvaluatesToLambdaP) {
  auto f = make_field(7, 1);
  LaurentPoly p(f, 1, {{{1}, Elem{1}}, {{-1}, Elem{3}}});
  const auto c = cayley_construct(PolySystem{f, 1, {p}});
  for (std::uint32_t l = 1; l < 7; ++l) {
    for (std::uint32_t t = 1; t < 7; ++t) {
      const Elem pt[] = {Elem{l}, Elem{t}};
      const Elem tt[] = {Elem{t}};
      EXPECT_EQ(c.eval(pt), f->mul(Elem{l}, p.eval(tt)));
    }
  }
}

TEST(BaseChange, DegreeOneIsIdentityAndValuesCommute) {
  auto f4 = make_field(2, 2);
  LaurentPoly p(f4, 2, {{{1, 1}, Elem{2}}, {{0, -1}, Elem{3}}});
  EXPECT_EQ(base_change(p, *extend(f4, 1)), p);
  auto emb = extend(f4, 3);
  const auto pe = base_change(p, *emb);
  for (std::uint32_t a = 1; a < 4; ++a) {
    for (std::uint32_t b = 1; b < 4; ++b) {
      const Elem pt[] = {Elem{a}, Elem{b}};
      const Elem img[] = {emb->map(Elem{a}), emb->map(Elem{b})};
      EXPECT_EQ(pe.eval(img), emb->map(p.eval(pt)));
    }
  }
}

TEST(PolySystem, ValidateAndSubsystem) {
  auto f3 = make_field(3, 1);
  auto f5 = make_field(5, 1);
  PolySystem bad{f3, 1, {LaurentPoly(f5, 1)}};
  EXPECT_THROW(bad.validate(), InvalidArgument);
  PolySystem sys{f3, 1, {LaurentPoly(f3, 1, {{{1}, Elem{1}}}), LaurentPoly(f3, 1, {{{2}, Elem{2}}})}};
  EXPECT_NO_THROW(sys.validate());
  const std::size_t idx[] = {1};
  const auto sub = sys.subsystem(idx);
  ASSERT_EQ(sub.equations.size(), 1u);
  EXPECT_EQ(sub.equations[0], sys.equations[1]);
}
