#include <random>

#include <gtest/gtest.h>

#include "hyperzeta/error.hpp"
#include "hyperzeta/hsums.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace hyperzeta;
using testing_support::random_system;
using testing_support::to_prime;

namespace {

LaurentPoly poly(const FieldPtr& f, std::size_t n, std::vector<Term> terms) { return LaurentPoly(f, n, std::move(terms)); }

std::vector<Character> trivials(const FieldPtr& f, std::size_t n) { return std::vector<Character>(n, Character::trivial(f)); }

}  // namespace

TEST(Phi, Examples) {
  auto f3 = make_field(3, 1);
  EXPECT_EQ(phi(Character::additive(f3), LaurentPoly(f3, 1), trivials(f3, 1)), CycloNumber(2));
  EXPECT_EQ(phi(Character::additive(f3), poly(f3, 1, {{{1}, Elem{1}}}), trivials(f3, 1)), CycloNumber(-1));
  auto f5 = make_field(5, 1);
  const auto kl = phi(Character::additive(f5), poly(f5, 1, {{{1}, Elem{1}}, {{-1}, Elem{1}}}), trivials(f5, 1));
  const auto z5 = [](int e) { return CycloNumber::root_of_unity(5, e); };
  EXPECT_EQ(kl, CycloNumber(2) + z5(2) + z5(3));
  EXPECT_NEAR(std::abs(kl.to_complex()), 0.381966, 1e-6);
}

TEST(Phi, RejectsBadArguments) {
  auto f5 = make_field(5, 1);
  auto f7 = make_field(7, 1);
  const auto p = poly(f5, 1, {{{1}, Elem{1}}});
  EXPECT_THROW(phi(Character::trivial(f5), p, trivials(f5, 1)), InvalidArgument);
  EXPECT_THROW(phi(Character::additive(f5), p, trivials(f5, 2)), InvalidArgument);
  EXPECT_THROW(phi(Character::additive(f7), p, trivials(f5, 1)), InvalidArgument);
  const Character bad[] = {Character::multiplicative(f7, 1)};
  EXPECT_THROW(phi(Character::additive(f5), p, bad), InvalidArgument);
}

TEST(Phi, BudgetGuard) {
  auto f7 = make_field(7, 1);
  const auto p = poly(f7, 3, {{{1, 1, 1}, Elem{1}}});
  SumOptions opts;
  opts.budget = 100;
  try {
    phi(Character::additive(f7), p, trivials(f7, 3), opts);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), 216u);
    EXPECT_EQ(e.budget(), 100u);
  }
}

TEST(Phi, MatchesBruteForceOracle) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto f = make_field(p, 1);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t n = 1 + trial % 2;
      const auto P = testing_support::random_poly(rng, f, n, 4);
      std::uniform_int_distribution<std::uint64_t> idx(0, p - 2);
      std::vector<std::uint64_t> js;
      std::vector<Character> pis;
      for (std::size_t i = 0; i < n; ++i) {
        js.push_back(idx(rng));
        pis.push_back(Character::multiplicative(f, js.back()));
      }
      const auto v = phi(Character::additive(f), P, pis);
      EXPECT_LT(std::abs(v.to_complex() - oracle::phi_prime(p, n, to_prime(P), js)), 1e-9);
    }
  }
}

TEST(Phi, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(12);
  auto f = make_field(3, 2);
  const auto P = testing_support::random_poly(rng, f, 3, 4);
  const std::vector<Character> pis{Character::multiplicative(f, 2), Character::trivial(f), Character::multiplicative(f, 4)};
  SumOptions one, four;
  one.threads = 1;
  four.threads = 4;
  EXPECT_EQ(phi(Character::additive(f), P, pis, one), phi(Character::additive(f), P, pis, four));
}

TEST(Phi, GaussSumMagnitude) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto f = make_field(p, 1);
    const auto t = poly(f, 1, {{{1}, Elem{1}}});
    for (std::uint64_t j = 1; j + 1 < p; ++j) {
      const Character pis[] = {Character::multiplicative(f, j)};
      const auto g = phi(Character::additive(f), t, pis);
      EXPECT_NEAR(std::abs(g.to_complex()), std::sqrt(double(p)), 1e-9) << p << " " << j;
      // exact: G * conj(G) = q, conj(G) = pi(-1) G(pi^-1)
      const Character inv[] = {Character::multiplicative(f, p - 1 - j)};
      const auto h = phi(Character::additive(f), t, inv);
      const auto sign = Character::multiplicative(f, j)(f->neg(f->one()));
      EXPECT_EQ(g * h * sign, CycloNumber(p));
    }
  }
}

TEST(Phi, RescalingCovariance) {
  std::mt19937_64 rng(13);
  for (auto f : {make_field(5, 1), make_field(7, 1), make_field(2, 3)}) {
    const std::uint32_t q = f->order();
    std::uniform_int_distribution<std::uint32_t> nz(1, q - 1);
    std::uniform_int_distribution<std::uint64_t> idx(0, q - 2);
    for (int trial = 0; trial < 8; ++trial) {
      const auto P = testing_support::random_poly(rng, f, 2, 3);
      const Elem c[] = {Elem{nz(rng)}, Elem{nz(rng)}};
      std::vector<Term> scaled;
      for (const auto& t : P.terms()) {
        Elem coef = t.coeff;
        for (std::size_t i = 0; i < 2; ++i) coef = f->mul(coef, f->pow(c[i], t.exponents[i]));
        scaled.push_back({t.exponents, coef});
      }
      const LaurentPoly Pc(f, 2, scaled);
      const std::vector<Character> pis{Character::multiplicative(f, idx(rng)), Character::multiplicative(f, idx(rng))};
      const auto chi = Character::additive(f);
      const auto lhs = phi(chi, Pc, pis);
      const auto rhs = phi(chi, P, pis) / (pis[0](c[0]) * pis[1](c[1]));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Phi, GaloisInvariance) {
  auto base = make_field(3, 1);
  auto emb = extend(base, 2);
  const auto& E = emb->ext();
  const auto chi = Character::additive(base).lift(*emb);
  const auto pi = Character::multiplicative(base, 1).lift(*emb);
  const auto P = base_change(poly(base, 1, {{{1}, Elem{1}}, {{-2}, Elem{2}}}), *emb);
  const Character pis[] = {pi};
  const auto value = phi(chi, P, pis);
  // sum over frobenius(t) in place of t
  std::vector<std::int64_t> counts(chi.value_order(), 0);
  for (std::uint32_t c = 1; c < E->order(); ++c) {
    const Elem t[] = {emb->frobenius(Elem{c})};
    ++counts[(chi.exponent(P.eval(t)) + pi.exponent(t[0])) % chi.value_order()];
  }
  EXPECT_EQ(value, CycloNumber::from_exponent_counts(chi.value_order(), counts));
}

TEST(Psi, Examples) {
  auto f5 = make_field(5, 1);
  const PolySystem s1{f5, 1, {poly(f5, 1, {{{1}, Elem{1}}, {{0}, Elem{4}}})}};
  EXPECT_EQ(psi(Character::additive(f5), s1), CycloNumber(1));
  auto f2 = make_field(2, 1);
  const PolySystem s2{f2, 1, {poly(f2, 1, {{{1}, Elem{1}}})}};
  EXPECT_EQ(psi(Character::additive(f2), s2), CycloNumber(-1));
  for (auto f : {make_field(3, 1), make_field(2, 2)}) {
    const PolySystem zero{f, 2, {LaurentPoly(f, 2)}};
    const std::int64_t qm1 = f->order() - 1;
    EXPECT_EQ(psi(Character::additive(f), zero), CycloNumber(qm1 * qm1 * qm1));
  }
}

TEST(CountPoints, Examples) {
  auto f5 = make_field(5, 1);
  EXPECT_EQ(count_points(PolySystem{f5, 2, {}}), 16u);
  EXPECT_EQ(count_points(PolySystem{f5, 1, {poly(f5, 1, {{{1}, Elem{1}}, {{0}, Elem{4}}})}}), 1u);
  auto f3 = make_field(3, 1);
  EXPECT_EQ(count_points(PolySystem{f3, 2, {poly(f3, 2, {{{1, 0}, Elem{1}}, {{0, 1}, Elem{1}}, {{0, 0}, Elem{1}}})}}), 1u);
}

TEST(CayleyLhs, Examples) {
  auto f5 = make_field(5, 1);
  EXPECT_EQ(cayley_lhs(Character::additive(f5), PolySystem{f5, 1, {poly(f5, 1, {{{1}, Elem{1}}, {{0}, Elem{4}}})}}),
            CycloNumber(5));
  EXPECT_EQ(cayley_lhs(Character::additive(f5), PolySystem{f5, 2, {}}), CycloNumber(16));
  auto f2 = make_field(2, 1);
  EXPECT_EQ(cayley_lhs(Character::additive(f2), PolySystem{f2, 1, {poly(f2, 1, {{{1}, Elem{1}}})}}), CycloNumber(0));
}

TEST(VerifyCayley, WorkedExample) {
  auto f5 = make_field(5, 1);
  const auto r = verify_cayley(Character::additive(f5), PolySystem{f5, 1, {poly(f5, 1, {{{1}, Elem{1}}, {{0}, Elem{4}}})}});
  EXPECT_EQ(r.lhs, CycloNumber(5));
  EXPECT_EQ(r.middle, CycloNumber(5));
  EXPECT_EQ(r.rhs, 5);
  EXPECT_EQ(r.points, 1u);
  EXPECT_TRUE(r.all_equal);
  const auto empty = verify_cayley(Character::additive(f5), PolySystem{f5, 1, {}});
  EXPECT_EQ(empty.rhs, 4);
  EXPECT_TRUE(empty.all_equal);
}

TEST(VerifyCayley, RandomInstancesAgainstOracle) {
  std::mt19937_64 rng(2024);
  const std::uint32_t primes[] = {2, 3, 5};
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = primes[trial % 3];
    auto f = make_field(p, 1);
    const std::size_t n = 1 + (trial / 3) % 2;
    const std::size_t k = (trial / 6) % 3;
    const auto sys = random_system(rng, f, n, k, 4);
    const auto r = verify_cayley(Character::additive(f), sys);
    ASSERT_TRUE(r.all_equal) << "trial " << trial;
    std::vector<oracle::PrimePoly> eqs;
    for (const auto& e : sys.equations) eqs.push_back(to_prime(e));
    const std::uint64_t pts = oracle::count_prime(p, n, eqs);
    EXPECT_EQ(r.points, pts);
    EXPECT_EQ(r.rhs, BigInt(oracle::ipow(p, k) * pts));
    EXPECT_EQ(r.subset_values.size(), (std::size_t{1} << k) - 1);
  }
}

TEST(NonemptySubsets, BitmaskOrder) {
  const auto s = nonempty_subsets(2);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(s[1], (std::vector<std::size_t>{1}));
  EXPECT_EQ(s[2], (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(nonempty_subsets(0).empty());
}
