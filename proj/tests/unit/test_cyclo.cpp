#include <random>

#include <gtest/gtest.h>

#include "hyperzeta/cyclo.hpp"
#include "hyperzeta/error.hpp"
#include "oracles.hpp"

using namespace hyperzeta;

namespace {

std::vector<long> as_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& c : v) out.push_back(c.get_si());
  return out;
}

CycloNumber z(std::uint32_t m, std::uint64_t e = 1) { return CycloNumber::root_of_unity(m, e); }

CycloNumber random_cyclo(std::mt19937_64& rng, std::uint32_t m) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(euler_phi(m));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return CycloNumber::from_power_basis(m, c);
}

}  // namespace

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(as_longs(cyclotomic_polynomial(1)), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(3)), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(6)), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(as_longs(cyclotomic_polynomial(12)), (std::vector<long>{1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, VanishesExactlyOnPrimitiveRoots) {
  for (std::uint32_t m = 1; m <= 60; ++m) {
    const auto& phi = cyclotomic_polynomial(m);
    ASSERT_EQ(phi.size() - 1, euler_phi(m));
    for (std::uint32_t e = 0; e < m; ++e) {
      std::complex<double> v{};
      for (std::size_t i = phi.size(); i-- > 0;) v = v * oracle::zeta(m, e) + phi[i].get_d();
      if (std::gcd(e, m) == 1) EXPECT_LT(std::abs(v), 1e-9) << m << " " << e;
    }
  }
}

TEST(CycloArith, Relations) {
  EXPECT_TRUE((CycloNumber(1) + z(3) + z(3, 2)).is_zero());
  EXPECT_EQ(z(4) * z(4), CycloNumber(-1));
  CycloNumber prod(1);
  for (int e = 1; e <= 4; ++e) prod *= CycloNumber(1) - z(5, e);
  EXPECT_EQ(prod, CycloNumber(5));
}

TEST(CycloArith, MixedOrdersLiftToLcm) {
  const CycloNumber s = z(3) + z(4);
  EXPECT_EQ(s.order(), 12u);
  EXPECT_LT(std::abs(s.to_complex() - (oracle::zeta(3, 1) + oracle::zeta(4, 1))), 1e-12);
  EXPECT_EQ(z(6, 2), z(3));
  EXPECT_EQ(CycloNumber(-1), z(2));
}

TEST(CycloArith, DivisionByZeroThrows) {
  EXPECT_THROW(CycloNumber(1) / (CycloNumber(1) + z(3) + z(3, 2)), InvalidArgument);
}

TEST(CycloArith, AgreesWithComplexEmbedding) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint32_t> pick_m(1, 60);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t m = pick_m(rng);
    const CycloNumber a = random_cyclo(rng, m), b = random_cyclo(rng, m);
    const auto ca = a.to_complex(), cb = b.to_complex();
    EXPECT_LT(std::abs((a + b).to_complex() - (ca + cb)), 1e-9);
    EXPECT_LT(std::abs((a - b).to_complex() - (ca - cb)), 1e-9);
    EXPECT_LT(std::abs((a * b).to_complex() - ca * cb), 1e-9 * std::max(1.0, std::abs(ca * cb)));
  }
}

TEST(CycloArith, DivisionRoundTrips) {
  std::mt19937_64 rng(43);
  for (std::uint32_t m : {5u, 7u, 12u, 20u, 30u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycloNumber a = random_cyclo(rng, m), b = random_cyclo(rng, m);
      if (b.is_zero()) continue;
      EXPECT_EQ((a * b) / b, a);
      EXPECT_EQ(b * b.inverse(), CycloNumber(1));
    }
  }
}

TEST(CycloNumber, UnreducedPreimageEmbedsIdentically) {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::uint32_t m : {6u, 15u, 20u, 42u}) {
    std::vector<Rational> raw(3 * m);
    std::complex<double> direct{};
    for (std::size_t i = 0; i < raw.size(); ++i) {
      raw[i] = coef(rng);
      direct += raw[i].get_d() * oracle::zeta(m, i);
    }
    const auto c = CycloNumber::from_power_basis(m, raw);
    EXPECT_EQ(c.coeffs().size(), euler_phi(m));
    EXPECT_LT(std::abs(c.to_complex() - direct), 1e-9);
  }
}

TEST(EmbedComplex, Examples) {
  EXPECT_EQ(CycloNumber(0).to_complex(), std::complex<double>(0, 0));
  EXPECT_LT(std::abs(z(4).to_complex() - std::complex<double>(0, 1)), 1e-15);
  const CycloNumber k = CycloNumber(2) + z(5, 2) + z(5, 3);
  EXPECT_NEAR(k.to_complex().real(), 2 + 2 * std::cos(4 * std::numbers::pi / 5), 1e-12);
  EXPECT_NEAR(k.to_complex().real(), 0.381966, 1e-6);
  EXPECT_NEAR(k.to_complex().imag(), 0.0, 1e-12);
}

TEST(AsInteger, Examples) {
  EXPECT_EQ(*(CycloNumber(1) + z(3) + z(3, 2)).as_integer(), 0);
  EXPECT_FALSE(z(3).as_integer());
  EXPECT_FALSE(CycloNumber(Rational(1, 2)).as_integer());
  std::vector<std::int64_t> counts(6, 0);
  counts[0] = 16;  // (q-1)^n chi(0)-terms, q = 5, n = 2, in Z[zeta_6]
  EXPECT_EQ(*CycloNumber::from_exponent_counts(6, counts).as_integer(), 16);
}

TEST(CycloNumber, ToString) {
  EXPECT_EQ((CycloNumber(2) + z(5, 2) + z(5, 3)).to_string(), "2 + zeta_5^2 + zeta_5^3");
  EXPECT_EQ(CycloNumber(0).to_string(), "0");
  EXPECT_EQ((-z(3)).to_string(), "-zeta_3");
}

TEST(CycloNumber, SimplifiedFindsSmallestField) {
  const auto kl = CycloNumber(2) + z(5, 2) + z(5, 3);
  const auto lifted = kl.lift(20);
  EXPECT_EQ(lifted.order(), 20u);
  const auto s = lifted.simplified();
  EXPECT_EQ(s.order(), 5u);
  EXPECT_EQ(s.to_string(), "2 + zeta_5^2 + zeta_5^3");
  EXPECT_EQ(z(12, 3).simplified().order(), 4u);
  EXPECT_EQ(z(10, 2).lift(30).simplified().order(), 5u);
  EXPECT_EQ(CycloNumber(7).lift(12).simplified().order(), 1u);
  // -zeta_3 generates Q(zeta_6) = Q(zeta_3); the smaller order wins
  EXPECT_EQ((-z(3)).lift(6).simplified().order(), 3u);
  std::mt19937_64 rng(61);
  for (std::uint32_t m : {12u, 20u, 30u, 42u}) {
    const auto x = random_cyclo(rng, m);
    EXPECT_EQ(x.simplified(), x);
    EXPECT_LE(x.simplified().order(), m);
  }
}
