#include <random>

#include <gtest/gtest.h>

#include "hyperzeta/error.hpp"
#include "hyperzeta/series.hpp"
#include "oracles.hpp"

using namespace hyperzeta;

namespace {

ExactSeries from_rationals(const std::vector<mpq_class>& v) {
  std::vector<CycloNumber> c;
  for (const auto& x : v) c.emplace_back(x);
  return ExactSeries(c);
}

}  // namespace

TEST(SeriesExp, Geometric) {
  ExactSeries a(4);
  for (int d = 1; d <= 4; ++d) a[d] = CycloNumber(Rational(1, d));
  EXPECT_EQ(series_exp(a), from_rationals({1, 1, 1, 1, 1}));
  ExactSeries b(3);
  for (int d = 1; d <= 3; ++d) b[d] = CycloNumber(Rational(1 << d, d));
  EXPECT_EQ(series_exp(b), from_rationals({1, 2, 4, 8}));
}

TEST(SeriesExp, RejectsNonzeroConstant) {
  EXPECT_THROW(series_exp(ExactSeries::one(3)), InvalidArgument);
  EXPECT_THROW(series_log(ExactSeries(3)), InvalidArgument);
}

TEST(SeriesLog, InvertsExpExactly) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    ExactSeries a(6);
    for (std::size_t d = 1; d <= 6; ++d) {
      Rational r(num(rng), 1 + trial % 3);
      r.canonicalize();
      a[d] = CycloNumber(r) + CycloNumber::root_of_unity(6, d) * CycloNumber(num(rng));
    }
    EXPECT_EQ(series_log(series_exp(a)), a);
  }
}

TEST(Series, ProductInverseAndPow) {
  const auto s = from_rationals({1, -3, 2, 5});
  EXPECT_EQ(s * s.inverse(), ExactSeries::one(3));
  EXPECT_EQ(s.pow(3), s * s * s);
  EXPECT_EQ(s.pow(-2), (s * s).inverse());
  // (1 - T)^2 / (1 - 3T)
  const auto num = from_rationals({1, -2, 1, 0, 0, 0, 0});
  const auto den = from_rationals({1, -3, 0, 0, 0, 0, 0});
  const auto expect = oracle::rational_series({1, -2, 1}, {1, -3}, 6);
  EXPECT_EQ(num * den.inverse(), from_rationals(expect));
}

TEST(Series, ScaleVariable) {
  const auto s = from_rationals({1, 1, 1, 1});
  EXPECT_EQ(s.scale_variable(CycloNumber(2)), from_rationals({1, 2, 4, 8}));
}

TEST(Series, MismatchedDegreesThrow) {
  EXPECT_THROW(ExactSeries(2) + ExactSeries(3), InvalidArgument);
}

TEST(ComplexSeries, ExpLogRoundTrip) {
  ComplexSeries a(5);
  for (std::size_t d = 1; d <= 5; ++d) a[d] = {0.3 * d, -0.1 * d};
  const auto b = series_log(series_exp(a));
  for (std::size_t d = 0; d <= 5; ++d) EXPECT_LT(std::abs(b[d] - a[d]), 1e-12);
}
