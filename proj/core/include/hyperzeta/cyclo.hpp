#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hyperzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint32_t kDefaultCyclotomicBound = 10'000;
inline constexpr std::size_t kSimplifyDegreeLimit = 256;

std::uint32_t euler_phi(std::uint32_t m);

/// Phi_m with integer coefficients, constant term first. Cached.
const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t m);

/// Exact element of Q(zeta_m), stored on the power basis 1, zeta_m, ...,
/// zeta_m^{phi(m)-1}. Binary operations on different orders lift both sides to
/// the lcm first; equality compares after lifting.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(Rational(0)) {}
  explicit CycloNumber(Rational r, std::uint32_t m = 1);
  CycloNumber(long v) : CycloNumber(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  static CycloNumber root_of_unity(std::uint32_t m, std::uint64_t e);
  /// sum_e counts[e] * zeta_m^e, reduced once. counts.size() must equal m.
  static CycloNumber from_exponent_counts(std::uint32_t m, std::span<const std::int64_t> counts);
  static CycloNumber from_exponent_counts(std::uint32_t m, std::span<const BigInt> counts);
  /// Reduces an arbitrary-length power-basis vector modulo Phi_m.
  static CycloNumber from_power_basis(std::uint32_t m, std::vector<Rational> coeffs);

  std::uint32_t order() const noexcept { return m_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Same number viewed in Q(zeta_target); target must be a multiple of order().
  CycloNumber lift(std::uint32_t target) const;

  bool is_zero() const noexcept;
  std::optional<BigInt> as_integer() const;
  std::optional<Rational> as_rational() const;
  std::complex<double> to_complex() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& b);
  CycloNumber& operator-=(const CycloNumber& b);
  CycloNumber& operator*=(const CycloNumber& b);
  CycloNumber& operator/=(const CycloNumber& b);
  /// Multiplication by zeta_m^e (order of this number or any multiple).
  CycloNumber times_root_of_unity(std::uint32_t m, std::uint64_t e) const;
  CycloNumber inverse() const;
  /// The same number written over the smallest Q(zeta_d) containing it.
  /// Numbers of degree above kSimplifyDegreeLimit are returned unchanged.
  CycloNumber simplified() const;
  CycloNumber pow(std::uint64_t e) const;

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// e.g. "2 + zeta_5^2 + zeta_5^3", "-1/2*zeta_3".
  std::string to_string() const;

 private:
  std::uint32_t m_ = 1;
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const CycloNumber& a) { return os << a.to_string(); }

/// embed_complex: zeta_m -> exp(2 pi i / m).
inline std::complex<double> embed_complex(const CycloNumber& a) { return a.to_complex(); }

}  // namespace hyperzeta
