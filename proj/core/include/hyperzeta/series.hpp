#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <vector>

#include "hyperzeta/cyclo.hpp"
#include "hyperzeta/error.hpp"

namespace hyperzeta {

template <class C>
struct SeriesTraits;

template <>
struct SeriesTraits<CycloNumber> {
  static CycloNumber from_int(long v) { return CycloNumber(Rational(v)); }
  static CycloNumber div_int(const CycloNumber& c, long n) { return c * CycloNumber(Rational(1, n)); }
  static bool is_zero(const CycloNumber& c) { return c.is_zero(); }
};

template <>
struct SeriesTraits<std::complex<double>> {
  static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static std::complex<double> div_int(std::complex<double> c, long n) { return c / static_cast<double>(n); }
  static bool is_zero(std::complex<double> c) { return c == std::complex<double>{}; }
};

/// c_0 + c_1 T + ... + c_D T^D modulo T^{D+1}.
template <class C>
class TruncatedSeries {
  using Tr = SeriesTraits<C>;

 public:
  TruncatedSeries() : TruncatedSeries(0) {}
  explicit TruncatedSeries(std::size_t D) : c_(D + 1, Tr::from_int(0)) {}
  explicit TruncatedSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw InvalidArgument("series needs at least a constant term");
  }

  static TruncatedSeries one(std::size_t D) {
    TruncatedSeries s(D);
    s.c_[0] = Tr::from_int(1);
    return s;
  }

  std::size_t degree() const noexcept { return c_.size() - 1; }
  const std::vector<C>& coeffs() const noexcept { return c_; }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  C& operator[](std::size_t i) { return c_.at(i); }

  TruncatedSeries& operator+=(const TruncatedSeries& b) {
    check_same(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& b) {
    check_same(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same(b);
    TruncatedSeries r(a.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Tr::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  /// 1 / this; requires an invertible constant term.
  TruncatedSeries inverse() const {
    if (Tr::is_zero(c_[0])) throw InvalidArgument("series with zero constant term is not invertible");
    TruncatedSeries r(degree());
    const C inv0 = Tr::from_int(1) / c_[0];
    r.c_[0] = inv0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
      C acc = Tr::from_int(0);
      for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
      r.c_[n] = -(acc * inv0);
    }
    return r;
  }

  /// T -> factor * T.
  TruncatedSeries scale_variable(const C& factor) const {
    TruncatedSeries r = *this;
    C f = Tr::from_int(1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      f = f * factor;
      r.c_[i] = r.c_[i] * f;
    }
    return r;
  }

  /// this^e for any integer e (negative via inverse).
  TruncatedSeries pow(long e) const {
    TruncatedSeries base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    TruncatedSeries r = one(degree());
    while (n) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

 private:
  void check_same(const TruncatedSeries& b) const {
    if (b.c_.size() != c_.size()) throw InvalidArgument("series truncation degrees differ");
  }

  std::vector<C> c_;
};

/// exp(a) for a with zero constant term, from n b_n = sum_{k=1}^n k a_k b_{n-k}.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& a) {
  using Tr = SeriesTraits<C>;
  if (!Tr::is_zero(a[0])) throw InvalidArgument("series_exp needs a zero constant term");
  auto b = TruncatedSeries<C>::one(a.degree());
  for (std::size_t n = 1; n <= a.degree(); ++n) {
    C acc = Tr::from_int(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (!Tr::is_zero(a[k])) acc += Tr::from_int(static_cast<long>(k)) * a[k] * b[n - k];
    }
    b[n] = Tr::div_int(acc, static_cast<long>(n));
  }
  return b;
}

/// log(b) for b with constant term 1, from n c_n = n b_n - sum_{k=1}^{n-1} k c_k b_{n-k}.
template <class C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& b) {
  using Tr = SeriesTraits<C>;
  if (!(b[0] == Tr::from_int(1))) throw InvalidArgument("series_log needs constant term 1");
  TruncatedSeries<C> c(b.degree());
  for (std::size_t n = 1; n <= b.degree(); ++n) {
    C acc = Tr::from_int(static_cast<long>(n)) * b[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Tr::from_int(static_cast<long>(k)) * c[k] * b[n - k];
    c[n] = Tr::div_int(acc, static_cast<long>(n));
  }
  return c;
}

using ExactSeries = TruncatedSeries<CycloNumber>;
using ComplexSeries = TruncatedSeries<std::complex<double>>;

template <class C>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<C>& s) {
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) os << (i ? ", " : "[") << s[i];
  return os << "]";
}

inline ComplexSeries to_complex(const ExactSeries& s) {
  std::vector<std::complex<double>> v;
  v.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) v.push_back(c.to_complex());
  return ComplexSeries(std::move(v));
}

}  // namespace hyperzeta
