#include "hyperzeta/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hyperzeta/error.hpp"

namespace hyperzeta {

namespace {

std::vector<BigInt> exact_divide(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  // den is monic
  const std::size_t dd = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw InternalError("cyclotomic division not exact");
  }
  return quot;
}

template <class T>
void reduce_in_place(std::vector<T>& a, std::uint32_t m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    const T c = a[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) a[i - deg + j] -= c * phi[j];
    }
    a[i] = 0;
  }
  a.resize(deg, T(0));
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > kDefaultCyclotomicBound) throw InvalidArgument("cyclotomic order " + std::to_string(l) + " exceeds bound");
  return static_cast<std::uint32_t>(l);
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t m) {
  std::uint32_t r = m;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    while (m % d == 0) m /= d;
    r -= r / d;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0 || m > kDefaultCyclotomicBound) {
    throw InvalidArgument("cyclotomic order " + std::to_string(m) + " out of range");
  }
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<BigInt>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_e for every proper divisor e of m
  std::vector<BigInt> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint32_t e = 1; e < m; ++e) {
    if (m % e == 0) poly = exact_divide(std::move(poly), cyclotomic_polynomial(e));
  }
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(poly)).first->second;
}

CycloNumber::CycloNumber(Rational r, std::uint32_t m) : m_(m) {
  coeffs_.assign(euler_phi(m), Rational(0));
  coeffs_[0] = std::move(r);
  coeffs_[0].canonicalize();
}

CycloNumber CycloNumber::root_of_unity(std::uint32_t m, std::uint64_t e) {
  std::vector<Rational> v(m, Rational(0));
  v[e % m] = 1;
  return from_power_basis(m, std::move(v));
}

CycloNumber CycloNumber::from_exponent_counts(std::uint32_t m, std::span<const std::int64_t> counts) {
  if (counts.size() != m) throw InvalidArgument("exponent count vector has wrong length");
  std::vector<BigInt> v(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) v[i] = BigInt(static_cast<long>(counts[i]));
  return from_exponent_counts(m, v);
}

CycloNumber CycloNumber::from_exponent_counts(std::uint32_t m, std::span<const BigInt> counts) {
  if (counts.size() != m) throw InvalidArgument("exponent count vector has wrong length");
  std::vector<BigInt> v(counts.begin(), counts.end());
  reduce_in_place(v, m);
  CycloNumber out;
  out.m_ = m;
  out.coeffs_.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.coeffs_[i] = Rational(v[i]);
  return out;
}

CycloNumber CycloNumber::from_power_basis(std::uint32_t m, std::vector<Rational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  reduce_in_place(coeffs, m);
  CycloNumber out;
  out.m_ = m;
  out.coeffs_ = std::move(coeffs);
  return out;
}

CycloNumber CycloNumber::lift(std::uint32_t target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) throw InvalidArgument("lift target is not a multiple of the order");
  const std::uint32_t step = target / m_;
  std::vector<Rational> v(target, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
  return from_power_basis(target, std::move(v));
}

bool CycloNumber::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> CycloNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<BigInt> CycloNumber::as_integer() const {
  auto r = as_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return r->get_num();
}

std::complex<double> CycloNumber::to_complex() const {
  const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / m_);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i].get_d();
  return acc;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& b) {
  if (b.m_ != m_) {
    const std::uint32_t l = lcm32(m_, b.m_);
    *this = lift(l);
    return *this += b.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& b) { return *this += -b; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& b) {
  if (b.m_ != m_) {
    const std::uint32_t l = lcm32(m_, b.m_);
    *this = lift(l);
    return *this *= b.lift(l);
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_in_place(prod, m_);
  coeffs_ = std::move(prod);
  return *this;
}

CycloNumber CycloNumber::times_root_of_unity(std::uint32_t m, std::uint64_t e) const {
  if (m != m_) {
    const std::uint32_t l = lcm32(m_, m);
    return lift(l).times_root_of_unity(l, (e % m) * (l / m));
  }
  const std::size_t n = coeffs_.size();
  const std::size_t shift = e % m_;
  std::vector<Rational> v(n + shift, Rational(0));
  for (std::size_t i = 0; i < n; ++i) v[i + shift] = coeffs_[i];
  // zeta^m = 1 folds indices >= m back
  std::vector<Rational> folded(std::max<std::size_t>(m_, n), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) folded[i % m_] += v[i];
  return from_power_basis(m_, std::move(folded));
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero cyclotomic number");
  const std::size_t n = coeffs_.size();
  // column j of the multiplication matrix is this * zeta^j
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
  CycloNumber col = *this;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
    col = col.times_root_of_unity(m_, 1);
  }
  a[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw InternalError("singular multiplication matrix for nonzero cyclotomic number");
    std::swap(a[piv], a[c]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t j = c; j <= n; ++j) a[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  CycloNumber out;
  out.m_ = m_;
  out.coeffs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = a[i][n];
  return out;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& b) { return *this *= b.inverse(); }

CycloNumber CycloNumber::simplified() const {
  const std::size_t n = coeffs_.size();
  if (m_ == 1 || n > kSimplifyDegreeLimit) return *this;
  if (auto r = as_rational()) return CycloNumber(*r);
  for (std::uint32_t d = 2; d < m_; ++d) {
    if (m_ % d) continue;
    const std::size_t k = euler_phi(d);
    if (k > n) continue;
    // columns zeta_d^j = zeta_m^{j m/d}, j < phi(d), then the right-hand side
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t j = 0; j < k; ++j) {
      const auto col = root_of_unity(m_, j * (m_ / d));
      for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
    }
    for (std::size_t i = 0; i < n; ++i) a[i][k] = coeffs_[i];
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k && row < n; ++c) {
      std::size_t piv = row;
      while (piv < n && a[piv][c] == 0) ++piv;
      if (piv == n) continue;
      std::swap(a[piv], a[row]);
      const Rational inv = 1 / a[row][c];
      for (std::size_t j = c; j <= k; ++j) a[row][j] *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == row || a[r][c] == 0) continue;
        const Rational f = a[r][c];
        for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[row][j];
      }
      pivot_col.push_back(c);
      ++row;
    }
    bool consistent = true;
    for (std::size_t r = row; r < n && consistent; ++r) consistent = a[r][k] == 0;
    if (!consistent) continue;
    std::vector<Rational> b(k, Rational(0));
    for (std::size_t r = 0; r < row; ++r) b[pivot_col[r]] = a[r][k];
    return from_power_basis(d, std::move(b));
  }
  return *this;
}

CycloNumber CycloNumber::pow(std::uint64_t e) const {
  CycloNumber r(Rational(1), m_);
  CycloNumber base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.m_ == b.m_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t l = lcm32(a.m_, b.m_);
  return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "zeta_" << m_;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace hyperzeta
