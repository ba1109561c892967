#include "hyperzeta/ffield.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "hyperzeta/error.hpp"

namespace hyperzeta {

namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial g.
Poly poly_mod(Poly a, const Poly& g, std::uint32_t p) {
  trim(a);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t j = 0; j < dg; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * g[j]) % p);
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    // every monic g of degree d
    std::uint64_t count = saturating_pow(p, d);
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t j = 0; j < d; ++j) {
        g[j] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly find_defining_poly(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t count = saturating_pow(p, k);
  Poly f(k + 1, 0);
  f[k] = 1;
  // c_0 is the most significant digit of the lexicographic order
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t j = 0; j < k; ++j) {
      f[k - 1 - j] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

// Arithmetic on length-k coefficient vectors modulo the defining polynomial.
struct SlowArith {
  std::uint32_t p;
  std::uint32_t k;
  const Poly& f;

  Poly mul(const Poly& a, const Poly& b) const {
    Poly prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < k; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
      }
    }
    Poly r = poly_mod(std::move(prod), f, p);
    r.resize(k, 0);
    return r;
  }

  Poly pow(Poly a, std::uint64_t e) const {
    Poly r(k, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Poly decode(std::uint64_t code) const {
    Poly a(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      a[i] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    return a;
  }

  std::uint32_t encode(const Poly& a) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = k; i-- > 0;) code = code * p + a[i];
    return static_cast<std::uint32_t>(code);
  }
};

bool is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr>& field_cache() {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  return cache;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t k, std::uint64_t bound) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidArgument("extension degree must be positive");
  const std::uint64_t q64 = saturating_pow(p, k);
  if (q64 > bound || q64 > (std::uint64_t{1} << 31)) {
    throw BudgetExceeded("field F_" + std::to_string(p) + "^" + std::to_string(k) + " too large for tables",
                         q64, bound);
  }

  {
    std::lock_guard lock(cache_mutex());
    auto it = field_cache().find({p, k});
    if (it != field_cache().end()) return it->second;
  }

  auto field = std::shared_ptr<Field>(new Field());
  Field& F = *field;
  F.p_ = p;
  F.k_ = k;
  F.q_ = static_cast<std::uint32_t>(q64);
  F.defining_ = find_defining_poly(p, k);
  F.pow_p_.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) F.pow_p_[i] = static_cast<std::uint32_t>(saturating_pow(p, i));

  const std::uint32_t q = F.q_;
  const SlowArith arith{p, k, F.defining_};
  const auto factors = prime_factors(q - 1);

  Poly gen;
  for (std::uint32_t code = 1; code < q; ++code) {
    Poly cand = arith.decode(code);
    bool primitive = true;
    for (auto r : factors) {
      if (is_one(arith.pow(cand, (q - 1) / r))) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = std::move(cand);
      break;
    }
  }
  if (gen.empty()) throw InternalError("no multiplicative generator found");

  F.exp_.assign(q - 1, 0);
  F.log_.assign(q, UINT32_MAX);
  Poly cur(k, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    const std::uint32_t code = arith.encode(cur);
    if (F.log_[code] != UINT32_MAX) throw InternalError("generator order below q - 1");
    F.exp_[i] = code;
    F.log_[code] = i;
    cur = arith.mul(cur, gen);
  }
  if (!is_one(cur)) throw InternalError("generator order mismatch");

  F.trace_.assign(q, 0);
  for (std::uint32_t code = 1; code < q; ++code) {
    // sum of Frobenius conjugates a^{p^i}
    const std::uint64_t e = F.log_[code];
    Elem s{0};
    std::uint64_t pi = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      s = F.add(s, F.exp(mulmod(e, pi, q - 1)));
      pi *= p;
    }
    if (s.code >= p) throw InternalError("absolute trace outside prime field");
    F.trace_[code] = s.code;
  }

  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = field_cache().emplace(std::make_pair(p, k), field);
  return it->second;
}

bool same_field(const Field& a, const Field& b) noexcept {
  return a.characteristic() == b.characteristic() && a.degree() == b.degree();
}

Elem Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = p_;
  return Elem{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw InvalidArgument("too many coefficients for field element");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range [0, p)");
    code = code * p_ + coeffs[i];
  }
  return Elem{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(k_);
  std::uint32_t c = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (k_ == 1) return Elem{(a.code + b.code) % p_};
  if (p_ == 2) return Elem{a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t d = (x % p_ + y % p_) % p_;
    out += d * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  if (k_ == 1) return Elem{(p_ - a.code) % p_};
  std::uint32_t x = a.code, out = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * pow_p_[i];
    x /= p_;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a.code == 0 || b.code == 0) return Elem{0};
  std::uint32_t e = log_[a.code] + log_[b.code];
  if (e >= q_ - 1) e -= q_ - 1;
  return Elem{exp_[e]};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw InvalidArgument("inversion of zero");
  const std::uint32_t e = log_[a.code];
  return Elem{exp_[e == 0 ? 0 : q_ - 1 - e]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.code == 0) {
    if (e < 0) throw InvalidArgument("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t r = ((e % n) + n) % n;
  return Elem{exp_[mulmod(log_[a.code], static_cast<std::uint64_t>(r), q_ - 1)]};
}

std::uint32_t Field::dlog(Elem a) const {
  if (a.code == 0) throw InvalidArgument("discrete log of zero");
  return log_[a.code];
}

std::string Field::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a.code);
  if (a.code == 0) return "0";
  return "g^" + std::to_string(log_[a.code]);
}

std::optional<Elem> Embedding::pullback(Elem y) const noexcept {
  const std::int32_t x = preimage_[y.code];
  if (x < 0) return std::nullopt;
  return Elem{static_cast<std::uint32_t>(x)};
}

Elem Embedding::frobenius(Elem y) const noexcept {
  if (y.code == 0) return y;
  return ext_->exp(frobenius_dlog(ext_->dlog_unchecked(y)));
}

std::uint64_t Embedding::frobenius_dlog(std::uint64_t e) const noexcept {
  return mulmod(e, base_->order(), ext_->order() - 1);
}

Elem Embedding::rel_trace(Elem y) const {
  const Field& E = *ext_;
  Elem s = E.zero();
  Elem t = y;
  for (std::uint32_t i = 0; i < d_; ++i) {
    s = E.add(s, t);
    t = frobenius(t);
  }
  auto x = pullback(s);
  if (!x) throw InternalError("relative trace left the embedded base field");
  return *x;
}

Elem Embedding::rel_norm(Elem y) const {
  const Field& E = *ext_;
  Elem s = E.one();
  Elem t = y;
  for (std::uint32_t i = 0; i < d_; ++i) {
    s = E.mul(s, t);
    t = frobenius(t);
  }
  const std::int64_t exponent = (std::int64_t{E.order()} - 1) / (std::int64_t{base_->order()} - 1);
  if (E.pow(y, exponent) != s) throw InternalError("relative norm disagrees with its closed form");
  auto x = pullback(s);
  if (!x) throw InternalError("relative norm left the embedded base field");
  return *x;
}

EmbeddingPtr extend(const FieldPtr& base, std::uint32_t d, std::uint64_t bound) {
  if (!base) throw InvalidArgument("null base field");
  if (d == 0) throw InvalidArgument("extension degree must be positive");
  auto emb = std::shared_ptr<Embedding>(new Embedding());
  emb->base_ = base;
  emb->d_ = d;
  const Field& B = *base;
  const std::uint32_t q = B.order();

  if (d == 1) {
    emb->ext_ = base;
    emb->image_.resize(q);
    emb->preimage_.resize(q);
    for (std::uint32_t c = 0; c < q; ++c) {
      emb->image_[c] = c;
      emb->preimage_[c] = static_cast<std::int32_t>(c);
    }
    return emb;
  }

  if (std::uint64_t{B.degree()} * d > 64) {
    throw BudgetExceeded("extension degree too large", UINT64_MAX, bound);
  }
  emb->ext_ = make_field(B.characteristic(), B.degree() * d, bound);
  const Field& E = *emb->ext_;

  // minimal polynomial of the base generator over F_p: prod (x - g^{p^i})
  std::vector<Elem> minpoly{B.one()};
  Elem conj = B.generator();
  for (std::uint32_t i = 0; i < B.degree(); ++i) {
    std::vector<Elem> next(minpoly.size() + 1, B.zero());
    for (std::size_t j = 0; j < minpoly.size(); ++j) {
      next[j + 1] = B.add(next[j + 1], minpoly[j]);
      next[j] = B.sub(next[j], B.mul(conj, minpoly[j]));
    }
    minpoly = std::move(next);
    conj = B.pow(conj, B.characteristic());
  }
  std::vector<Elem> minpoly_ext;
  for (Elem c : minpoly) {
    if (c.code >= B.characteristic()) throw InternalError("minimal polynomial not over the prime field");
    minpoly_ext.push_back(E.from_int(c.code));
  }

  const auto factors = prime_factors(q - 1);
  std::optional<Elem> image;
  for (std::uint32_t code = 1; code < E.order() && !image; ++code) {
    const Elem h{code};
    Elem v = E.zero();
    for (std::size_t j = minpoly_ext.size(); j-- > 0;) v = E.add(E.mul(v, h), minpoly_ext[j]);
    if (v.code != 0) continue;
    if (E.pow(h, q - 1) != E.one()) continue;
    bool full_order = true;
    for (auto r : factors) {
      if (E.pow(h, static_cast<std::int64_t>((q - 1) / r)) == E.one()) full_order = false;
    }
    if (full_order) image = h;
  }
  if (!image) throw InternalError("no embedding image for the base generator");

  emb->image_.assign(q, 0);
  emb->preimage_.assign(E.order(), -1);
  emb->preimage_[0] = 0;
  for (std::uint32_t a = 0; a + 1 < q; ++a) {
    const Elem x = B.exp(a);
    const Elem y = E.pow(*image, a);
    emb->image_[x.code] = y.code;
    emb->preimage_[y.code] = static_cast<std::int32_t>(x.code);
  }
  return emb;
}

}  // namespace hyperzeta
