#include "hyperzeta/zeta.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hyperzeta/error.hpp"

namespace hyperzeta {

namespace {

void check_degree(unsigned D) {
  if (D == 0) throw InvalidArgument("truncation degree must be at least 1");
}

// Fails before any work if an enumeration at some degree d <= D is too large.
void precheck(const Field& base, std::size_t nvars, unsigned D, const SumOptions& opts, const std::string& what) {
  for (unsigned d = 1; d <= D; ++d) {
    const std::uint64_t Q = saturating_pow(base.order(), d);
    const std::uint64_t required = saturating_pow(Q - 1, nvars);
    if (required > opts.budget) {
      throw BudgetExceeded(what + " at degree " + std::to_string(d), required, opts.budget);
    }
    if (Q > kDefaultFieldBound) throw BudgetExceeded(what + ": extension field too large", Q, kDefaultFieldBound);
  }
}

void check_characters(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis) {
  const Field& F = *poly.field();
  if (chi.kind() != CharKind::additive || !same_field(*chi.domain(), F)) {
    throw InvalidArgument("additive character must be defined on the polynomial's field");
  }
  if (pis.size() != poly.nvars()) throw InvalidArgument("need one multiplicative character per variable");
  for (const auto& pi : pis) {
    if (pi.kind() != CharKind::multiplicative || !same_field(*pi.domain(), F)) {
      throw InvalidArgument("multiplicative characters must be defined on the polynomial's field");
    }
  }
}

// Lifted data needed to evaluate rho on points of one degree.
struct DegreeContext {
  LaurentPoly poly;
  Character chi;
  std::vector<Character> pis;
};

DegreeContext lift_all(const Embedding& emb, const Character& chi, const LaurentPoly& poly,
                       std::span<const Character> pis) {
  DegreeContext ctx{base_change(poly, emb), chi.lift(emb), {}};
  for (const auto& pi : pis) ctx.pis.push_back(pi.lift(emb));
  return ctx;
}

std::uint64_t rho_exponent(const DegreeContext& ctx, std::span<const Elem> t) {
  std::uint64_t e = ctx.chi.exponent(ctx.poly.eval(t));
  for (std::size_t i = 0; i < t.size(); ++i) e += ctx.pis[i].exponent(t[i]);
  return e % ctx.chi.value_order();
}

}  // namespace

ExactSeries zeta_from_sums(std::span<const CycloNumber> sums) {
  ExactSeries a(sums.size());
  for (std::size_t d = 1; d <= sums.size(); ++d) {
    a[d] = sums[d - 1] * CycloNumber(Rational(1, static_cast<long>(d)));
  }
  return series_exp(a);
}

ExactSeries zeta_variety(const PolySystem& sys, unsigned D, const SumOptions& opts) {
  sys.validate();
  check_degree(D);
  precheck(*sys.field, sys.nvars, D, opts, "zeta_variety point count");
  std::vector<CycloNumber> counts;
  for (unsigned d = 1; d <= D; ++d) {
    const auto emb = extend(sys.field, d);
    const auto n = count_points(base_change(sys, *emb), opts);
    counts.emplace_back(Rational(BigInt(static_cast<unsigned long>(n))));
  }
  return zeta_from_sums(counts);
}

ExactSeries zeta_hyper_direct(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                              unsigned D, const SumOptions& opts) {
  check_characters(chi, poly, pis);
  check_degree(D);
  precheck(*poly.field(), poly.nvars(), D, opts, "zeta_hyper_direct character sum");
  std::vector<CycloNumber> sums;
  for (unsigned d = 1; d <= D; ++d) {
    const auto emb = extend(poly.field(), d);
    const auto ctx = lift_all(*emb, chi, poly, pis);
    sums.push_back(phi(ctx.chi, ctx.poly, ctx.pis, opts));
  }
  return zeta_from_sums(sums);
}

std::vector<ClosedPoint> torus_closed_points(const FieldPtr& base, std::size_t nvars, unsigned D,
                                             const SumOptions& opts) {
  if (!base) throw InvalidArgument("null field");
  check_degree(D);
  const std::uint64_t required = saturating_pow(saturating_pow(base->order(), D), nvars);
  if (required > opts.budget) throw BudgetExceeded("closed point enumeration", required, opts.budget);
  precheck(*base, nvars, D, opts, "closed point enumeration");

  std::vector<ClosedPoint> out;
  for (unsigned d = 1; d <= D; ++d) {
    const auto emb = extend(base, d);
    const Field& E = *emb->ext();
    const std::uint64_t n = E.order() - 1;
    std::vector<ClosedPoint> level;
    std::vector<std::uint64_t> e(nvars, 0), f(nvars);
    std::vector<std::uint32_t> codes(nvars), other(nvars);
    const std::uint64_t total = saturating_pow(n, nvars);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      for (std::size_t i = 0; i < nvars; ++i) codes[i] = E.exp(e[i]).code;
      // walk the orbit; keep the tuple iff its orbit has size d and it is minimal
      bool keep = true;
      f = e;
      unsigned period = 0;
      for (unsigned j = 1; j <= d; ++j) {
        for (std::size_t i = 0; i < nvars; ++i) f[i] = emb->frobenius_dlog(f[i]);
        if (f == e) {
          period = j;
          break;
        }
        for (std::size_t i = 0; i < nvars; ++i) other[i] = E.exp(f[i]).code;
        if (other < codes) {
          keep = false;
          break;
        }
      }
      if (keep && period == d) {
        ClosedPoint x{d, emb, {}};
        for (auto c : codes) x.rep.push_back(Elem{c});
        level.push_back(std::move(x));
      }
      for (std::size_t i = nvars; i-- > 0;) {
        if (++e[i] < n) break;
        e[i] = 0;
      }
    }
    std::sort(level.begin(), level.end(), [](const ClosedPoint& a, const ClosedPoint& b) { return a.rep < b.rep; });
    for (auto& x : level) out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::vector<Elem>> frobenius_orbit(const ClosedPoint& x) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> cur = x.rep;
  for (unsigned j = 0; j < x.degree; ++j) {
    out.push_back(cur);
    for (auto& c : cur) c = x.embedding->frobenius(c);
  }
  return out;
}

CycloNumber rho(const ClosedPoint& x, const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                std::optional<std::span<const Elem>> at) {
  check_characters(chi, poly, pis);
  if (!same_field(*x.embedding->base(), *poly.field())) throw InvalidArgument("closed point over a different base field");
  const auto ctx = lift_all(*x.embedding, chi, poly, pis);
  const std::span<const Elem> t = at ? *at : std::span<const Elem>(x.rep);
  return CycloNumber::root_of_unity(chi.value_order(), rho_exponent(ctx, t));
}

ExactSeries zeta_hyper_product(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                               unsigned D, const SumOptions& opts) {
  check_characters(chi, poly, pis);
  const auto points = torus_closed_points(poly.field(), poly.nvars(), D, opts);
  const std::uint32_t m = chi.value_order();

  // (degree, exponent of rho) -> number of closed points
  std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t> groups;
  std::optional<DegreeContext> ctx;
  unsigned ctx_degree = 0;
  for (const auto& x : points) {
    if (!ctx || ctx_degree != x.degree) {
      ctx = lift_all(*x.embedding, chi, poly, pis);
      ctx_degree = x.degree;
    }
    ++groups[{x.degree, rho_exponent(*ctx, x.rep)}];
  }

  // Work in the group ring Z[mu_m]: coefficient i is a vector indexed by exponent.
  std::vector<std::vector<BigInt>> s(D + 1, std::vector<BigInt>(m, 0));
  s[0][0] = 1;
  for (const auto& [key, count] : groups) {
    const auto [d, e] = key;
    for (std::uint64_t c = 0; c < count; ++c) {
      // divide by (1 - zeta^e T^d): s_i += zeta^e s_{i-d}, ascending
      for (std::size_t i = d; i <= D; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
          const auto& src = s[i - d][j];
          if (src != 0) s[i][(j + e) % m] += src;
        }
      }
    }
  }
  ExactSeries out(D);
  for (std::size_t i = 0; i <= D; ++i) out[i] = CycloNumber::from_exponent_counts(m, s[i]);
  return out;
}

ProductReport verify_product(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                             unsigned D, const SumOptions& opts) {
  ProductReport r;
  r.direct = zeta_hyper_direct(chi, poly, pis, D, opts);
  r.product = zeta_hyper_product(chi, poly, pis, D, opts);
  for (std::size_t i = 0; i <= D; ++i) {
    if (!(r.direct[i] == r.product[i])) {
      r.first_mismatch = i;
      break;
    }
  }
  r.equal = !r.first_mismatch;
  return r;
}

FactorizationReport cayley_factorize(const Character& chi, const PolySystem& sys, unsigned D,
                                     const SumOptions& opts) {
  sys.validate();
  check_degree(D);
  const std::size_t k = sys.equations.size();
  if (k > 16) throw InvalidArgument("too many equations for subset enumeration");

  FactorizationReport r;
  const LaurentPoly cayley = cayley_construct(sys);
  const std::vector<Character> trivial(cayley.nvars(), Character::trivial(sys.field));
  r.hyper = zeta_hyper_direct(chi, cayley, trivial, D, opts);

  std::vector<std::vector<std::size_t>> subsets{{}};
  for (auto& s : nonempty_subsets(k)) subsets.push_back(std::move(s));

  r.product = ExactSeries::one(D);
  for (auto& subset : subsets) {
    ZetaFactor f;
    f.shift = static_cast<unsigned>(subset.size());
    f.exponent = (k - subset.size()) % 2 == 0 ? 1 : -1;
    f.zeta = zeta_variety(sys.subsystem(subset), D, opts);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), sys.field->order(), f.shift);
    const ExactSeries shifted = f.zeta.scale_variable(CycloNumber(Rational(scale)));
    r.product = r.product * shifted.pow(f.exponent);
    f.subset = std::move(subset);
    r.factors.push_back(std::move(f));
  }
  r.equal = r.hyper == r.product;
  return r;
}

}  // namespace hyperzeta
