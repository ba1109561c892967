#include "hyperzeta/hsums.hpp"

#include <algorithm>
#include <string>

#include "hyperzeta/error.hpp"
#include "torus_walk.hpp"

namespace hyperzeta {

namespace {

void check_budget(std::uint64_t required, const SumOptions& opts, const std::string& what) {
  if (required > opts.budget) throw BudgetExceeded(what, required, opts.budget);
}

std::string field_name(const Field& f) { return "F_" + std::to_string(f.order()); }

void require_additive(const Character& chi, const Field& f) {
  if (chi.kind() != CharKind::additive) throw InvalidArgument("phi needs an additive character");
  if (!same_field(*chi.domain(), f)) throw InvalidArgument("additive character on a different field");
}

std::vector<std::int64_t> merge(const std::vector<std::vector<std::int64_t>>& parts, std::size_t m) {
  std::vector<std::int64_t> total(m, 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < m; ++i) total[i] += p[i];
  return total;
}

}  // namespace

std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

CycloNumber phi(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                const SumOptions& opts) {
  const Field& F = *poly.field();
  require_additive(chi, F);
  if (pis.size() != poly.nvars()) throw InvalidArgument("need one multiplicative character per variable");
  for (const auto& pi : pis) {
    if (pi.kind() != CharKind::multiplicative) throw InvalidArgument("pi_i must be multiplicative");
    if (!same_field(*pi.domain(), F)) throw InvalidArgument("multiplicative character on a different field");
    if (!pi.is_trivial() && pi.value_order() != chi.value_order()) {
      throw InvalidArgument("characters lifted from different base fields");
    }
  }
  const std::size_t n = poly.nvars();
  check_budget(saturating_pow(F.order() - 1, n), opts, "phi over " + field_name(F) + " in " + std::to_string(n) + " variables");

  const std::uint32_t m = chi.value_order();
  const auto& table = chi.additive_table();
  std::vector<std::uint64_t> steps;
  for (const auto& pi : pis) steps.push_back(pi.dlog_step());
  const bool trivial = std::all_of(steps.begin(), steps.end(), [](auto s) { return s == 0; });

  const std::span<const LaurentPoly> polys(&poly, 1);
  auto parts = detail::walk_torus(F, n, polys, opts.threads, std::vector<std::int64_t>(m, 0),
                                  [&](const detail::TorusWalker& w, std::vector<std::int64_t>& acc) {
                                    std::uint64_t e = table[w.value(0).code];
                                    if (!trivial) {
                                      const auto d = w.dlogs();
                                      for (std::size_t i = 0; i < n; ++i) e += (d[i] % m) * steps[i];
                                    }
                                    ++acc[e % m];
                                  });
  const auto total = merge(parts, m);
  return CycloNumber::from_exponent_counts(m, total);
}

CycloNumber psi(const Character& chi, const PolySystem& sys, const SumOptions& opts) {
  sys.validate();
  const LaurentPoly cayley = cayley_construct(sys);
  const std::vector<Character> trivial(cayley.nvars(), Character::trivial(sys.field));
  return phi(chi, cayley, trivial, opts);
}

std::uint64_t count_points(const PolySystem& sys, const SumOptions& opts) {
  sys.validate();
  const Field& F = *sys.field;
  check_budget(saturating_pow(F.order() - 1, sys.nvars), opts, "point count over " + field_name(F));
  const std::size_t k = sys.equations.size();
  auto parts = detail::walk_torus(F, sys.nvars, sys.equations, opts.threads, std::uint64_t{0},
                                  [&](const detail::TorusWalker& w, std::uint64_t& acc) {
                                    for (std::size_t i = 0; i < k; ++i)
                                      if (w.value(i).code != 0) return;
                                    ++acc;
                                  });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

CycloNumber cayley_lhs(const Character& chi, const PolySystem& sys, const SumOptions& opts) {
  sys.validate();
  const Field& F = *sys.field;
  require_additive(chi, F);
  const std::size_t k = sys.equations.size();
  const std::uint64_t lambdas = saturating_pow(F.order(), k);
  check_budget(saturating_mul(lambdas, saturating_pow(F.order() - 1, sys.nvars)), opts,
               "Cayley double sum over " + field_name(F));
  const std::uint32_t m = chi.value_order();
  const auto& table = chi.additive_table();
  const std::uint32_t q = F.order();

  auto parts = detail::walk_torus(F, sys.nvars, sys.equations, opts.threads, std::vector<std::int64_t>(m, 0),
                                  [&](const detail::TorusWalker& w, std::vector<std::int64_t>& acc) {
                                    std::vector<Elem> values(k);
                                    for (std::size_t i = 0; i < k; ++i) values[i] = w.value(i);
                                    std::vector<std::uint32_t> lambda(k, 0);
                                    for (std::uint64_t idx = 0; idx < lambdas; ++idx) {
                                      Elem s = F.zero();
                                      for (std::size_t i = 0; i < k; ++i)
                                        s = F.add(s, F.mul(Elem{lambda[i]}, values[i]));
                                      ++acc[table[s.code]];
                                      for (std::size_t i = 0; i < k; ++i) {
                                        if (++lambda[i] < q) break;
                                        lambda[i] = 0;
                                      }
                                    }
                                  });
  return CycloNumber::from_exponent_counts(m, merge(parts, m));
}

CayleyReport verify_cayley(const Character& chi, const PolySystem& sys, const SumOptions& opts) {
  sys.validate();
  const Field& F = *sys.field;
  CayleyReport r;
  r.lhs = cayley_lhs(chi, sys, opts);

  BigInt torus;
  mpz_ui_pow_ui(torus.get_mpz_t(), F.order() - 1, sys.nvars);
  r.middle = CycloNumber(Rational(torus));
  for (auto& subset : nonempty_subsets(sys.equations.size())) {
    CycloNumber v = psi(chi, sys.subsystem(subset), opts);
    r.middle += v;
    r.subset_values.push_back({std::move(subset), std::move(v)});
  }

  r.points = count_points(sys, opts);
  BigInt qk;
  mpz_ui_pow_ui(qk.get_mpz_t(), F.order(), sys.equations.size());
  r.rhs = qk * BigInt(static_cast<unsigned long>(r.points));
  r.all_equal = r.lhs == r.middle && r.middle == CycloNumber(Rational(r.rhs));
  return r;
}

}  // namespace hyperzeta
