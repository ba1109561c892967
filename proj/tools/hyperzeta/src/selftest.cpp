#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "hyperzeta/character.hpp"
#include "hyperzeta/hsums.hpp"
#include "hyperzeta/nc_matrix.hpp"
#include "hyperzeta/zeta.hpp"
#include "hyperzeta_cli/app.hpp"

namespace hyperzeta::cli {

namespace {

struct Check {
  std::string name;
  std::uint32_t q;
  std::function<std::string()> body;  // empty string on success, else a reason
};

LaurentPoly random_poly(std::mt19937_64& rng, const FieldPtr& f, std::size_t nvars, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::int64_t> ex(-2, 2);
  std::uniform_int_distribution<std::uint32_t> co(1, f->order() - 1);
  std::vector<Term> terms(nterms(rng));
  for (auto& t : terms) {
    for (std::size_t j = 0; j < nvars; ++j) t.exponents.push_back(ex(rng));
    t.coeff = Elem{co(rng)};
  }
  return LaurentPoly(f, nvars, std::move(terms));
}

std::string cayley_battery(std::uint32_t q) {
  auto f = make_field(q, 1);
  std::mt19937_64 rng(1000 + q);
  for (int i = 0; i < 8; ++i) {
    PolySystem sys{f, 1 + std::size_t(i % 2), {}};
    for (int e = 0; e < (i / 2) % 3; ++e) sys.equations.push_back(random_poly(rng, f, sys.nvars, 4));
    if (!verify_cayley(Character::additive(f), sys).all_equal) return "instance " + std::to_string(i);
  }
  return {};
}

std::string product_battery(std::uint32_t q) {
  auto f = make_field(q, 1);
  std::mt19937_64 rng(2000 + q);
  for (int i = 0; i < 4; ++i) {
    const std::size_t n = 1 + i % 2;
    const auto P = random_poly(rng, f, n, 3);
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
      std::vector<Character> pis(n, Character::multiplicative(f, j));
      if (!verify_product(Character::additive(f), P, pis, n == 1 ? 4 : 3).equal)
        return "instance " + std::to_string(i) + " index " + std::to_string(j);
    }
  }
  return {};
}

std::string factorization_battery(std::uint32_t q) {
  auto f = make_field(q, 1);
  PolySystem line{f, 1, {LaurentPoly(f, 1, {{{1}, f->one()}, {{0}, f->neg(f->one())}})}};
  if (!cayley_factorize(Character::additive(f), line, 3).equal) return "t - 1";
  std::mt19937_64 rng(3000 + q);
  for (int i = 0; i < 2; ++i) {
    PolySystem sys{f, 1, {random_poly(rng, f, 1, 3), random_poly(rng, f, 1, 3)}};
    if (q > 3) sys.equations.pop_back();
    if (!cayley_factorize(Character::additive(f), sys, 3).equal) return "instance " + std::to_string(i);
  }
  return {};
}

std::string orthogonality_battery(std::uint32_t q) {
  auto f = make_field(q, 1);
  const std::uint32_t m = character_value_order(*f);
  const auto chi = Character::additive(f);
  for (std::uint32_t a = 1; a < q; ++a) {
    std::vector<std::int64_t> counts(m, 0);
    for (std::uint32_t x = 0; x < q; ++x) ++counts[chi.exponent(f->mul(Elem{a}, Elem{x}))];
    if (!CycloNumber::from_exponent_counts(m, counts).is_zero()) return "additive, a = " + std::to_string(a);
  }
  for (std::uint64_t j = 1; j + 1 < q; ++j) {
    const auto pi = Character::multiplicative(f, j);
    std::vector<std::int64_t> counts(m, 0);
    for (std::uint32_t x = 1; x < q; ++x) ++counts[pi.exponent(Elem{x})];
    if (!CycloNumber::from_exponent_counts(m, counts).is_zero()) return "multiplicative, index " + std::to_string(j);
  }
  return {};
}

std::string gauss_battery(std::uint32_t q) {
  auto f = make_field(q, 1);
  const LaurentPoly t(f, 1, {{{1}, f->one()}});
  for (std::uint64_t j = 1; j + 1 < q; ++j) {
    const Character pi[] = {Character::multiplicative(f, j)};
    const Character conj[] = {Character::multiplicative(f, q - 1 - j)};
    const auto g = phi(Character::additive(f), t, pi);
    const auto h = phi(Character::additive(f), t, conj);
    if (g * h * pi[0](f->neg(f->one())) != CycloNumber(static_cast<long>(q))) return "index " + std::to_string(j);
  }
  return {};
}

std::string quaternion_battery() {
  std::mt19937_64 rng(4000);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  auto r = [&] {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    return x;
  };
  int both = 0;
  for (int i = 0; i < 200; ++i) {
    const NCMatrix2 x{{r(), r(), r(), r()}, {r(), r(), r(), r()}, {r(), r(), r(), r()}, {r(), r(), r(), r()}};
    const auto rep = nc_identity_check(x.a1, x.b1, x.a2, x.b2);
    if (rep.equal && !*rep.equal) return "identity, sample " + std::to_string(i);
    if (rep.coverage == "both") ++both;
    try {
      const auto y = nc_inverse_2x2(x);
      if (!(x * y == NCMatrix2::identity()) || !(y * x == NCMatrix2::identity())) return "inverse, sample " + std::to_string(i);
    } catch (const ChartUndefined&) {
    }
  }
  return both > 0 ? std::string{} : std::string("no sample in the common domain");
}

}  // namespace

SelftestResult selftest(bool timing) {
  std::vector<Check> checks;
  for (std::uint32_t q : {2u, 3u, 5u}) checks.push_back({"cayley-identity", q, [q] { return cayley_battery(q); }});
  for (std::uint32_t q : {2u, 3u}) checks.push_back({"euler-product", q, [q] { return product_battery(q); }});
  for (std::uint32_t q : {2u, 3u, 5u}) checks.push_back({"shifted-zeta-factorization", q, [q] { return factorization_battery(q); }});
  for (std::uint32_t q : {2u, 3u, 5u}) checks.push_back({"character-orthogonality", q, [q] { return orthogonality_battery(q); }});
  for (std::uint32_t q : {3u, 5u}) checks.push_back({"gauss-sum-norm", q, [q] { return gauss_battery(q); }});
  checks.push_back({"quaternion-chart-identity", 0, quaternion_battery});

  SelftestResult out;
  json rows = json::array();
  std::string table = "check                        q  result  time_ms\n";
  std::size_t passed = 0;
  double total_ms = 0.0;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.body();
    } catch (const std::exception& e) {
      reason = e.what();
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    const double ms = timing ? std::round(elapsed.count() * 10.0) / 10.0 : 0.0;
    total_ms += ms;
    const bool ok = reason.empty();
    passed += ok;
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %2s  %-6s  %7.1f%s%s\n", c.name.c_str(),
                  c.q ? std::to_string(c.q).c_str() : "-", ok ? "pass" : "FAIL", ms, ok ? "" : "  ", reason.c_str());
    table += line;
    rows.push_back(json{{"check", c.name},
                        {"q", c.q ? json(c.q) : json(nullptr)},
                        {"passed", ok},
                        {"time_ms", ms},
                        {"detail", reason}});
  }
  table += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  out.table = table;
  out.exit_code = passed == checks.size() ? kExitOk : kExitVerificationFailed;
  out.report = json{{"command", "selftest"},
                    {"input", nullptr},
                    {"result", json{{"checks", rows}, {"passed", passed}, {"total", checks.size()}}},
                    {"verified", passed == checks.size()},
                    {"timing_ms", timing ? std::round(total_ms * 10.0) / 10.0 : 0.0}};
  return out;
}

}  // namespace hyperzeta::cli
