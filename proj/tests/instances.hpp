#pragma once

// Random polynomial systems shared by the unit and acceptance tests.

#include <random>

#include "hyperzeta/laurent.hpp"
#include "oracles.hpp"

namespace testing_support {

inline hyperzeta::LaurentPoly random_poly(std::mt19937_64& rng, const hyperzeta::FieldPtr& f, std::size_t nvars,
                                          std::size_t max_terms, std::int64_t max_exp = 2) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::int64_t> ex(-max_exp, max_exp);
  std::uniform_int_distribution<std::uint32_t> co(1, f->order() - 1);
  std::vector<hyperzeta::Term> terms;
  const std::size_t count = nterms(rng);
  for (std::size_t i = 0; i < count; ++i) {
    hyperzeta::Term t;
    for (std::size_t j = 0; j < nvars; ++j) t.exponents.push_back(ex(rng));
    t.coeff = hyperzeta::Elem{co(rng)};
    terms.push_back(std::move(t));
  }
  return hyperzeta::LaurentPoly(f, nvars, std::move(terms));
}

inline hyperzeta::PolySystem random_system(std::mt19937_64& rng, const hyperzeta::FieldPtr& f, std::size_t nvars,
                                           std::size_t k, std::size_t max_terms) {
  hyperzeta::PolySystem sys{f, nvars, {}};
  for (std::size_t i = 0; i < k; ++i) sys.equations.push_back(random_poly(rng, f, nvars, max_terms));
  return sys;
}

/// Prime-field polynomial in the plain form the oracles take.
inline oracle::PrimePoly to_prime(const hyperzeta::LaurentPoly& f) {
  oracle::PrimePoly out;
  for (const auto& t : f.terms()) out.push_back({t.exponents, t.coeff.code});
  return out;
}

}  // namespace testing_support
