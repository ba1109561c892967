#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperzeta/character.hpp"
#include "hyperzeta/hsums.hpp"
#include "hyperzeta/laurent.hpp"
#include "hyperzeta/series.hpp"

namespace hyperzeta {

// All zeta functions are truncated series in T = q^{-s}; q^{-ds} is T^d.

/// exp(sum_{d=1}^{D} a_d T^d / d), with sums[d-1] = a_d.
ExactSeries zeta_from_sums(std::span<const CycloNumber> sums);

/// Zeta function of the torus subvariety P_1 = ... = P_k = 0, from point
/// counts over F_{q^d}, d = 1..D.
ExactSeries zeta_variety(const PolySystem& sys, unsigned D, const SumOptions& opts = {});

/// Hypergeometric zeta function from Phi_{q^d} with lifted characters.
/// chi, the pis and P are all over the base field F_q.
ExactSeries zeta_hyper_direct(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                              unsigned D, const SumOptions& opts = {});

/// A Frobenius orbit of size `degree` on (F_{q^degree}^x)^n. `rep` is the
/// orbit member with the lexicographically smallest coordinate encodings;
/// its coordinates live in embedding->ext().
struct ClosedPoint {
  unsigned degree = 1;
  EmbeddingPtr embedding;
  std::vector<Elem> rep;
};

/// All closed points of the n-torus over F_q of degree <= D, grouped by
/// degree ascending and sorted by representative within a degree.
std::vector<ClosedPoint> torus_closed_points(const FieldPtr& base, std::size_t nvars, unsigned D,
                                             const SumOptions& opts = {});

/// The orbit elements rep, rep^q, ..., rep^{q^{d-1}}.
std::vector<std::vector<Elem>> frobenius_orbit(const ClosedPoint& x);

/// rho(x) = chi(Tr P(t)) prod pi_j(N t_j) at any representative t of x
/// (defaults to x.rep).
CycloNumber rho(const ClosedPoint& x, const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                std::optional<std::span<const Elem>> at = std::nullopt);

/// Euler product over closed points of degree <= D of (1 - rho(x) T^{d(x)})^{-1}.
ExactSeries zeta_hyper_product(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                               unsigned D, const SumOptions& opts = {});

struct ProductReport {
  ExactSeries direct;
  ExactSeries product;
  bool equal = false;
  std::optional<std::size_t> first_mismatch;
};

ProductReport verify_product(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                             unsigned D, const SumOptions& opts = {});

/// One factor zeta_{X_S}(q^{shift} T)^{exponent}; X_S is cut out by the
/// equations in `subset` (the torus itself for the empty subset).
struct ZetaFactor {
  std::vector<std::size_t> subset;
  int exponent = 1;
  unsigned shift = 0;
  ExactSeries zeta;  // unshifted zeta_{X_S}(T)
};

struct FactorizationReport {
  std::vector<ZetaFactor> factors;
  ExactSeries hyper;    // zeta of the Cayley polynomial, trivial characters
  ExactSeries product;  // prod of the shifted factors
  bool equal = false;
};

/// zeta_hyp(T) = prod_{S subset {1..k}} zeta_{X_S}(q^{|S|} T)^{(-1)^{k-|S|}},
/// obtained by Moebius inversion of the Cayley identity over the subset
/// lattice; both sides are computed and compared exactly.
FactorizationReport cayley_factorize(const Character& chi, const PolySystem& sys, unsigned D,
                                     const SumOptions& opts = {});

}  // namespace hyperzeta
