#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperzeta/character.hpp"
#include "hyperzeta/cyclo.hpp"
#include "hyperzeta/laurent.hpp"

namespace hyperzeta {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SumOptions {
  /// Maximum number of evaluated tuples per enumeration.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; 0 selects hardware concurrency.
  unsigned threads = 0;
};

/// Phi_q(chi; P; pi_1..pi_n) = sum over (F_q^x)^n of chi(P(t)) prod pi_i(t_i).
/// chi must be additive and the pis multiplicative, all on P's field (possibly
/// lifted from a subfield).
CycloNumber phi(const Character& chi, const LaurentPoly& poly, std::span<const Character> pis,
                const SumOptions& opts = {});

/// Psi_q(chi; P_1..P_k): phi of the Cayley polynomial with k + n trivial
/// characters.
CycloNumber psi(const Character& chi, const PolySystem& sys, const SumOptions& opts = {});

/// Number of torus points with P_1 = ... = P_k = 0.
std::uint64_t count_points(const PolySystem& sys, const SumOptions& opts = {});

/// sum over lambda in F_q^k (full field) and t in (F_q^x)^n of
/// chi(sum lambda_i P_i(t)).
CycloNumber cayley_lhs(const Character& chi, const PolySystem& sys, const SumOptions& opts = {});

struct SubsetValue {
  std::vector<std::size_t> subset;  // 0-based equation indices, ascending
  CycloNumber value;
};

struct CayleyReport {
  CycloNumber lhs;     // direct double sum
  CycloNumber middle;  // (q-1)^n + sum of Psi over nonempty subsets
  BigInt rhs;          // q^k * #X(F_q)
  std::uint64_t points = 0;
  std::vector<SubsetValue> subset_values;
  bool all_equal = false;
};

/// Computes the three sides of the Cayley identity independently.
CayleyReport verify_cayley(const Character& chi, const PolySystem& sys, const SumOptions& opts = {});

/// Nonempty subsets of {0..k-1} in increasing bitmask order.
std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t k);

}  // namespace hyperzeta
