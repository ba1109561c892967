#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperzeta {

using Complex = std::complex<double>;

/// numerator(T) / denominator(T), denominator(0) == 1.
struct RationalFn {
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;
  /// max |(B C - A)_i| over i <= deg_num + deg_den.
  double residual = 0.0;
  /// Same, over every supplied series coefficient.
  double full_residual = 0.0;
};

inline constexpr double kPadeTolerance = 1e-9;

/// [deg_num / deg_den] Pade approximant of c_0 + c_1 T + ... + c_D T^D.
/// Requires deg_num + deg_den <= D and c_0 != 0. The denominator solves the
/// Hankel system in the minimum-norm least-squares sense.
RationalFn pade(std::span<const Complex> series, std::size_t deg_num, std::size_t deg_den);

/// Smallest reconstruction consistent with all coefficients: scans total
/// degree deg_num + deg_den = 0..D-1 (so at least one coefficient is a pure
/// check), deg_den ascending within a total, and returns the first whose
/// full residual is <= tol. Throws NonConvergence when none fits.
RationalFn pade_auto(std::span<const Complex> series, double tol = kPadeTolerance);

Complex poly_eval(std::span<const Complex> coeffs, Complex x);

/// Roots of c_0 + c_1 x + ... + c_m x^m: companion-matrix eigenvalues, then
/// Newton polishing (kept only when it lowers the residual).
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

struct InverseRoot {
  Complex alpha;
  double magnitude = 0.0;
  /// 2 log|alpha| / log q.
  double weight = 0.0;
  /// Nearest integer to `weight` when within the weight tolerance.
  std::optional<int> integral_weight;
  /// |poly(1/alpha)|
  double residual = 0.0;
};

struct WeilReport {
  std::vector<InverseRoot> zeros;  // from the numerator
  std::vector<InverseRoot> poles;  // from the denominator
};

inline constexpr double kWeightTolerance = 1e-4;

/// Inverse roots alpha of numerator and denominator (poly = c_0 prod(1 - alpha T))
/// with |alpha| compared against q^{w/2}. Reports observations only.
WeilReport weil_probe(const RationalFn& r, std::uint64_t q);

}  // namespace hyperzeta
