#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hyperzeta {

/// c_0 + c_1 x + ... + c_m x^m with m >= 1 and c_m != 0.
class ComplexPoly {
 public:
  explicit ComplexPoly(std::vector<std::complex<double>> coeffs);

  std::size_t degree() const noexcept { return c_.size() - 1; }
  const std::vector<std::complex<double>>& coeffs() const noexcept { return c_; }
  std::complex<double> operator()(std::complex<double> x) const;
  std::complex<double> derivative(std::complex<double> x) const;

 private:
  std::vector<std::complex<double>> c_;
};

struct ContourOptions {
  std::size_t nodes = 256;
  /// Allowed disagreement between the nodes and nodes/2 rules.
  double convergence_tol = 1e-6;
};

/// (1 / 2 pi i) \oint P'(t)/P(t) t dt over |t - center| = radius with the
/// periodic trapezoidal rule: the sum of the roots inside the circle, counted
/// with multiplicity. Throws NonConvergence when the rules on nodes and
/// nodes/2 points disagree, which signals a root close to the contour.
std::complex<double> root_contour(const ComplexPoly& p, std::complex<double> center, double radius,
                                  const ContourOptions& opts = {});

/// Number of roots inside the circle, (1 / 2 pi i) \oint P'/P dt, rounded.
long roots_inside(const ComplexPoly& p, std::complex<double> center, double radius, std::size_t nodes = 256);

/// The raw trapezoidal value with exactly `nodes` points, no convergence check.
std::complex<double> contour_moment(const ComplexPoly& p, std::complex<double> center, double radius,
                                    std::size_t nodes, int power);

}  // namespace hyperzeta
