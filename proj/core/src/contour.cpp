#include "hyperzeta/contour.hpp"

#include <cmath>
#include <numbers>

#include "hyperzeta/error.hpp"

namespace hyperzeta {

ComplexPoly::ComplexPoly(std::vector<std::complex<double>> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() < 2) throw InvalidArgument("polynomial degree must be at least 1");
  if (std::abs(c_.back()) == 0.0) throw InvalidArgument("leading coefficient must be nonzero");
}

std::complex<double> ComplexPoly::operator()(std::complex<double> x) const {
  std::complex<double> acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::complex<double> ComplexPoly::derivative(std::complex<double> x) const {
  std::complex<double> acc{};
  for (std::size_t i = c_.size(); i-- > 1;) acc = acc * x + c_[i] * static_cast<double>(i);
  return acc;
}

std::complex<double> contour_moment(const ComplexPoly& p, std::complex<double> center, double radius,
                                    std::size_t nodes, int power) {
  // t = c + r e^{i theta}, dt = i (t - c) d theta, so (1/2 pi i) \oint f dt = mean of f(t) (t - c)
  std::complex<double> acc{};
  for (std::size_t j = 0; j < nodes; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
    const std::complex<double> offset = std::polar(radius, theta);
    const std::complex<double> t = center + offset;
    const std::complex<double> pt = p(t);
    if (std::abs(pt) == 0.0) throw NonConvergence("root on the integration contour");
    acc += p.derivative(t) / pt * std::pow(t, power) * offset;
  }
  return acc / static_cast<double>(nodes);
}

std::complex<double> root_contour(const ComplexPoly& p, std::complex<double> center, double radius,
                                  const ContourOptions& opts) {
  if (!(radius > 0.0)) throw InvalidArgument("radius must be positive");
  if (opts.nodes < 16 || (opts.nodes & (opts.nodes - 1)) != 0) {
    throw InvalidArgument("node count must be a power of two >= 16");
  }
  const auto fine = contour_moment(p, center, radius, opts.nodes, 1);
  const auto coarse = contour_moment(p, center, radius, opts.nodes / 2, 1);
  if (std::abs(fine - coarse) > opts.convergence_tol * std::max(1.0, std::abs(fine))) {
    throw NonConvergence("contour quadrature did not converge; a root is likely near the circle");
  }
  return fine;
}

long roots_inside(const ComplexPoly& p, std::complex<double> center, double radius, std::size_t nodes) {
  return std::lround(contour_moment(p, center, radius, nodes, 0).real());
}

}  // namespace hyperzeta
