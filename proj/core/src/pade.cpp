#include "hyperzeta/pade.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "hyperzeta/error.hpp"

namespace hyperzeta {

namespace {

Complex coeff_or_zero(std::span<const Complex> c, std::ptrdiff_t i) {
  return i < 0 || i >= static_cast<std::ptrdiff_t>(c.size()) ? Complex{} : c[static_cast<std::size_t>(i)];
}

double residual_upto(std::span<const Complex> c, const RationalFn& r, std::size_t last) {
  double worst = 0.0;
  for (std::size_t i = 0; i <= last; ++i) {
    Complex bc{};
    for (std::size_t j = 0; j < r.denominator.size() && j <= i; ++j) bc += r.denominator[j] * coeff_or_zero(c, static_cast<std::ptrdiff_t>(i - j));
    const Complex a = i < r.numerator.size() ? r.numerator[i] : Complex{};
    worst = std::max(worst, std::abs(bc - a));
  }
  return worst;
}

std::vector<Complex> trimmed(std::span<const Complex> c) {
  std::vector<Complex> v(c.begin(), c.end());
  while (v.size() > 1 && std::abs(v.back()) == 0.0) v.pop_back();
  return v;
}

}  // namespace

RationalFn pade(std::span<const Complex> series, std::size_t deg_num, std::size_t deg_den) {
  if (series.empty()) throw InvalidArgument("pade needs at least one coefficient");
  const std::size_t D = series.size() - 1;
  if (deg_num + deg_den > D) throw InvalidArgument("pade degrees exceed the series length");
  if (std::abs(series[0]) == 0.0) throw InvalidArgument("pade needs a nonzero constant term");

  RationalFn r;
  r.denominator.assign(deg_den + 1, Complex{});
  r.denominator[0] = 1.0;
  if (deg_den > 0) {
    // sum_{j=1}^{M} B_j c_{i-j} = -c_i for i = L+1 .. L+M
    Eigen::MatrixXcd a(deg_den, deg_den);
    Eigen::VectorXcd rhs(deg_den);
    for (std::size_t row = 0; row < deg_den; ++row) {
      const auto i = static_cast<std::ptrdiff_t>(deg_num + 1 + row);
      for (std::size_t j = 1; j <= deg_den; ++j) a(row, j - 1) = coeff_or_zero(series, i - static_cast<std::ptrdiff_t>(j));
      rhs(row) = -coeff_or_zero(series, i);
    }
    const Eigen::VectorXcd b = a.completeOrthogonalDecomposition().solve(rhs);
    if (!b.allFinite()) throw NonConvergence("singular Pade system");
    for (std::size_t j = 1; j <= deg_den; ++j) r.denominator[j] = b(j - 1);
  }
  r.numerator.assign(deg_num + 1, Complex{});
  for (std::size_t i = 0; i <= deg_num; ++i) {
    for (std::size_t j = 0; j <= std::min(i, deg_den); ++j) r.numerator[i] += r.denominator[j] * series[i - j];
  }
  r.residual = residual_upto(series, r, deg_num + deg_den);
  r.full_residual = residual_upto(series, r, D);
  return r;
}

RationalFn pade_auto(std::span<const Complex> series, double tol) {
  if (series.size() < 2) throw InvalidArgument("pade_auto needs at least two coefficients");
  const std::size_t D = series.size() - 1;
  for (std::size_t total = 0; total < D; ++total) {
    for (std::size_t den = 0; den <= total; ++den) {
      RationalFn r = pade(series, total - den, den);
      if (r.full_residual <= tol) return r;
    }
  }
  throw NonConvergence("no rational reconstruction with a spare check coefficient fits within tolerance");
}

Complex poly_eval(std::span<const Complex> coeffs, Complex x) {
  Complex acc{};
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  const auto c = trimmed(coeffs);
  const std::size_t m = c.size() - 1;
  if (m == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
  for (std::size_t i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < m; ++i) companion(i, m - 1) = -c[i] / c[m];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NonConvergence("companion eigenvalue solver failed");

  std::vector<Complex> deriv(m);
  for (std::size_t i = 1; i <= m; ++i) deriv[i - 1] = c[i] * static_cast<double>(i);

  std::vector<Complex> roots;
  for (std::size_t i = 0; i < m; ++i) {
    Complex z = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    for (int it = 0; it < 20; ++it) {
      const Complex fz = poly_eval(c, z);
      const Complex dz = poly_eval(deriv, z);
      if (std::abs(dz) == 0.0) break;
      const Complex next = z - fz / dz;
      if (!(std::abs(poly_eval(c, next)) < std::abs(fz))) break;
      z = next;
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : std::arg(a) < std::arg(b);
  });
  return roots;
}

namespace {

std::vector<InverseRoot> inverse_roots(std::span<const Complex> poly, std::uint64_t q) {
  std::vector<InverseRoot> out;
  for (Complex root : polynomial_roots(poly)) {
    if (std::abs(root) == 0.0) continue;
    InverseRoot ir;
    ir.alpha = 1.0 / root;
    ir.magnitude = std::abs(ir.alpha);
    ir.weight = 2.0 * std::log(ir.magnitude) / std::log(static_cast<double>(q));
    const double w = std::round(ir.weight);
    if (std::abs(ir.weight - w) <= kWeightTolerance) ir.integral_weight = static_cast<int>(w);
    ir.residual = std::abs(poly_eval(poly, root));
    out.push_back(ir);
  }
  std::sort(out.begin(), out.end(), [](const InverseRoot& a, const InverseRoot& b) {
    return a.magnitude != b.magnitude ? a.magnitude > b.magnitude : std::arg(a.alpha) < std::arg(b.alpha);
  });
  return out;
}

}  // namespace

WeilReport weil_probe(const RationalFn& r, std::uint64_t q) {
  if (q < 2) throw InvalidArgument("weil_probe needs q >= 2");
  return WeilReport{inverse_roots(r.numerator, q), inverse_roots(r.denominator, q)};
}

}  // namespace hyperzeta
