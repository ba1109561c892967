#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hyperzeta_cli/app.hpp"

namespace hyperzeta::cli {

namespace {

// 12 significant digits and a zero floor keep float output stable across platforms.
double approx(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

}  // namespace

json complex_json(std::complex<double> z) { return json::array({approx(z.real()), approx(z.imag())}); }

json to_json(const CycloNumber& value) {
  const CycloNumber c = value.simplified();
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(json::array({r.get_num().get_str(), r.get_den().get_str()}));
  return json{{"m", c.order()}, {"coeffs", coeffs}, {"text", c.to_string()}};
}

json to_json(const ExactSeries& s) {
  json coeffs = json::array(), cplx = json::array();
  for (const auto& c : s.coeffs()) {
    coeffs.push_back(to_json(c));
    cplx.push_back(complex_json(c.to_complex()));
  }
  return json{{"variable", "T=q^-s"}, {"D", s.degree()}, {"coeffs", coeffs}, {"complex", cplx}};
}

json to_json(const Quaternion& q) {
  json out = json::array();
  for (const Rational* r : {&q.w(), &q.x(), &q.y(), &q.z()}) out.push_back(r->get_str());
  return out;
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace hyperzeta::cli
