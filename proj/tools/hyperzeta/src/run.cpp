#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>

#include "hyperzeta/character.hpp"
#include "hyperzeta/contour.hpp"
#include "hyperzeta/error.hpp"
#include "hyperzeta/hsums.hpp"
#include "hyperzeta/nc_matrix.hpp"
#include "hyperzeta/pade.hpp"
#include "hyperzeta/zeta.hpp"
#include "hyperzeta_cli/app.hpp"

namespace hyperzeta::cli {

namespace {

inline constexpr unsigned kDefaultD = 4;

struct Context {
  const json& job;
  unsigned D = kDefaultD;
  SumOptions opts;
  std::optional<bool> verified;
};

using Handler = std::function<json(Context&)>;

double number(const json& v, const std::string& what) {
  if (!v.is_number()) throw InvalidArgument(what + " must be a number");
  return v.get<double>();
}

std::complex<double> parse_complex(const json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {number(v[0], what), number(v[1], what)};
  throw InvalidArgument(what + " must be a number or [re, im]");
}

std::vector<std::complex<double>> parse_complex_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw InvalidArgument(what + " must be an array");
  std::vector<std::complex<double>> out;
  for (const auto& x : v) out.push_back(parse_complex(x, what));
  return out;
}

std::vector<Character> characters(const JobSystem& js) {
  if (js.character_indices.size() != js.system.nvars)
    throw InvalidArgument("need one multiplicative character index per variable");
  std::vector<Character> pis;
  for (auto j : js.character_indices) pis.push_back(Character::multiplicative(js.field, j));
  return pis;
}

const LaurentPoly& single_polynomial(const JobSystem& js) {
  if (js.system.equations.size() != 1) throw InvalidArgument("this command takes exactly one polynomial");
  return js.system.equations.front();
}

json value_json(const CycloNumber& v) {
  const auto z = v.to_complex();
  return json{{"value", to_json(v)}, {"complex", complex_json(z)}, {"abs", complex_json(std::abs(z))[0]}};
}

json subset_json(const std::vector<std::size_t>& s) { return json(s); }

json rational_fn_json(const RationalFn& r) {
  json num = json::array(), den = json::array();
  for (auto c : r.numerator) num.push_back(complex_json(c));
  for (auto c : r.denominator) den.push_back(complex_json(c));
  auto tiny = [](double x) { return x < 1e-12 ? 0.0 : complex_json(x)[0].get<double>(); };
  return json{{"numerator", num},
              {"denominator", den},
              {"residual", tiny(r.residual)},
              {"full_residual", tiny(r.full_residual)}};
}

json inverse_roots_json(const std::vector<InverseRoot>& roots) {
  json out = json::array();
  for (const auto& r : roots) {
    out.push_back(json{{"alpha", complex_json(r.alpha)},
                       {"magnitude", complex_json(r.magnitude)[0]},
                       {"weight", complex_json(r.weight)[0]},
                       {"integral_weight", r.integral_weight ? json(*r.integral_weight) : json(nullptr)}});
  }
  return out;
}

json matrix_json(const NCMatrix2& m) {
  return json{{"a1", to_json(m.a1)}, {"b1", to_json(m.b1)}, {"a2", to_json(m.a2)}, {"b2", to_json(m.b2)}};
}

NCMatrix2 parse_matrix(const json& job) {
  if (!job.contains("matrix")) throw InvalidArgument("job is missing 'matrix'");
  const json& m = job.at("matrix");
  auto entry = [&](const char* key) {
    if (!m.is_object() || !m.contains(key)) throw InvalidArgument(std::string("matrix is missing '") + key + "'");
    return parse_quaternion(m.at(key));
  };
  return {entry("a1"), entry("b1"), entry("a2"), entry("b2")};
}

json cmd_phi(Context& c) {
  const auto js = parse_system(c.job);
  return value_json(phi(Character::additive(js.field), single_polynomial(js), characters(js), c.opts));
}

json cmd_psi(Context& c) {
  const auto js = parse_system(c.job);
  return value_json(psi(Character::additive(js.field), js.system, c.opts));
}

json cmd_count(Context& c) {
  const auto js = parse_system(c.job);
  return json{{"points", count_points(js.system, c.opts)}};
}

json cmd_zeta_variety(Context& c) {
  const auto js = parse_system(c.job);
  return json{{"series", to_json(zeta_variety(js.system, c.D, c.opts))}};
}

json cmd_zeta_direct(Context& c) {
  const auto js = parse_system(c.job);
  return json{{"series", to_json(zeta_hyper_direct(Character::additive(js.field), single_polynomial(js),
                                                   characters(js), c.D, c.opts))}};
}

json cmd_zeta_product(Context& c) {
  const auto js = parse_system(c.job);
  return json{{"series", to_json(zeta_hyper_product(Character::additive(js.field), single_polynomial(js),
                                                    characters(js), c.D, c.opts))}};
}

json cmd_verify_cayley(Context& c) {
  const auto js = parse_system(c.job);
  const auto r = verify_cayley(Character::additive(js.field), js.system, c.opts);
  json subsets = json::array();
  for (const auto& s : r.subset_values) subsets.push_back(json{{"subset", subset_json(s.subset)}, {"psi", to_json(s.value)}});
  c.verified = r.all_equal;
  return json{{"lhs", to_json(r.lhs)},
              {"middle", to_json(r.middle)},
              {"rhs", r.rhs.get_str()},
              {"points", r.points},
              {"subsets", subsets},
              {"all_equal", r.all_equal}};
}

json cmd_verify_product(Context& c) {
  const auto js = parse_system(c.job);
  const auto r = verify_product(Character::additive(js.field), single_polynomial(js), characters(js), c.D, c.opts);
  c.verified = r.equal;
  return json{{"direct", to_json(r.direct)},
              {"product", to_json(r.product)},
              {"equal", r.equal},
              {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json(nullptr)}};
}

json cmd_factorize(Context& c) {
  const auto js = parse_system(c.job);
  const auto r = cayley_factorize(Character::additive(js.field), js.system, c.D, c.opts);
  json factors = json::array();
  for (const auto& f : r.factors) {
    factors.push_back(json{{"subset", subset_json(f.subset)},
                           {"exponent", f.exponent},
                           {"shift", f.shift},
                           {"zeta", to_json(f.zeta)}});
  }
  c.verified = r.equal;
  return json{{"factors", factors}, {"hyper", to_json(r.hyper)}, {"product", to_json(r.product)}, {"equal", r.equal}};
}

json cmd_weil_probe(Context& c) {
  const std::string source = c.job.value("source", std::string("hyper"));
  std::vector<std::complex<double>> series;
  std::uint64_t q = 0;
  json out;
  if (source == "series") {
    if (!c.job.contains("series") || !c.job.contains("q")) throw InvalidArgument("series source needs 'series' and 'q'");
    series = parse_complex_list(c.job.at("series"), "series coefficient");
    const json& qj = c.job.at("q");
    if (!qj.is_number_unsigned()) throw InvalidArgument("'q' must be a positive integer");
    q = qj.get<std::uint64_t>();
  } else {
    const auto js = parse_system(c.job);
    ExactSeries z;
    if (source == "variety") {
      z = zeta_variety(js.system, c.D, c.opts);
    } else if (source == "hyper") {
      z = zeta_hyper_direct(Character::additive(js.field), single_polynomial(js), characters(js), c.D, c.opts);
    } else {
      throw InvalidArgument("unknown weil-probe source '" + source + "'");
    }
    out["series"] = to_json(z);
    for (const auto& v : z.coeffs()) series.push_back(v.to_complex());
    q = js.field->order();
  }
  const RationalFn r = c.job.contains("deg_num") && c.job.contains("deg_den")
                           ? pade(series, c.job.at("deg_num").get<std::size_t>(), c.job.at("deg_den").get<std::size_t>())
                           : pade_auto(series);
  const auto w = weil_probe(r, q);
  out["rational"] = rational_fn_json(r);
  out["zeros"] = inverse_roots_json(w.zeros);
  out["poles"] = inverse_roots_json(w.poles);
  out["q"] = q;
  return out;
}

json cmd_root_contour(Context& c) {
  if (!c.job.contains("poly")) throw InvalidArgument("job is missing 'poly'");
  const ComplexPoly p(parse_complex_list(c.job.at("poly"), "polynomial coefficient"));
  const auto center = c.job.contains("center") ? parse_complex(c.job.at("center"), "center") : std::complex<double>{};
  if (!c.job.contains("radius")) throw InvalidArgument("job is missing 'radius'");
  const double radius = number(c.job.at("radius"), "radius");
  ContourOptions opts;
  if (c.job.contains("nodes")) opts.nodes = c.job.at("nodes").get<std::size_t>();
  const auto root = root_contour(p, center, radius, opts);
  return json{{"sum_of_enclosed_roots", complex_json(root)},
              {"roots_inside", roots_inside(p, center, radius, opts.nodes)},
              {"nodes", opts.nodes}};
}

json cmd_nc_inverse(Context& c) {
  const NCMatrix2 x = parse_matrix(c.job);
  const NCMatrix2 y = nc_inverse_2x2(x);
  const bool ok = x * y == NCMatrix2::identity() && y * x == NCMatrix2::identity();
  c.verified = ok;
  return json{{"inverse", matrix_json(y)}, {"two_sided_identity", ok}};
}

json cmd_nc_identity(Context& c) {
  const NCMatrix2 x = parse_matrix(c.job);
  const auto r = nc_identity_check(x.a1, x.b1, x.a2, x.b2);
  if (r.equal) c.verified = *r.equal;
  return json{{"lhs_defined", r.lhs_defined},
              {"rhs_defined", r.rhs_defined},
              {"lhs", r.lhs ? to_json(*r.lhs) : json(nullptr)},
              {"rhs", r.rhs ? to_json(*r.rhs) : json(nullptr)},
              {"equal", r.equal ? json(*r.equal) : json(nullptr)},
              {"coverage", r.coverage},
              {"failed_conditions", r.failed_conditions}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"phi", cmd_phi},
      {"psi", cmd_psi},
      {"count", cmd_count},
      {"zeta-variety", cmd_zeta_variety},
      {"zeta-direct", cmd_zeta_direct},
      {"zeta-product", cmd_zeta_product},
      {"verify-cayley", cmd_verify_cayley},
      {"verify-product", cmd_verify_product},
      {"factorize", cmd_factorize},
      {"weil-probe", cmd_weil_probe},
      {"root-contour", cmd_root_contour},
      {"nc-inverse", cmd_nc_inverse},
      {"nc-identity", cmd_nc_identity},
  };
  return table;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json error_json(const std::string& kind, const std::string& reason) { return json{{"kind", kind}, {"reason", reason}}; }

std::string one_line(std::string s) {
  for (auto& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

Outcome run(const std::string& command, const json& job_in, const Overrides& ov) {
  Outcome out;
  json& rep = out.report;
  rep["command"] = command;
  rep["input"] = job_in;
  rep["result"] = nullptr;
  rep["verified"] = nullptr;
  rep["timing_ms"] = 0;
  if (ov.timestamp) rep["timestamp"] = utc_timestamp();

  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](int code, const std::string& kind, const std::string& reason) {
    out.exit_code = code;
    rep["error"] = error_json(kind, one_line(reason));
  };
  try {
    if (!job_in.is_object()) throw InvalidArgument("job must be a JSON object");
    json job = job_in;
    if (job.contains("command") && job.at("command") != command)
      throw InvalidArgument("job is for '" + job.at("command").get<std::string>() + "', not '" + command + "'");
    const auto it = handlers().find(command);
    if (it == handlers().end()) throw InvalidArgument("unknown command '" + command + "'");

    if (ov.D) job["D"] = *ov.D;
    if (ov.budget) job["budget"] = *ov.budget;
    Context ctx{job, kDefaultD, {}, std::nullopt};
    if (job.contains("D")) {
      const json& d = job.at("D");
      if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 1 || d.get<std::uint64_t>() > 64)
        throw InvalidArgument("D must be an integer in [1, 64]");
      ctx.D = d.get<unsigned>();
    }
    if (job.contains("budget")) {
      if (!job.at("budget").is_number_unsigned()) throw InvalidArgument("budget must be a positive integer");
      ctx.opts.budget = job.at("budget").get<std::uint64_t>();
    }
    if (job.contains("threads")) {
      if (!job.at("threads").is_number_unsigned()) throw InvalidArgument("threads must be a nonnegative integer");
      ctx.opts.threads = job.at("threads").get<unsigned>();
    }
    rep["input"] = job;
    rep["result"] = it->second(ctx);
    if (ctx.verified) {
      rep["verified"] = *ctx.verified;
      if (!*ctx.verified) fail(kExitVerificationFailed, "verification_failed", "computed sides differ");
    }
  } catch (const BudgetExceeded& e) {
    fail(kExitBudgetExceeded, "budget_exceeded", e.what());
    rep["error"]["required"] = e.required();
    rep["error"]["budget"] = e.budget();
  } catch (const ChartUndefined& e) {
    fail(kExitInvalidInput, "chart_undefined", e.what());
    rep["error"]["condition"] = e.condition();
  } catch (const InvalidArgument& e) {
    fail(kExitInvalidInput, "invalid_input", e.what());
  } catch (const json::exception& e) {
    fail(kExitInvalidInput, "invalid_input", e.what());
  } catch (const NonConvergence& e) {
    fail(kExitVerificationFailed, "non_convergence", e.what());
  } catch (const std::exception& e) {
    fail(kExitVerificationFailed, "internal", e.what());
  }
  if (ov.timestamp) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    rep["timing_ms"] = std::round(ms.count() * 1000.0) / 1000.0;
  }
  return out;
}

Outcome run_file(const std::string& command, const std::filesystem::path& job_path, const Overrides& ov) {
  std::ifstream in(job_path);
  if (!in) {
    Outcome o;
    o.exit_code = kExitInvalidInput;
    o.report = json{{"command", command},       {"input", nullptr}, {"result", nullptr},
                    {"verified", nullptr},      {"timing_ms", 0},
                    {"error", error_json("invalid_input", "cannot read job file " + job_path.string())}};
    return o;
  }
  json job;
  try {
    job = json::parse(in);
  } catch (const json::parse_error& e) {
    Outcome o;
    o.exit_code = kExitInvalidInput;
    o.report = json{{"command", command},  {"input", nullptr}, {"result", nullptr},
                    {"verified", nullptr}, {"timing_ms", 0},   {"error", error_json("invalid_input", one_line(e.what()))}};
    return o;
  }
  return run(command, job, ov);
}

}  // namespace hyperzeta::cli
