#include <charconv>

#include "hyperzeta/error.hpp"
#include "hyperzeta_cli/app.hpp"

namespace hyperzeta::cli {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw InvalidArgument("malformed " + what + " '" + std::string(s) + "'");
  return v;
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidArgument(std::string("job is missing '") + key + "'");
  return obj.at(key);
}

std::uint64_t as_u64(const json& v, const std::string& what) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw InvalidArgument(what + " must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

Elem parse_coefficient(const Field& f, const json& c) {
  if (c.is_number_integer()) return f.from_int(c.get<std::int64_t>());
  if (!c.is_string()) throw InvalidArgument("coefficient must be an integer or a string like \"3\" or \"g^2\"");
  const std::string s = c.get<std::string>();
  if (s == "g") return f.generator();
  if (s.rfind("g^", 0) == 0) return f.pow(f.generator(), parse_int(std::string_view(s).substr(2), "generator power"));
  return f.from_int(parse_int(s, "coefficient"));
}

JobSystem parse_system(const json& job) {
  const json& fj = require(job, "field");
  const std::uint64_t p = as_u64(require(fj, "p"), "field.p");
  const std::uint64_t k = fj.contains("k") ? as_u64(fj.at("k"), "field.k") : 1;
  if (p > UINT32_MAX || k > 64) throw InvalidArgument("field parameters out of range");
  JobSystem out;
  out.field = make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));

  const json empty = json::array();
  const json& polys = job.contains("polynomials") ? job.at("polynomials") : empty;
  if (!polys.is_array()) throw InvalidArgument("'polynomials' must be an array of term lists");

  std::optional<std::size_t> nvars;
  if (job.contains("nvars")) nvars = as_u64(job.at("nvars"), "nvars");
  for (const auto& poly : polys) {
    if (!poly.is_array()) throw InvalidArgument("each polynomial must be an array of terms");
    for (const auto& term : poly) {
      const json& e = require(term, "exp");
      if (!e.is_array()) throw InvalidArgument("'exp' must be an array of integers");
      if (!nvars) nvars = e.size();
      if (e.size() != *nvars) throw InvalidArgument("term exponent length differs from the variable count");
    }
  }
  if (!nvars) throw InvalidArgument("cannot infer the variable count; give 'nvars'");

  out.system.field = out.field;
  out.system.nvars = *nvars;
  for (const auto& poly : polys) {
    std::vector<Term> terms;
    for (const auto& term : poly) {
      Term t;
      for (const auto& e : term.at("exp")) {
        if (!e.is_number_integer()) throw InvalidArgument("exponents must be integers");
        t.exponents.push_back(e.get<std::int64_t>());
      }
      t.coeff = parse_coefficient(*out.field, require(term, "coef"));
      terms.push_back(std::move(t));
    }
    out.system.equations.emplace_back(out.field, *nvars, std::move(terms));
  }

  if (job.contains("characters")) {
    const json& cj = job.at("characters");
    if (!cj.is_array()) throw InvalidArgument("'characters' must be an array of multiplicative indices");
    for (const auto& c : cj) out.character_indices.push_back(as_u64(c, "character index"));
  } else {
    out.character_indices.assign(*nvars, 0);
  }
  return out;
}

Quaternion parse_quaternion(const json& q) {
  if (!q.is_array() || q.size() != 4) throw InvalidArgument("quaternion must be an array of four rationals");
  Rational c[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (q[i].is_number_integer()) {
      c[i] = Rational(q[i].get<long>());
    } else if (q[i].is_string()) {
      try {
        c[i] = Rational(q[i].get<std::string>());
      } catch (const std::invalid_argument&) {
        throw InvalidArgument("malformed rational '" + q[i].get<std::string>() + "'");
      }
      if (c[i].get_den() == 0) throw InvalidArgument("zero denominator");
      c[i].canonicalize();
    } else {
      throw InvalidArgument("quaternion components must be strings like \"-2/5\" or integers");
    }
  }
  return Quaternion(c[0], c[1], c[2], c[3]);
}

}  // namespace hyperzeta::cli
