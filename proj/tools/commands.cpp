#include "commands.hpp"

#include <sstream>

#include <json.hpp>

#include "lahbell/dobinski.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/identities.hpp"
#include "lahbell/numbers.hpp"
#include "lahbell/oracle.hpp"
#include "lahbell/polys.hpp"

namespace lahbell::cli {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

TriangleKind parse_triangle_kind(std::string_view kind) {
  if (kind == "lah") return TriangleKind::lah;
  if (kind == "s1") return TriangleKind::stirling1_signed;
  if (kind == "s2") return TriangleKind::stirling2;
  throw UnknownNameError("unknown triangle kind '" + std::string(kind) + "' (expected lah, s1 or s2)");
}

void reject_csv(Format format, std::string_view command) {
  if (format == Format::csv) throw PreconditionError("csv output is not available for '" + std::string(command) + "'");
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UnknownNameError("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

CommandResult cmd_table(std::string_view kind, unsigned nmax, Format format) {
  const Triangle& t = shared_triangle(parse_triangle_kind(kind));
  std::ostringstream os;
  switch (format) {
    case Format::text:
      for (unsigned n = 0; n <= nmax; ++n) {
        const auto& row = t.row(n);
        for (unsigned k = 0; k <= n; ++k) os << (k ? " " : "") << row[k].str();
        os << "\n";
      }
      break;
    case Format::csv:
      os << "n,k,value\n";
      for (unsigned n = 0; n <= nmax; ++n) {
        const auto& row = t.row(n);
        for (unsigned k = 0; k <= n; ++k) os << n << "," << k << "," << row[k].str() << "\n";
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (unsigned n = 0; n <= nmax; ++n) {
        json r = json::array();
        for (const auto& v : t.row(n)) r.push_back(v.str());
        rows.push_back(std::move(r));
      }
      os << dump({{"command", "table"}, {"kind", std::string(kind)}, {"nmax", nmax}, {"rows", rows}});
      break;
    }
  }
  return {os.str(), 0};
}

CommandResult cmd_seq(std::string_view kind, unsigned nmax, Format format) {
  BigInt (*term)(unsigned) = nullptr;
  if (kind == "bell") {
    term = bell_number;
  } else if (kind == "lah_bell") {
    term = lah_bell_number;
  } else {
    throw UnknownNameError("unknown sequence '" + std::string(kind) + "' (expected bell or lah_bell)");
  }
  std::vector<std::string> values;
  for (unsigned n = 0; n <= nmax; ++n) values.push_back(term(n).str());

  std::ostringstream os;
  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
      os << "\n";
      break;
    case Format::csv:
      os << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) os << i << "," << values[i] << "\n";
      break;
    case Format::json:
      os << dump({{"command", "seq"}, {"kind", std::string(kind)}, {"nmax", nmax}, {"values", values}});
      break;
  }
  return {os.str(), 0};
}

CommandResult cmd_poly(std::string_view family, unsigned n, Format format, const std::optional<BigRational>& alpha) {
  reject_csv(format, "poly");
  const Family f = parse_family(family);
  const MultiPoly p = f == Family::laguerre ? laguerre_poly(n, alpha ? MultiPoly(*alpha) : Alpha()) : family_poly(f, n);
  if (format == Format::text) return {p.to_string() + "\n", 0};
  json j = {{"command", "poly"}, {"family", std::string(family)}, {"n", n}, {"value", p.to_string()}};
  if (f == Family::laguerre) j["alpha"] = alpha ? to_string(*alpha) : "alpha";
  return {dump(j), 0};
}

CommandResult cmd_gf(std::string_view name, std::size_t order, const GfParams& params, Format format) {
  const PolySeries s = gf_catalog(name, params, order);
  std::vector<std::string> coeffs;
  for (const auto& c : s.egf_coefficients()) coeffs.push_back(c.to_string());

  std::ostringstream os;
  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i < coeffs.size(); ++i) os << coeffs[i] << "\n";
      break;
    case Format::csv:
      os << "n,egf_coefficient\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i) os << i << "," << coeffs[i] << "\n";
      break;
    case Format::json: {
      json p = json::object();
      if (params.x) p["x"] = to_string(*params.x);
      if (params.y) p["y"] = to_string(*params.y);
      if (params.lambda) p["lambda"] = to_string(*params.lambda);
      if (params.alpha) p["alpha"] = to_string(*params.alpha);
      os << dump({{"command", "gf"},
                  {"name", std::string(name)},
                  {"order", order},
                  {"params", p},
                  {"egf_coefficients", coeffs}});
      break;
    }
  }
  return {os.str(), 0};
}

CommandResult cmd_verify(const std::vector<std::string>& ids, std::optional<unsigned> max_n, bool oracle,
                         Format format) {
  reject_csv(format, "verify");
  const std::vector<std::string> selection = ids.empty() ? std::vector<std::string>{"all"} : ids;
  const auto records = run_suite(selection, max_n, oracle);
  bool all_pass = true;
  for (const auto& r : records) all_pass = all_pass && r.passed();

  std::ostringstream os;
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : records) {
      json j = {{"id", r.id},
                {"anchor", r.anchor},
                {"description", r.description},
                {"range", r.range()},
                {"status", r.passed() ? "pass" : "fail"}};
      if (r.counterexample) {
        j["counterexample"] = {
            {"index", r.counterexample->index}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
      }
      arr.push_back(std::move(j));
    }
    os << dump(arr);
  } else {
    std::size_t passed = 0;
    for (const auto& r : records) {
      if (r.passed()) {
        ++passed;
        os << "PASS " << r.id << " [" << r.range() << "]\n";
      } else {
        os << "FAIL " << r.id << " [" << r.range() << "] at " << r.counterexample->index << ": "
           << r.counterexample->lhs << " != " << r.counterexample->rhs << "\n";
      }
    }
    os << passed << "/" << records.size() << " identities passed\n";
  }
  return {os.str(), all_pass ? 0 : 1};
}

CommandResult cmd_dobinski(std::string_view family, unsigned n, const BigRational& x, const BigRational& eps,
                           Format format) {
  reject_csv(format, "dobinski");
  DobinskiFamily fam{};
  if (family == "lah_bell") {
    fam = DobinskiFamily::lah_bell;
  } else if (family == "bell") {
    fam = DobinskiFamily::bell;
  } else {
    throw UnknownNameError("unknown dobinski family '" + std::string(family) + "' (expected lah_bell or bell)");
  }
  const CertifiedDecimal c = dobinski(fam, n, x, eps);
  if (format == Format::text) {
    std::ostringstream os;
    os << "value: " << c.value_decimal() << "\n"
       << "error_bound: " << c.error_bound_decimal() << "\n"
       << "terms_used: " << c.series_terms << "\n"
       << "exp_terms: " << c.exp_terms << "\n";
    return {os.str(), 0};
  }
  return {dump({{"command", "dobinski"},
                {"family", std::string(family)},
                {"n", n},
                {"x", to_string(x)},
                {"eps", to_string(eps)},
                {"value_decimal", c.value_decimal()},
                {"error_bound", c.error_bound_decimal()},
                {"terms_used", c.series_terms},
                {"exp_terms", c.exp_terms}}),
          0};
}

CommandResult cmd_partitions(unsigned n) {
  json arr = json::array();
  for (const auto& p : oracle::list_ordered_partitions(n)) arr.push_back(p.blocks);
  return {dump({{"command", "partitions"}, {"n", n}, {"count", arr.size()}, {"partitions", arr}}), 0};
}

}  // namespace lahbell::cli
