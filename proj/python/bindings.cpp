#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lahbell/dobinski.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/identities.hpp"
#include "lahbell/numbers.hpp"
#include "lahbell/oracle.hpp"
#include "lahbell/polys.hpp"
#include "lahbell/series.hpp"

namespace py = pybind11;
using namespace lahbell;

namespace {

py::object to_py(const BigInt& v) {
  const std::string s = v.str();
  PyObject* o = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(o);
}

py::object to_py(const BigRational& v) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(numerator(v)), to_py(denominator(v)));
}

// Accepts int, Fraction or a string such as "1/2" or "1e-20".
BigRational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

std::optional<BigRational> opt_from_py(const py::object& h) {
  if (h.is_none()) return std::nullopt;
  return from_py(h);
}

TriangleKind triangle_kind(const std::string& kind) {
  if (kind == "lah") return TriangleKind::lah;
  if (kind == "s1") return TriangleKind::stirling1_signed;
  if (kind == "s2") return TriangleKind::stirling2;
  throw UnknownNameError("unknown triangle kind '" + kind + "' (expected lah, s1 or s2)");
}

MultiPoly family_member(const std::string& family, unsigned n, const py::object& alpha) {
  const Family f = parse_family(family);
  if (f == Family::laguerre && !alpha.is_none()) return laguerre_poly(n, MultiPoly(from_py(alpha)));
  return family_poly(f, n);
}

py::dict terms_dict(const MultiPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::make_tuple(e[0], e[1], e[2], e[3])] = to_py(c);
  return out;
}

py::dict counts_dict(const oracle::OracleCounts& c) {
  py::dict out;
  for (const auto& [k, v] : c.by_k) out[py::int_(k)] = py::int_(v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_lahbell, m) {
  m.doc() = "Exact Lah, Stirling, Bell and Lah-Bell computations";

  py::register_exception<UnknownNameError>(m, "UnknownNameError", PyExc_KeyError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<PrecisionNotReached>(m, "PrecisionNotReached", PyExc_ArithmeticError);

  m.def("lah", [](unsigned n, unsigned k) { return to_py(lah(n, k)); }, py::arg("n"), py::arg("k"));
  m.def(
      "stirling1", [](unsigned n, unsigned k) { return to_py(stirling1_signed(n, k)); }, py::arg("n"), py::arg("k"),
      "Signed Stirling number of the first kind.");
  m.def("stirling2", [](unsigned n, unsigned k) { return to_py(stirling2(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("bell_number", [](unsigned n) { return to_py(bell_number(n)); }, py::arg("n"));
  m.def("lah_bell_number", [](unsigned n) { return to_py(lah_bell_number(n)); }, py::arg("n"));

  m.def(
      "table",
      [](const std::string& kind, unsigned nmax) {
        const Triangle& t = shared_triangle(triangle_kind(kind));
        py::list rows;
        for (unsigned n = 0; n <= nmax; ++n) {
          py::list row;
          for (const auto& v : t.row(n)) row.append(to_py(v));
          rows.append(row);
        }
        return rows;
      },
      py::arg("kind"), py::arg("nmax"), "Rows 0..nmax of the lah, s1 or s2 triangle.");

  m.def(
      "poly",
      [](const std::string& family, unsigned n, const py::object& alpha) {
        return family_member(family, n, alpha).to_string();
      },
      py::arg("family"), py::arg("n"), py::arg("alpha") = py::none(), "Rendered family member.");
  m.def(
      "poly_terms",
      [](const std::string& family, unsigned n, const py::object& alpha) {
        return terms_dict(family_member(family, n, alpha));
      },
      py::arg("family"), py::arg("n"), py::arg("alpha") = py::none(),
      "Map from (x, y, lambda, alpha) exponent tuples to Fraction coefficients.");
  m.def("families", [] {
    py::list out;
    for (const Family f : all_families()) out.append(std::string(family_name(f)));
    return out;
  });

  m.def(
      "gf",
      [](const std::string& name, std::size_t order, const py::object& x, const py::object& y,
         const py::object& lambda, const py::object& alpha) {
        const GfParams params{opt_from_py(x), opt_from_py(y), opt_from_py(lambda), opt_from_py(alpha)};
        std::vector<std::string> out;
        for (const auto& c : gf_catalog(name, params, order).egf_coefficients()) out.push_back(c.to_string());
        return out;
      },
      py::arg("name"), py::arg("order") = kDefaultGfOrder, py::arg("x") = py::none(), py::arg("y") = py::none(),
      py::arg("lam") = py::none(), py::arg("alpha") = py::none(),
      "EGF coefficients 0..order of a catalog generating function, rendered.");
  m.def("gf_names", [] { return gf_catalog_names(); });

  m.def(
      "verify",
      [](const std::vector<std::string>& ids, std::optional<unsigned> max_n, bool oracle) {
        std::vector<IdentityRecord> records;
        {
          py::gil_scoped_release release;
          records = run_suite(ids, max_n, oracle);
        }
        py::list out;
        for (const auto& r : records) {
          py::dict d;
          d["id"] = r.id;
          d["anchor"] = r.anchor;
          d["description"] = r.description;
          d["range"] = r.range();
          d["status"] = r.passed() ? "pass" : "fail";
          if (r.counterexample) {
            py::dict c;
            c["index"] = r.counterexample->index;
            c["lhs"] = r.counterexample->lhs;
            c["rhs"] = r.counterexample->rhs;
            d["counterexample"] = c;
          }
          out.append(d);
        }
        return out;
      },
      py::arg("ids") = std::vector<std::string>{"all"}, py::arg("max_n") = py::none(), py::arg("oracle") = false);

  m.def(
      "dobinski",
      [](unsigned n, const py::object& x, const py::object& eps, const std::string& family) {
        DobinskiFamily f{};
        if (family == "lah_bell") {
          f = DobinskiFamily::lah_bell;
        } else if (family == "bell") {
          f = DobinskiFamily::bell;
        } else {
          throw UnknownNameError("unknown dobinski family '" + family + "' (expected lah_bell or bell)");
        }
        const CertifiedDecimal c = dobinski(f, n, from_py(x), from_py(eps));
        py::dict d;
        d["value"] = to_py(c.value);
        d["error_bound"] = to_py(c.error_bound);
        d["value_decimal"] = c.value_decimal();
        d["error_bound_decimal"] = c.error_bound_decimal();
        d["terms_used"] = c.series_terms;
        d["exp_terms"] = c.exp_terms;
        return d;
      },
      py::arg("n"), py::arg("x"), py::arg("eps") = "1e-20", py::arg("family") = "lah_bell",
      "Certified Dobinski evaluation; value and error_bound are exact Fractions.");

  m.def("count_ordered_partitions", [](unsigned n) { return counts_dict(oracle::count_ordered_partitions(n)); });
  m.def("count_set_partitions", [](unsigned n) { return counts_dict(oracle::count_set_partitions(n)); });
  m.def("count_permutations_by_cycles",
        [](unsigned n) { return counts_dict(oracle::count_permutations_by_cycles(n)); });
}
