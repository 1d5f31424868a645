#include "asmsym/enumerate.hpp"
#include "asmsym/plane_partitions.hpp"
#include "asmsym/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

namespace py = pybind11;
using namespace asmsym;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(v.get_num()), to_py(v.get_den()));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

Rational rational_from_py(const py::handle& v) {
  if (py::isinstance<py::int_>(v)) return Rational(from_py(v.cast<py::int_>()));
  return parse_rational(py::str(v).cast<std::string>());
}

SymmetryClass class_arg(const std::variant<int, std::string>& c) {
  if (const int* id = std::get_if<int>(&c)) {
    if (*id < 1 || *id > 8) throw py::value_error("class id must be 1..8");
    return class_from_id(*id);
  }
  const auto parsed = parse_class(std::get<std::string>(c));
  if (!parsed) throw py::value_error("unknown class: " + std::get<std::string>(c));
  return *parsed;
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration of alternating sign matrix symmetry classes";

  py::register_exception<InexactDivision>(m, "InexactDivision", PyExc_ArithmeticError);
  py::register_exception<MissingData>(m, "MissingData", PyExc_LookupError);

  py::class_<BiPoly>(m, "Poly")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_bipoly(text); }), py::arg("text"))
      .def(py::init([](const py::int_& c) { return BiPoly(from_py(c)); }), py::arg("constant"))
      .def("terms",
           [](const BiPoly& p) {
             py::list out;
             for (const auto& [mono, c] : p.terms()) out.append(py::make_tuple(mono.ex, mono.ey, to_py(c)));
             return out;
           })
      .def("coeff", [](const BiPoly& p, unsigned ex, unsigned ey) { return to_py(p.coeff(ex, ey)); })
      .def("eval", [](const BiPoly& p, const py::handle& x, const py::handle& y) {
        return to_py(eval(p, rational_from_py(x), rational_from_py(y)));
      })
      .def("subs_x", [](const BiPoly& p, const py::int_& x) { return subs_x(p, from_py(x)); })
      .def("subs_y", [](const BiPoly& p, const py::int_& y) { return subs_y(p, from_py(y)); })
      .def_property_readonly("deg_x", &BiPoly::deg_x)
      .def_property_readonly("deg_y", &BiPoly::deg_y)
      .def("is_zero", &BiPoly::is_zero)
      .def("is_palindromic_in_y", [](const BiPoly& p) { return is_palindromic_in_y(p); })
      .def("grouped", [](const BiPoly& p) { return to_grouped_string(p); })
      .def("to_json", [](const BiPoly& p) { return to_json(p).dump(); })
      .def_static("from_json", [](const std::string& text) { return bipoly_from_json(nlohmann::json::parse(text)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const BiPoly& p, unsigned e) { return pow(p, e); })
      .def("__str__", [](const BiPoly& p) { return to_string(p); })
      .def("__repr__", [](const BiPoly& p) { return "Poly('" + to_string(p) + "')"; });

  m.def("divexact", &divexact, py::arg("num"), py::arg("den"), "Exact quotient; raises InexactDivision");
  m.def("binom", [](long a, long b) { return to_py(binom(a, b)); });
  m.def("pochhammer", [](const py::handle& x, unsigned j) { return to_py(pochhammer(rational_from_py(x), j)); });
  m.def("delta", [](unsigned k, const py::handle& mu) { return to_py(delta(k, rational_from_py(mu))); });

  m.def("z_poly", &z_poly, py::arg("n"), py::arg("mu"));
  m.def("t_poly", &t_poly, py::arg("n"), py::arg("mu"));
  m.def("r_poly", &r_poly, py::arg("n"), py::arg("mu"));

  m.def(
      "count",
      [](int n, const std::variant<int, std::string>& c, unsigned threads) {
        const SymmetryClass cls = class_arg(c);
        py::gil_scoped_release release;
        return count_asms(n, cls, threads);
      },
      py::arg("n"), py::arg("symmetry"), py::arg("threads") = 1);
  m.def(
      "genfun",
      [](int n, const std::variant<int, std::string>& c, unsigned threads) {
        const SymmetryClass cls = class_arg(c);
        py::gil_scoped_release release;
        return genfun(n, cls, threads).poly;
      },
      py::arg("n"), py::arg("symmetry"), py::arg("threads") = 1);
  m.def(
      "asms",
      [](int n, const std::variant<int, std::string>& c) {
        py::list out;
        for (const Asm& a : collect_asms(n, class_arg(c))) {
          py::list rows;
          for (int i = 0; i < a.size(); ++i) {
            py::list row;
            for (int j = 0; j < a.size(); ++j) row.append(static_cast<int>(a(i, j)));
            rows.append(row);
          }
          out.append(rows);
        }
        return out;
      },
      py::arg("n"), py::arg("symmetry"), "Every matrix of the class as nested lists");

  m.def("enum_shifted_pp", &enum_shifted_pp, py::arg("n"), py::arg("mu"));
  m.def("enum_tri_array", &enum_tri_array, py::arg("n"), py::arg("mu"));
  m.def("enum_sccpp", &enum_sccpp, py::arg("m"));

  m.def(
      "verify",
      [](const std::string& id_prefix, std::optional<long> n, const std::string& cutoffs, unsigned threads) {
        SizeCutoffs limits = SizeCutoffs::defaults();
        limits.apply(cutoffs);
        std::vector<VerdictReport> reports;
        {
          py::gil_scoped_release release;
          DataStore data(limits, threads);
          SuiteOptions options;
          options.id_prefix = id_prefix;
          options.n = n;
          reports = run_suite(data, options);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d = json_to_py(to_json(r));
          d["proved"] = r.proved();
          out.append(d);
        }
        return out;
      },
      py::arg("id_prefix") = "", py::arg("n") = std::nullopt, py::arg("cutoffs") = "", py::arg("threads") = 1,
      "Runs the identity checks; cutoffs as 'CLASS=N,...' override the defaults");

  m.def(
      "factor",
      [](const py::int_& value, unsigned long bound) { return json_to_py(to_json(factor_smooth(from_py(value), bound))); },
      py::arg("value"), py::arg("bound") = 1000);
}
