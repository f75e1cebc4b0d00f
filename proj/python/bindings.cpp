#include "gaugekit/classify.hpp"
#include "gaugekit/decompose.hpp"
#include "gaugekit/homotopy_tables.hpp"
#include "gaugekit/manifold.hpp"
#include "gaugekit/matlin.hpp"

#include "json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gaugekit;

// cpp_int <-> Python int, through the decimal string.
namespace pybind11::detail {
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const Integer& x, return_value_policy, handle) {
    return PyLong_FromString(x.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_py(const detail::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ConnectedSumSpec spec_arg(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return parse_spec_json(spec.cast<std::string>());
  return parse_spec_json(py::module_::import("json").attr("dumps")(spec).cast<std::string>());
}

HomotopyTables tables_arg(const std::vector<std::string>& files) {
  return HomotopyTables::from_sources(files);
}

IntMatrix matrix_arg(const std::vector<std::vector<Integer>>& rows) { return IntMatrix::from_rows(rows); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Principal bundles and gauge-group decompositions over connected sums";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("bezout", [](const Integer& a, const Integer& b) {
    const auto r = bezout(a, b);
    return py::make_tuple(r.g, r.u, r.v);
  });
  m.def("gcd_m", [](const Integer& mod, const std::vector<Integer>& xs) {
    return gcd_m(Modulus(mod), make_residues(Modulus(mod), xs));
  });
  m.def("orbit_reduce", [](const Integer& mod, const std::vector<Integer>& xs) {
    const auto cert = orbit_reduce(Modulus(mod), make_residues(Modulus(mod), xs));
    std::vector<Integer> canonical;
    for (const auto& c : cert.canonical) canonical.push_back(c.value());
    return py::dict(py::arg("transform") = cert.transform.to_rows(),
                    py::arg("canonical") = canonical);
  });
  m.def("same_orbit", [](const Integer& mod, const std::vector<Integer>& x, const std::vector<Integer>& y) {
    return same_orbit(Modulus(mod), make_residues(Modulus(mod), x), make_residues(Modulus(mod), y));
  });
  m.def("determinant", [](const std::vector<std::vector<Integer>>& a) { return determinant(matrix_arg(a)); });
  m.def("smith_invariants",
        [](const std::vector<std::vector<Integer>>& a) { return smith_invariants(matrix_arg(a)); });
  m.def(
      "row_echelon",
      [](const std::vector<std::vector<Integer>>& a, std::vector<Integer> moduli) {
        const auto mat = matrix_arg(a);
        if (moduli.empty()) moduli.assign(mat.cols(), 0);
        std::vector<Modulus> mods(moduli.begin(), moduli.end());
        const auto ech = row_echelon_mixed(MixedMatrix(mat, mods));
        return py::make_tuple(ech.transform.to_rows(), ech.echelon.values().to_rows());
      },
      py::arg("matrix"), py::arg("moduli") = std::vector<Integer>{});

  m.def(
      "lookup",
      [](const std::string& space, unsigned k, const std::vector<std::string>& tables) -> py::object {
        const auto e = tables_arg(tables).lookup(parse_space(space), k);
        if (!e) return py::none();
        return to_py(detail::table_entry_json(*e));
      },
      py::arg("space"), py::arg("k"), py::arg("tables") = std::vector<std::string>{});
  m.def(
      "pi6_order",
      [](const std::string& g, const std::vector<std::string>& tables) {
        return pi6_order(parse_group(g), tables_arg(tables));
      },
      py::arg("group"), py::arg("tables") = std::vector<std::string>{});
  m.def("shipped_lie_groups", [] {
    std::vector<std::string> out;
    for (const auto& g : shipped_lie_groups()) out.push_back(to_string(g));
    return out;
  });

  m.def(
      "tbar",
      [](const py::object& spec, const std::vector<std::string>& tables) {
        return tbar(spec_arg(spec), tables_arg(tables));
      },
      py::arg("spec"), py::arg("tables") = std::vector<std::string>{});
  m.def(
      "classify",
      [](const std::string& g, const py::object& spec, const std::vector<std::string>& tables) {
        const auto t = tables_arg(tables);
        const auto s = spec_arg(spec);
        const auto c = classify_conditions(parse_group(g), s, t);
        if (c.kind == CaseKind::Unsupported) return to_py(detail::case_json(c));
        return to_py(detail::classification_json(prin_bundles(parse_group(g), s, t)));
      },
      py::arg("group"), py::arg("spec"), py::arg("tables") = std::vector<std::string>{});
  m.def(
      "decompose",
      [](const std::string& g, const py::object& spec, const std::vector<Integer>& k, bool pointed,
         const std::vector<std::string>& tables) {
        const auto t = tables_arg(tables);
        const auto s = spec_arg(spec);
        const auto e = pointed ? decompose_pointed(parse_group(g), s, k, t)
                               : decompose_unpointed(parse_group(g), s, k, t);
        return to_py(detail::expr_json(e));
      },
      py::arg("group"), py::arg("spec"), py::arg("k") = std::vector<Integer>{},
      py::arg("pointed") = false, py::arg("tables") = std::vector<std::string>{});
  m.def(
      "equivalent",
      [](const std::string& g, const py::object& spec, const std::vector<Integer>& k,
         const std::vector<Integer>& k2, const std::vector<std::string>& tables) {
        return to_py(detail::verdict_json(equivalent(parse_group(g), spec_arg(spec), k, k2, tables_arg(tables))));
      },
      py::arg("group"), py::arg("spec"), py::arg("k"), py::arg("k2"),
      py::arg("tables") = std::vector<std::string>{});
  m.def(
      "pointed_homotopy_groups",
      [](const std::string& g, const py::object& spec, unsigned j, const std::vector<std::string>& tables) {
        return to_py(detail::pi_result_json(
            pointed_homotopy_groups(parse_group(g), spec_arg(spec), j, tables_arg(tables))));
      },
      py::arg("group"), py::arg("spec"), py::arg("j") = 0, py::arg("tables") = std::vector<std::string>{});
}
