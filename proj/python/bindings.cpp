#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"
#include "qcolor/invariants.hpp"
#include "qcolor/presentation.hpp"
#include "qcolor/quandle.hpp"
#include "qcolor/solver.hpp"

namespace py = pybind11;
using namespace qcolor;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

LinkDiagram resolve(const py::object& link) {
  if (py::isinstance<py::str>(link)) return catalog(link.cast<std::string>());
  return link.cast<LinkDiagram>();
}

py::dict phi_dict(const PhiPolynomial& phi) {
  py::dict d;
  for (const auto& [exponent, coefficient] : phi.terms) d[py::int_(exponent)] = py::int_(coefficient);
  return d;
}

}  // namespace

PYBIND11_MODULE(_qcolor, m) {
  m.doc() = "Quandle coloring invariants of oriented link diagrams";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<NotAUnit>(m, "NotAUnit", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<LinkDiagram>(m, "LinkDiagram")
      .def_property_readonly("arc_count", &LinkDiagram::arc_count)
      .def_property_readonly("crossing_count", &LinkDiagram::crossing_count)
      .def_property_readonly("free_circles", &LinkDiagram::free_circles)
      .def_property_readonly("crossings",
                             [](const LinkDiagram& d) {
                               std::vector<std::tuple<int, ArcIndex, ArcIndex, ArcIndex>> out;
                               for (const Crossing& c : d.crossings())
                                 out.emplace_back(c.sign, c.under_in, c.under_out, c.over);
                               return out;
                             },
                             "(sign, under_in, under_out, over) per crossing")
      .def("components", [](const LinkDiagram& d) { return components(d); })
      .def("relations", [](const LinkDiagram& d) { return render_relations(d); })
      .def("__eq__", [](const LinkDiagram& a, const LinkDiagram& b) { return a == b; })
      .def("__repr__", [](const LinkDiagram& d) {
        return "<LinkDiagram arcs=" + std::to_string(d.arc_count()) +
               " crossings=" + std::to_string(d.crossing_count()) + ">";
      });

  m.def("catalog", [](const std::string& name) { return catalog(name); }, py::arg("name"));
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def(
      "parse_relations",
      [](const std::string& text, bool lenient) {
        return parse_relations_file(text, lenient ? Strictness::presentation : Strictness::strict);
      },
      py::arg("text"), py::arg("lenient") = false);
  m.def("parse_pd", [](const std::string& text) { return parse_pd_code(text); }, py::arg("text"));
  m.def("reidemeister_r1", &reidemeister_r1, py::arg("diagram"), py::arg("arc"), py::arg("sign") = 1);
  m.def("reidemeister_r2", &reidemeister_r2, py::arg("diagram"), py::arg("a"), py::arg("b"),
        py::arg("first_sign") = 1);
  m.def("connected_sum", &connected_sum, py::arg("d1"), py::arg("d2"), py::arg("a1"), py::arg("a2"));

  py::class_<FiniteQuandle>(m, "FiniteQuandle")
      .def_static("alexander", &FiniteQuandle::alexander, py::arg("n"), py::arg("t"))
      .def_static("takasaki", &FiniteQuandle::takasaki, py::arg("n"))
      .def_static("trivial", &FiniteQuandle::trivial, py::arg("m"))
      .def_static("validate", &FiniteQuandle::validate, py::arg("table"))
      .def_property_readonly("order", &FiniteQuandle::order)
      .def("op", &FiniteQuandle::op)
      .def("dual", &FiniteQuandle::dual)
      .def("table", &FiniteQuandle::table)
      .def("is_involutory", [](const FiniteQuandle& q) { return is_involutory(q); })
      .def("__eq__", [](const FiniteQuandle& a, const FiniteQuandle& b) { return a == b; });

  m.def(
      "counting_invariant",
      [](const py::object& link, const FiniteQuandle& q, std::uint64_t cap) {
        return to_py(counting_invariant(extract(resolve(link)), q, cap));
      },
      py::arg("link"), py::arg("quandle"), py::arg("cap") = kDefaultCap);
  m.def(
      "phi_polynomial",
      [](const py::object& link, const FiniteQuandle& q, std::uint64_t cap) {
        return phi_dict(phi_polynomial(extract(resolve(link)), q, cap));
      },
      py::arg("link"), py::arg("quandle"), py::arg("cap") = kDefaultCap);
  m.def(
      "colorings",
      [](const py::object& link, const FiniteQuandle& q, std::uint64_t cap) {
        const QuandlePresentation p = extract(resolve(link));
        std::vector<std::vector<Element>> out;
        const auto list = q.alexander_params()
                              ? enumerate_solutions(build_system(p, *q.alexander_params()),
                                                    q.alexander_params()->n, cap)
                              : brute_force_colorings(p, q, cap);
        for (const Coloring& c : list) out.push_back(c.assignment);
        return out;
      },
      py::arg("link"), py::arg("quandle"), py::arg("cap") = kDefaultCap);
  m.def(
      "trivial_t_classes",
      [](const py::object& link) { return trivial_t_classes(extract(resolve(link))); },
      py::arg("link"));
  m.def(
      "compare_json",
      [](const std::string& a, const std::string& b, const std::vector<std::uint32_t>& n_values,
         const std::string& t_policy, std::uint64_t cap) {
        const auto report = compare(extract(catalog(a)), extract(catalog(b)), a, b, n_values,
                                    TPolicy::parse(t_policy), cap);
        return to_json(report).dump();
      },
      py::arg("link_a"), py::arg("link_b"), py::arg("n_values"), py::arg("t_policy") = "all-units",
      py::arg("cap") = kDefaultCap);
}
