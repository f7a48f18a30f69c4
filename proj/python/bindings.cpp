#include "heegaard/cli.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace heegaard;

namespace {

// Python ints cross the boundary as decimal strings so arbitrary size survives.
Int to_int(const py::handle& h) { return Int(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>()); }

py::int_ from_int(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

IntMatrix to_matrix(const py::sequence& rows, std::size_t cols) {
    IntMatrix m(py::len(rows), cols);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const py::sequence row = rows[i];
        if (py::len(row) != cols)
            throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(py::len(row)) +
                                        " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = to_int(row[j]);
    }
    return m;
}

py::list from_matrix(const IntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(from_int(m(i, j)));
        out.append(row);
    }
    return out;
}

HeegaardDiagramH1 make_diagram(const py::sequence& minus, const py::sequence& plus) {
    const std::size_t g = py::len(minus);
    if (py::len(plus) != g) throw std::invalid_argument("minus and plus must have the same number of rows");
    IntMatrix m = to_matrix(minus, 2 * g), p = to_matrix(plus, 2 * g);
    if (auto why = lagrangian_violation(m, g)) throw std::invalid_argument("minus is not a Lagrangian: " + *why);
    if (auto why = lagrangian_violation(p, g)) throw std::invalid_argument("plus is not a Lagrangian: " + *why);
    return HeegaardDiagramH1(Lagrangian(g, std::move(m)), Lagrangian(g, std::move(p)));
}

SymplecticMap theta_map(const std::string& name, std::size_t genus, const std::optional<py::sequence>& matrix) {
    if (!matrix) return named_map(name, genus);
    const std::size_t n = py::len(*matrix);
    if (n % 2 != 0) throw std::invalid_argument("theta matrix must have an even number of rows");
    return SymplecticMap(n / 2, to_matrix(*matrix, n));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Heegaard diagram homology, linking forms and embedding obstructions";

    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<HeegaardDiagramH1>(m, "Diagram")
        .def(py::init(&make_diagram), py::arg("minus"), py::arg("plus"))
        .def_static("parse", [](const std::string& text) { return parse_diagram(text); })
        .def_property_readonly("genus", &HeegaardDiagramH1::genus)
        .def_property_readonly("minus", [](const HeegaardDiagramH1& d) { return from_matrix(d.minus().rows()); })
        .def_property_readonly("plus", [](const HeegaardDiagramH1& d) { return from_matrix(d.plus().rows()); })
        .def("__str__", &serialize_diagram)
        .def("__repr__", [](const HeegaardDiagramH1& d) { return "<Diagram genus " + std::to_string(d.genus()) + ">"; })
        .def(py::self == py::self);

    m.def("lens", [](const py::int_& p, const py::int_& q) { return lens(to_int(p), to_int(q)); }, py::arg("p"),
          py::arg("q"));
    m.def("b_fixture", &b_fixture);
    m.def("connected_sum", &connected_sum);
    m.def("mirror", &mirror);
    m.def("bar_stabilize", &bar_stabilize, py::arg("d"), py::arg("k"));
    m.def("hat_stabilize", &hat_stabilize, py::arg("d"), py::arg("k"));
    m.def("torsion_order", [](const HeegaardDiagramH1& d) { return from_int(torsion_order(d)); });
    m.def(
        "is_hyperbolic",
        [](const HeegaardDiagramH1& d, std::int64_t bound) { return is_hyperbolic(linking_form(d), bound).has_value(); },
        py::arg("d"), py::arg("bound") = kDefaultHyperbolicBound);

    m.def("homology_json", [](const HeegaardDiagramH1& d) { return homology_json(d, "python").dump(); });
    m.def("linkform_json", [](const HeegaardDiagramH1& d) { return linkform_json(d, "python").dump(); });
    m.def("diagonalize_json", [](const HeegaardDiagramH1& d) { return diagonalize_json(d, "python").dump(); });
    m.def(
        "report_json",
        [](const HeegaardDiagramH1& d, std::int64_t bound, unsigned threads) {
            return build_report(d, "python", bound, threads).dump();
        },
        py::arg("d"), py::arg("bound") = kDefaultHyperbolicBound, py::arg("threads") = 1);
    m.def(
        "search_q_json",
        [](const std::string& theta, std::size_t genus, std::int64_t entries, unsigned threads,
           const std::optional<py::sequence>& matrix) {
            const SymplecticMap f = theta_map(theta, genus, matrix);
            py::gil_scoped_release release;
            return search_q_json(f, matrix ? "matrix" : theta, entries, threads).dump();
        },
        py::arg("theta") = "rotation", py::arg("genus") = 1, py::arg("entries") = 1, py::arg("threads") = 1,
        py::arg("matrix") = py::none());
    m.def(
        "ub0_json",
        [](const std::string& theta, std::int64_t bound, const std::optional<py::sequence>& matrix) {
            return ub0_json(theta_map(theta, 1, matrix), matrix ? "matrix" : theta, bound).dump();
        },
        py::arg("theta") = "ub0", py::arg("bound") = 50, py::arg("matrix") = py::none());
}
