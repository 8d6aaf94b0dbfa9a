#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rinv/bracket.hpp"
#include "rinv/diagram.hpp"
#include "rinv/invariant.hpp"
#include "rinv/moves.hpp"
#include "rinv/oracles.hpp"

namespace py = pybind11;
using namespace rinv;

namespace {

Diagram parse_or_raise(const std::string& text) {
    try {
        return parse_diagram(text);
    } catch (const ParseError& e) {
        throw py::value_error(e.what());
    } catch (const ValidationError& e) {
        throw py::value_error(e.what());
    }
}

}  // namespace

PYBIND11_MODULE(rinv, m) {
    m.doc() = "exact invariant of link and embedded-graph diagrams";

    m.def("validate", [](const std::string& text) {
        return validate(parse_or_raise(text));
    },
          py::arg("diagram"),
          "Parse a diagram and return its list of validation problems.");

    m.def("canonical", [](const std::string& text) {
        return render_diagram(canonical_labels(parse_or_raise(text)));
    },
          py::arg("diagram"), "Parse, relabel canonically, and re-render.");

    m.def("bracket", [](const std::string& text) {
        return kauffman_bracket(parse_or_raise(text)).to_string("A");
    },
          py::arg("diagram"), "Bracket polynomial of a link diagram, in A.");

    m.def("invariant", [](const std::string& text) {
        return r_graph(parse_or_raise(text)).to_string("L");
    },
          py::arg("diagram"), "The invariant R as a string in L.");

    m.def("evaluate", [](const std::string& text) {
        InvariantReport rep = analyze(parse_or_raise(text));
        py::dict out;
        out["r"] = rep.r.to_string("L");
        out["at2"] = rep.at2.to_string();
        out["at1"] = rep.at1.to_string();
        out["at_minus1"] = rep.at_minus1.to_string();
        return out;
    },
          py::arg("diagram"),
          "Full report: R and its values at 2, 1, and -1 as strings.");

    m.def("three_colorings", [](const std::string& text) {
        return three_colorings(parse_or_raise(text));
    },
          py::arg("diagram"), "Number of Fox three-colorings of a link diagram.");

    m.def("random_diagram", [](uint64_t seed, int max_crossings, int max_vertices) {
        return render_diagram(random_diagram(seed, max_crossings, max_vertices));
    },
          py::arg("seed"), py::arg("max_crossings") = 8, py::arg("max_vertices") = 2,
          "Seeded random planar diagram, rendered as text.");

    m.def("component_count", [](const std::string& text) {
        return component_count(parse_or_raise(text));
    },
          py::arg("diagram"), "Number of link/graph components.");
}
