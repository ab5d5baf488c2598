// Python bindings for the core library.  Digraphs cross the boundary as a
// thin class; vertex sets become sorted lists; certificates, witnesses and
// decision reports cross as JSON text that the package wrapper parses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ecdlab/digraph.hpp"
#include "ecdlab/edgelist.hpp"
#include "ecdlab/families.hpp"
#include "ecdlab/generators.hpp"
#include "ecdlab/harness.hpp"
#include "ecdlab/products.hpp"
#include "ecdlab/solver.hpp"
#include "ecdlab/theorems.hpp"

namespace py = pybind11;
using namespace ecdlab;

namespace {

VertexSet set_from(const Digraph& d, const std::vector<int>& vs) {
    return VertexSet::from_vector(d.vertex_count(), vs);
}

py::object certificate_to_py(const std::optional<EcdCertificate>& cert) {
    if (!cert) return py::none();
    py::dict out;
    out["s"] = cert->s.to_vector();
    out["dominator"] = cert->dominator;
    return out;
}

CyclePattern cycle_pattern(const std::string& word) {
    return parse_cycle_word(word);
}

PathPattern path_pattern(const std::string& word) {
    return word == "p1" ? PathPattern{} : parse_path_word(word);
}

StarOrientation star_orientation(int t, const std::string& mode, int t1) {
    return StarOrientation{parse_star_mode(mode), t, t1};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "efficient closed domination in digraph products";

    py::register_exception<bound_error>(m, "BoundError");

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int, const std::vector<Arc>&>(), py::arg("n"),
             py::arg("arcs") = std::vector<Arc>{})
        .def_property_readonly("n", &Digraph::vertex_count)
        .def_property_readonly("m", &Digraph::arc_count)
        .def("arcs", &Digraph::arcs)
        .def("has_arc", &Digraph::has_arc, py::arg("u"), py::arg("v"))
        .def("out_neighbors",
             [](const Digraph& d, int v) { return d.out_neighbors(v).to_vector(); }, py::arg("v"))
        .def("in_neighbors",
             [](const Digraph& d, int v) { return d.in_neighbors(v).to_vector(); }, py::arg("v"))
        .def("out_degree", &Digraph::out_degree, py::arg("v"))
        .def("in_degree", &Digraph::in_degree, py::arg("v"))
        .def("reverse", &Digraph::reverse)
        .def("components",
             [](const Digraph& d) {
                 std::vector<std::vector<int>> out;
                 for (const VertexSet& c : d.components()) out.push_back(c.to_vector());
                 return out;
             })
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__repr__", [](const Digraph& d) {
            return "Digraph(n=" + std::to_string(d.vertex_count()) +
                   ", m=" + std::to_string(d.arc_count()) + ")";
        });

    // ---- serialization -------------------------------------------------
    m.def("parse_edgelist",
          [](const std::string& text) { return parse_edgelist(text); }, py::arg("text"),
          "parse an edge list: a 'n m' header line followed by m 'u v' lines");
    m.def("serialize_edgelist", &serialize_edgelist, py::arg("digraph"));

    // ---- generators ----------------------------------------------------
    m.def("cycle", [](const std::string& word) { return gen_cycle(cycle_pattern(word)); },
          py::arg("word"), "oriented cycle from a turn word over cw/ccw, e.g. 'cw,cw,ccw'");
    m.def("sink_free_cycle", [](int k) { return gen_cycle(uniform_cycle(k)); }, py::arg("k"),
          "uniformly oriented cycle of length k");
    m.def("path", [](const std::string& word) { return gen_path(path_pattern(word)); },
          py::arg("word"), "oriented path from a step word over fwd/bwd ('p1' = one vertex)");
    m.def("star",
          [](int t, const std::string& mode, int t1) {
              return gen_star(star_orientation(t, mode, t1));
          },
          py::arg("t"), py::arg("mode") = "center-source", py::arg("t1") = 0,
          "star with center 0 and t leaves; mode is center-source | center-sink | mixed");
    m.def("orient_from_independent_set",
          [](const Digraph& g, const std::vector<int>& s) {
              return orient_from_independent_set(g, set_from(g, s));
          },
          py::arg("graph"), py::arg("s"),
          "orient a symmetric digraph so the independent dominating set s covers it exactly");

    // ---- products --------------------------------------------------------
    m.def("product",
          [](const std::string& kind, const Digraph& d, const Digraph& f) {
              return product(parse_product_kind(kind), d, f);
          },
          py::arg("kind"), py::arg("d"), py::arg("f"),
          "product of two digraphs; kind is cartesian | direct | strong | lex");
    m.def("product_fold",
          [](const std::string& kind, const std::vector<Digraph>& factors) {
              return product_fold(parse_product_kind(kind), factors);
          },
          py::arg("kind"), py::arg("factors"));

    // ---- solver ----------------------------------------------------------
    m.def("find_ecd_set",
          [](const Digraph& d) { return certificate_to_py(find_ecd_set(d)); }, py::arg("digraph"),
          "first efficient closed dominating set with its dominator map, or None");
    m.def("find_eca_set",
          [](const Digraph& d) { return certificate_to_py(find_eca_set(d)); }, py::arg("digraph"),
          "absorbing counterpart of find_ecd_set (closed in-neighborhoods)");
    m.def("enumerate_ecd_sets",
          [](const Digraph& d) {
              std::vector<std::vector<int>> out;
              for (const VertexSet& s : enumerate_ecd_sets(d)) out.push_back(s.to_vector());
              return out;
          },
          py::arg("digraph"), "all efficient closed dominating sets, lexicographically sorted");
    m.def("is_ecd_set",
          [](const Digraph& d, const std::vector<int>& s) { return is_ecd_set(d, set_from(d, s)); },
          py::arg("digraph"), py::arg("s"));
    m.def("certify_ecd_set",
          [](const Digraph& d, const std::vector<int>& s) {
              return certificate_to_py(certify_ecd_set(d, set_from(d, s)));
          },
          py::arg("digraph"), py::arg("s"),
          "dominator map when s is an efficient closed dominating set, else None");
    m.def("domination_number",
          [](const Digraph& d) {
              DominationNumbers g = domination_number(d);
              py::dict out;
              out["gamma"] = g.gamma;
              out["gamma_a"] = g.gamma_a;
              return out;
          },
          py::arg("digraph"), "domination number and its absorbing counterpart");

    // ---- factor families ---------------------------------------------------
    m.def("recognize_json",
          [](const std::string& family, const Digraph& d) -> py::object {
              std::optional<FamilyWitness> w = recognize(parse_family(family), d);
              if (!w) return py::none();
              return py::str(w->to_json());
          },
          py::arg("family"), py::arg("digraph"),
          "witness JSON when the digraph is in the family (d1 | d2 | d3 | d0), else None");

    // ---- theorem deciders (JSON reports; the wrapper parses them) ----------
    m.def("decide_strong_json",
          [](const Digraph& d, const Digraph& f) { return decide_strong(d, f).to_json(); },
          py::arg("d"), py::arg("f"));
    m.def("decide_lex_json",
          [](const Digraph& d, const Digraph& f) { return decide_lex(d, f).to_json(); },
          py::arg("d"), py::arg("f"));
    m.def("decide_cartesian_cycle_json",
          [](const Digraph& d, int k) {
              return decide_cartesian_cycle(d, uniform_cycle(k)).to_json();
          },
          py::arg("d"), py::arg("k"));
    m.def("decide_cartesian_star_json",
          [](const Digraph& f, int t, const std::string& mode, int t1) {
              return decide_cartesian_star(f, star_orientation(t, mode, t1)).to_json();
          },
          py::arg("f"), py::arg("t"), py::arg("mode") = "center-source", py::arg("t1") = 0);
    m.def("decide_direct_cycles_json",
          [](const std::vector<std::string>& words) {
              std::vector<CyclePattern> ps;
              for (const std::string& w : words) ps.push_back(cycle_pattern(w));
              return decide_direct_cycles(ps).to_json();
          },
          py::arg("words"));
    m.def("decide_direct_paths_json",
          [](const std::vector<std::string>& words) {
              std::vector<PathPattern> ps;
              for (const std::string& w : words) ps.push_back(path_pattern(w));
              return decide_direct_paths(ps).to_json();
          },
          py::arg("words"));

    // ---- cross-validation ---------------------------------------------------
    m.def("validate",
          [](const std::string& suite, int max_n, int k_min, int k_max, int samples,
             unsigned long seed, int workers) {
              CorpusSpec spec;
              spec.suite = parse_suite(suite);
              spec.max_n = max_n;
              spec.k_min = k_min;
              spec.k_max = k_max;
              spec.samples = samples;
              spec.seed = seed;
              spec.workers = workers;
              ValidationReport rep = cross_validate(spec);
              py::dict out;
              out["tsv"] = rep.to_tsv();
              out["summary"] = rep.summary();
              out["instances"] = rep.instances();
              out["mismatches"] = rep.mismatches();
              out["findings"] = rep.findings();
              out["cert_failures"] = rep.cert_failures();
              return out;
          },
          py::arg("suite"), py::arg("max_n") = 0, py::arg("k_min") = 0, py::arg("k_max") = 0,
          py::arg("samples") = 0, py::arg("seed") = 2024, py::arg("workers") = 0,
          "run one cross-validation suite and return its report (0 = suite default)");
}
