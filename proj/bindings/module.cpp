#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chorded/chordality.hpp"
#include "chorded/decomposition.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"
#include "chorded/low_degree.hpp"
#include "chorded/packing.hpp"

namespace py = pybind11;
using namespace chorded;

namespace {

std::vector<int> whole_graph(const Graph& g) {
    std::vector<int> vs(g.order());
    for (int v = 0; v < g.order(); ++v) vs[v] = v;
    return vs;
}

const char* pack_status_name(PackStatus s) {
    switch (s) {
        case PackStatus::found: return "found";
        case PackStatus::exhausted: return "exhausted";
        case PackStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "chorded cycle toolkit: detection, decomposition, low-degree "
              "independent sets, exact packing, extremal families";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<soundness_error>(m, "SoundnessError", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_static("parse", [](const std::string& text) { return Graph::parse(text); })
        .def("serialize", &Graph::serialize)
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("has_edge", &Graph::has_edge)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<CycleWithChords>(m, "CycleWithChords")
        .def_readonly("cycle", &CycleWithChords::cycle)
        .def_readonly("chords", &CycleWithChords::chords)
        .def("validate", [](const CycleWithChords& w, const Graph& g) { return w.validate(g); });

    py::class_<VertexOrdering>(m, "VertexOrdering")
        .def_readonly("order", &VertexOrdering::order)
        .def_readonly("max_back_degree", &VertexOrdering::max_back_degree);
    py::class_<DenseCoreWitness>(m, "DenseCoreWitness")
        .def_readonly("vertices", &DenseCoreWitness::vertices);
    py::class_<Tripartition>(m, "Tripartition").def_readonly("color", &Tripartition::color);

    py::class_<BlockCut>(m, "BlockCut")
        .def_readonly("blocks", &BlockCut::blocks)
        .def_readonly("bridges", &BlockCut::bridges)
        .def_readonly("articulation_points", &BlockCut::articulation_points);

    py::class_<EarDecomposition::Ear>(m, "Ear")
        .def_readonly("a", &EarDecomposition::Ear::a)
        .def_readonly("interior", &EarDecomposition::Ear::interior)
        .def_readonly("b", &EarDecomposition::Ear::b);
    py::class_<EarDecomposition>(m, "EarDecomposition")
        .def_readonly("base_cycle", &EarDecomposition::base_cycle)
        .def_readonly("ears", &EarDecomposition::ears);

    py::class_<EarStemCertificate>(m, "EarStemCertificate")
        .def_readonly("per_ear_stem", &EarStemCertificate::per_ear_stem)
        .def_readonly("base_stems", &EarStemCertificate::base_stems);

    py::class_<StemBoundReport>(m, "StemBoundReport")
        .def_readonly("stem_count", &StemBoundReport::stem_count)
        .def_readonly("bound_num", &StemBoundReport::bound_num)
        .def_readonly("bound_den", &StemBoundReport::bound_den)
        .def_readonly("passed", &StemBoundReport::pass);

    py::class_<BlockPathDecomposition::Path>(m, "DecompositionPath")
        .def_readonly("a", &BlockPathDecomposition::Path::a)
        .def_readonly("b", &BlockPathDecomposition::Path::b)
        .def_readonly("vertices", &BlockPathDecomposition::Path::vertices);
    py::class_<BlockPathDecomposition>(m, "BlockPathDecomposition")
        .def_readonly("blocks", &BlockPathDecomposition::blocks)
        .def_readonly("connectors", &BlockPathDecomposition::connectors)
        .def_readonly("pendants", &BlockPathDecomposition::pendants);

    py::class_<LowDegreeIndependentSet>(m, "LowDegreeIndependentSet")
        .def_readonly("vertices", &LowDegreeIndependentSet::vertices)
        .def_readonly("host_n", &LowDegreeIndependentSet::host_n)
        .def_readonly("guarantee_num", &LowDegreeIndependentSet::guarantee_num)
        .def_readonly("guarantee_den", &LowDegreeIndependentSet::guarantee_den)
        .def_readonly("s_set", &LowDegreeIndependentSet::s_set);

    py::class_<DegreeSumStat>(m, "DegreeSumStat")
        .def_readonly("t", &DegreeSumStat::t)
        .def_readonly("value", &DegreeSumStat::value)  // None means infinity
        .def_readonly("witness", &DegreeSumStat::witness);

    py::class_<Packing>(m, "Packing")
        .def_readonly("cycles", &Packing::cycles)
        .def_readonly("total_vertices", &Packing::total_vertices)
        .def("validate", [](const Packing& p, const Graph& g) { return p.validate(g); });

    py::class_<PackResult>(m, "PackResult")
        .def_property_readonly("status",
                               [](const PackResult& r) { return pack_status_name(r.status); })
        .def_readonly("packing", &PackResult::packing)
        .def_readonly("max_found", &PackResult::max_found)
        .def_readonly("nodes", &PackResult::nodes);

    py::class_<TheoremInstance>(m, "TheoremInstance")
        .def_readonly("k", &TheoremInstance::k)
        .def_readonly("t", &TheoremInstance::t)
        .def_readonly("n", &TheoremInstance::n)
        .def_readonly("sigma_value", &TheoremInstance::sigma_value)
        .def_readonly("order_threshold", &TheoremInstance::order_threshold)
        .def_readonly("degree_threshold", &TheoremInstance::degree_threshold)
        .def_readonly("order_ok", &TheoremInstance::order_ok)
        .def_readonly("degree_ok", &TheoremInstance::degree_ok);

    m.def("find_chorded_cycle", &find_chorded_cycle, py::arg("g"));
    m.def("is_non_chorded_bruteforce", &is_non_chorded_bruteforce, py::arg("g"));
    m.def("chorded_cycle_from_two_paths", &chorded_cycle_from_two_paths, py::arg("g"),
          py::arg("p1"), py::arg("p2"));
    m.def("edge_bound_check", [](const Graph& g) {
        auto r = edge_bound_check(g);
        return py::make_tuple(r.m, r.bound, r.within);
    });

    m.def("degeneracy_ordering", &degeneracy_ordering, py::arg("g"));
    m.def("tripartition", &tripartition, py::arg("g"));

    m.def("block_cut", &block_cut, py::arg("g"));
    m.def(
        "ear_decompose",
        [](const Graph& g, std::optional<std::vector<int>> block) {
            return ear_decompose(g, block ? *block : whole_graph(g));
        },
        py::arg("g"), py::arg("block") = py::none());
    m.def(
        "ear_stem_certificate",
        [](const Graph& g, std::optional<std::vector<int>> block, const EarDecomposition& ed) {
            return ear_stem_certificate(g, block ? *block : whole_graph(g), ed);
        },
        py::arg("g"), py::arg("block"), py::arg("decomposition"));
    m.def(
        "stem_bound_check",
        [](const Graph& g, std::optional<std::vector<int>> block) {
            return stem_bound_check(g, block ? *block : whole_graph(g));
        },
        py::arg("g"), py::arg("block") = py::none());
    m.def("block_path_decompose", &block_path_decompose, py::arg("g"));

    m.def("tree_low_degree_vertices", &tree_low_degree_vertices, py::arg("t"));
    m.def("tree_independent_low_degree", &tree_independent_low_degree, py::arg("t"));
    m.def("nonchorded_independent_low_degree", &nonchorded_independent_low_degree, py::arg("h"));

    m.def("sigma", &sigma, py::arg("g"), py::arg("t"), py::arg("budget") = kDefaultSigmaBudget);
    m.def("max_packing", &max_packing, py::arg("g"), py::arg("k"),
          py::arg("budget") = kDefaultPackBudget);
    m.def(
        "minimal_packing",
        [](const Graph& g, int k, long budget) { return minimal_packing(g, k, budget); },
        py::arg("g"), py::arg("k"), py::arg("budget") = kDefaultPackBudget);
    m.def("check_hypothesis", &check_hypothesis, py::arg("n"), py::arg("k"), py::arg("t"),
          py::arg("sigma_value"));

    m.def("gen_sharpness_bipartite", &gen_sharpness_bipartite, py::arg("k"), py::arg("n"));
    m.def("gen_g1", &gen_g1, py::arg("k"));
    m.def("gen_g2", &gen_g2, py::arg("rounds"));
    m.def("max_low_degree_independent", &max_low_degree_independent, py::arg("g"),
          py::arg("budget") = kDefaultMisBudget);

    m.def(
        "enumerate_graphs",
        [](int n, const std::string& filter, py::function visit) {
            GraphFilter f;
            if (filter == "all") f = GraphFilter::all;
            else if (filter == "connected") f = GraphFilter::connected;
            else if (filter == "non_chorded") f = GraphFilter::non_chorded;
            else if (filter == "non_chorded_connected") f = GraphFilter::non_chorded_connected;
            else if (filter == "non_chorded_biconnected") f = GraphFilter::non_chorded_biconnected;
            else throw precondition_error("unknown filter: " + filter);
            return enumerate_graphs(n, f, [&](const Graph& g) {
                py::object r = visit(g);  // the Graph is copied into Python
                return r.is_none() || py::cast<bool>(r);
            });
        },
        py::arg("n"), py::arg("filter"), py::arg("visit"));
}
