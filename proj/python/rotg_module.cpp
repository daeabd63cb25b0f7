#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotg/build.hpp"
#include "rotg/certify.hpp"
#include "rotg/conjecture.hpp"
#include "rotg/errors.hpp"
#include "rotg/iso.hpp"
#include "rotg/mgf.hpp"
#include "rotg/multigraph.hpp"
#include "rotg/shape.hpp"
#include "rotg/surgery.hpp"

namespace py = pybind11;
using namespace rotg;

PYBIND11_MODULE(rotg, m) {
    m.doc() = "Rotation r-graph construction and verification toolkit.";

    py::register_exception<ParseError>(m, "MgfParseError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<InternalContradictionError>(m, "InternalContradictionError",
                                                       PyExc_RuntimeError);

    py::class_<MultiGraph>(m, "MultiGraph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<VertexId, VertexId>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &MultiGraph::vertex_count)
        .def_property_readonly("m", &MultiGraph::edge_count)
        .def("edges",
             [](const MultiGraph& g) {
                 std::vector<std::pair<VertexId, VertexId>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("edge", [](const MultiGraph& g, EdgeId e) { return std::pair(g.edge(e).u, g.edge(e).v); })
        .def("degree", &MultiGraph::degree)
        .def("incident", [](const MultiGraph& g, VertexId v) { return g.incident(v); })
        .def("multiplicity", &MultiGraph::multiplicity)
        .def("is_simple", &MultiGraph::is_simple)
        .def("is_regular", &MultiGraph::is_regular)
        .def("regularity", &MultiGraph::regularity)
        .def(py::self == py::self)
        .def("__repr__", [](const MultiGraph& g) {
            return "MultiGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<RootedSpanningTree>(m, "RootedSpanningTree")
        .def(py::init<>())
        .def(py::init([](VertexId root, std::vector<EdgeId> edges) {
                 return RootedSpanningTree{root, std::move(edges)};
             }),
             py::arg("root"), py::arg("edges"))
        .def_readwrite("root", &RootedSpanningTree::root)
        .def_readwrite("edges", &RootedSpanningTree::edges)
        .def(py::self == py::self);

    py::class_<VertexPermutation>(m, "VertexPermutation")
        .def(py::init<>())
        .def(py::init([](std::vector<VertexId> image) { return VertexPermutation{std::move(image)}; }),
             py::arg("image"))
        .def_readwrite("image", &VertexPermutation::image)
        .def("__call__", [](const VertexPermutation& p, VertexId v) { return p(v); })
        .def(py::self == py::self);

    py::class_<ReductionStep>(m, "ReductionStep")
        .def(py::init([](std::vector<VertexId> vs) { return ReductionStep{std::move(vs)}; }),
             py::arg("vertices"))
        .def_readwrite("vertices", &ReductionStep::vertices)
        .def(py::self == py::self);

    py::class_<ReductionScript>(m, "ReductionScript")
        .def(py::init<>())
        .def(py::init([](std::vector<ReductionStep> steps) {
                 return ReductionScript{std::move(steps)};
             }),
             py::arg("steps"))
        .def_readwrite("steps", &ReductionScript::steps)
        .def(py::self == py::self);

    // mgraph operations
    m.def("boundary", &boundary, py::arg("g"), py::arg("s"));
    m.def("neighbors", &neighbors, py::arg("g"), py::arg("s"));
    m.def("is_connected", &is_connected, py::arg("g"));
    m.def("contract", &contract, py::arg("g"), py::arg("s"));
    m.def("edge_multiset_equal", &edge_multiset_equal, py::arg("a"), py::arg("b"));
    m.def("spanning_tree", &spanning_tree, py::arg("g"), py::arg("root"));

    // certify
    py::enum_<OddCutMethod>(m, "OddCutMethod")
        .value("Exhaustive", OddCutMethod::Exhaustive)
        .value("GomoryHu", OddCutMethod::GomoryHu)
        .value("Auto", OddCutMethod::Auto);
    py::class_<OddCutCertificate>(m, "OddCutCertificate")
        .def_readonly("value", &OddCutCertificate::value)
        .def_readonly("witness", &OddCutCertificate::witness);
    m.def("min_odd_cut", &min_odd_cut, py::arg("g"), py::arg("method") = OddCutMethod::Auto);
    m.def("is_r_graph", &is_r_graph, py::arg("g"), py::arg("r"));
    m.def("rizzi_split", &rizzi_split, py::arg("g"), py::arg("s"));
    m.def("is_even_graph", &is_even_graph, py::arg("g"));

    // shape
    py::class_<TirShape>(m, "TirShape")
        .def_readonly("r", &TirShape::r)
        .def_readonly("depth", &TirShape::depth)
        .def_readonly("root", &TirShape::root)
        .def(py::self == py::self);
    m.def("tir_order", &tir_order, py::arg("r"), py::arg("depth"));
    m.def("build_tir", &build_tir, py::arg("r"), py::arg("depth"));
    m.def("recognize_tir", &recognize_tir, py::arg("tree"));
    m.def("whole_graph_tree", &whole_graph_tree, py::arg("g"), py::arg("root") = 0);
    m.def("tree_as_graph", &tree_as_graph, py::arg("g"), py::arg("tree"));
    m.def("is_hist", &is_hist, py::arg("g"), py::arg("tree"));
    m.def("verify_hist_partition", &verify_hist_partition, py::arg("g"), py::arg("tree"));
    m.def("orbit_length", &orbit_length, py::arg("p"), py::arg("v"));
    m.def("is_automorphism", &is_automorphism, py::arg("g"), py::arg("p"));
    m.def("is_rotational", &is_rotational, py::arg("g"), py::arg("tree"), py::arg("p"));
    m.def("find_rotational_automorphism", &find_rotational_automorphism, py::arg("g"),
          py::arg("tree"));

    // surgery
    py::class_<EdgeExpansion>(m, "EdgeExpansion")
        .def_readonly("graph", &EdgeExpansion::graph)
        .def_readonly("tree", &EdgeExpansion::tree)
        .def_readonly("low_copy", &EdgeExpansion::low_copy)
        .def_readonly("high_copy", &EdgeExpansion::high_copy)
        .def_readonly("edge_map", &EdgeExpansion::edge_map);
    m.def("edge_expansion", &edge_expansion, py::arg("g"), py::arg("tree"), py::arg("e"));
    py::class_<LeafExpansion>(m, "LeafExpansion")
        .def_readonly("graph", &LeafExpansion::graph)
        .def_readonly("tree", &LeafExpansion::tree)
        .def_readonly("clique", &LeafExpansion::clique)
        .def_readonly("vertex_map", &LeafExpansion::vertex_map)
        .def_readonly("edge_map", &LeafExpansion::edge_map);
    m.def("leaf_expansion", &leaf_expansion, py::arg("g"), py::arg("tree"), py::arg("leaf"));
    py::class_<TwoCutReduction>(m, "TwoCutReduction")
        .def_readonly("graph", &TwoCutReduction::graph)
        .def_readonly("vertex_map", &TwoCutReduction::vertex_map)
        .def_readonly("edge_map", &TwoCutReduction::edge_map)
        .def_readonly("joining_edge", &TwoCutReduction::joining_edge);
    m.def("two_cut_reduction", &two_cut_reduction, py::arg("g"), py::arg("s"));
    m.def("find_two_cuts", &find_two_cuts, py::arg("g"));
    m.def("apply_script", &apply_script, py::arg("g"), py::arg("script"));

    // build
    py::class_<HistGraph>(m, "HistGraph")
        .def(py::init([](MultiGraph g, RootedSpanningTree t, int r, int depth) {
                 return HistGraph{std::move(g), std::move(t), r, depth};
             }),
             py::arg("graph"), py::arg("tree"), py::arg("r"), py::arg("depth"))
        .def_readonly("graph", &HistGraph::graph)
        .def_readonly("tree", &HistGraph::tree)
        .def_readonly("r", &HistGraph::r)
        .def_readonly("depth", &HistGraph::depth);
    py::class_<RotationGraph>(m, "RotationGraph")
        .def_readonly("base", &RotationGraph::base)
        .def_readonly("rotation", &RotationGraph::rotation);
    py::class_<AssemblyPlan>(m, "AssemblyPlan")
        .def_readonly("r", &AssemblyPlan::r)
        .def_readonly("depth", &AssemblyPlan::depth)
        .def_readonly("hub_size", &AssemblyPlan::hub_size)
        .def_readonly("h_copy_size", &AssemblyPlan::h_copy_size)
        .def_readonly("r_copy_size", &AssemblyPlan::r_copy_size)
        .def_readonly("h_copies", &AssemblyPlan::h_copies)
        .def_readonly("r_copies", &AssemblyPlan::r_copies)
        .def_readonly("n_lists", &AssemblyPlan::n_lists)
        .def_readonly("l_lists", &AssemblyPlan::l_lists)
        .def_readonly("new_edges", &AssemblyPlan::new_edges);
    py::class_<HistExpansion>(m, "HistExpansion")
        .def_readonly("hist", &HistExpansion::hist)
        .def_readonly("to_input", &HistExpansion::to_input);
    m.def("expand_to_hist", &expand_to_hist, py::arg("g"), py::arg("r"));
    m.def("base_rotation_graph", &base_rotation_graph, py::arg("r"), py::arg("depth"));
    py::class_<Assembly>(m, "Assembly")
        .def_readonly("rotation", &Assembly::rotation)
        .def_readonly("to_hist", &Assembly::to_hist)
        .def_readonly("plan", &Assembly::plan);
    m.def("assemble", &assemble, py::arg("hist"), py::arg("rotation"));
    py::class_<Construction>(m, "Construction")
        .def_readonly("rotation", &Construction::rotation)
        .def_readonly("to_input", &Construction::to_input)
        .def_readonly("plan", &Construction::plan)
        .def_readonly("hist", &Construction::hist)
        .def_readonly("base", &Construction::base);
    m.def("construct_rotation_graph", &construct_rotation_graph, py::arg("g"), py::arg("r"));
    m.def("bipartite_contraction", &bipartite_contraction, py::arg("assembled"), py::arg("plan"));

    // conjecture
    py::class_<PerfectMatching>(m, "PerfectMatching")
        .def(py::init([](std::vector<EdgeId> edges) { return PerfectMatching{std::move(edges)}; }),
             py::arg("edges"))
        .def_readwrite("edges", &PerfectMatching::edges)
        .def(py::self == py::self);
    m.def("is_perfect_matching", &is_perfect_matching, py::arg("g"), py::arg("pm"));
    m.def("enumerate_perfect_matchings", &enumerate_perfect_matchings, py::arg("g"),
          py::arg("limit") = std::nullopt);
    py::enum_<CoverRule>(m, "CoverRule")
        .value("ExactlyTwo", CoverRule::ExactlyTwo)
        .value("AtLeastOne", CoverRule::AtLeastOne)
        .value("AtMostK", CoverRule::AtMostK);
    m.def("find_pm_cover", &find_pm_cover, py::arg("g"), py::arg("count"), py::arg("rule"),
          py::arg("k") = 0);
    m.def("chromatic_index_at_most", &chromatic_index_at_most, py::arg("g"), py::arg("k"));
    m.def("has_bridge", &has_bridge, py::arg("g"));
    m.def("is_snark", &is_snark, py::arg("g"));
    py::class_<FlowAssignment>(m, "FlowAssignment")
        .def_readonly("values", &FlowAssignment::values)
        .def("forward", &FlowAssignment::forward)
        .def("magnitude", &FlowAssignment::magnitude);
    m.def("nowhere_zero_flow", &nowhere_zero_flow, py::arg("g"), py::arg("k"));
    m.def("verify_flow", &verify_flow, py::arg("g"), py::arg("k"), py::arg("flow"));
    m.def("transfer_pm", &transfer_pm, py::arg("g"), py::arg("s"), py::arg("pm"));

    // iso
    py::class_<IsoWitness>(m, "IsoWitness").def_readonly("map", &IsoWitness::map);
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));

    // mgf
    py::class_<MgfDocument>(m, "MgfDocument")
        .def(py::init<>())
        .def_readwrite("graph", &MgfDocument::graph)
        .def_readwrite("tree", &MgfDocument::tree)
        .def_readwrite("permutation", &MgfDocument::permutation)
        .def_readwrite("script", &MgfDocument::script);
    m.def("read_mgf", &read_mgf, py::arg("text"));
    m.def("write_mgf", &write_mgf, py::arg("doc"));
}
