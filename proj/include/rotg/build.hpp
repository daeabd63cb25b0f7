#pragma once

#include <vector>

#include "rotg/multigraph.hpp"
#include "rotg/permutation.hpp"
#include "rotg/surgery.hpp"
#include "rotg/tree.hpp"

namespace rotg {

// An r-regular graph together with a spanning tir tree.
struct HistGraph {
    MultiGraph graph;
    RootedSpanningTree tree;
    int r = 0;
    int depth = 0;
};

// A hist graph whose tree admits a rotational automorphism.
struct RotationGraph {
    HistGraph base;
    VertexPermutation rotation;
};

// Layout bookkeeping of an assembled graph: hub tree first, then the blocks
// of the hist copies (each minus its root), then the blocks of the rotation
// copies. The connection lists are in assembled-graph labels.
struct AssemblyPlan {
    int r = 0;
    int depth = 0;        // depth of the copied graphs
    int hub_size = 0;     // order of the hub tir tree of depth 2
    int h_copy_size = 0;  // vertices per hist block (order of H minus 1)
    int r_copy_size = 0;  // vertices per rotation block
    int h_copies = 0;     // r
    int r_copies = 0;     // (r-1)^2 - r
    std::vector<std::vector<VertexId>> n_lists;  // r lists of (r-1)^2 root-neighbors
    std::vector<std::vector<VertexId>> l_lists;  // r lists of r-1 hub leaves
    std::vector<EdgeId> new_edges;               // the added connection edges
};

struct HistExpansion {
    HistGraph hist;
    ReductionScript to_input;  // recovers the input graph from hist.graph
};

/// Step one of the pipeline: expand every non-tree edge of the deterministic
/// BFS spanning tree rooted at vertex 0, then leaf-expand until every leaf is
/// at uniform depth. The result is a simple r-graph whose tree is a tir tree
/// rooted at vertex 0, plus the reduction script back to the input.
HistExpansion expand_to_hist(const MultiGraph& g, int r);

/// A simple rotation r-graph with a tir tree of the requested depth, grown
/// from the complete graph on r+1 vertices by whole-orbit leaf-expansions so
/// the rotation lifts level by level.
RotationGraph base_rotation_graph(int r, int depth);

struct Assembly {
    RotationGraph rotation;
    ReductionScript to_hist;  // single step: everything except copy 1 and its hub leaf
    AssemblyPlan plan;
};

/// Step two: r copies of the hist graph and (r-1)^2 - r copies of the base
/// rotation graph, roots deleted, wired to the leaves of a depth-2 hub tree.
/// Both inputs must be simple, r-regular, and of equal depth. The output is a
/// simple rotation r-graph; one 2-cut reduction recovers copy 1 of the hist
/// graph (with its hub leaf playing the deleted root).
Assembly assemble(const HistGraph& h, const RotationGraph& r_graph);

struct Construction {
    RotationGraph rotation;
    ReductionScript to_input;  // full script back to the original graph
    AssemblyPlan plan;
    HistGraph hist;
    RotationGraph base;
};

/// The whole pipeline: expand_to_hist, base_rotation_graph of matching depth,
/// assemble, and the concatenated reduction script back to the input.
Construction construct_rotation_graph(const MultiGraph& g, int r);

/// The quotient that contracts every copy block to a single vertex and keeps
/// the hub: an r-regular bipartite graph. Throws when the plan does not match
/// the graph.
MultiGraph bipartite_contraction(const MultiGraph& assembled, const AssemblyPlan& plan);

}  // namespace rotg
