#pragma once

#include <vector>

#include "rotg/multigraph.hpp"
#include "rotg/tree.hpp"

namespace rotg {

// One 2-cut reduction: the even-cardinality set to remove, in the labeling of
// the graph the step is applied to.
struct ReductionStep {
    std::vector<VertexId> vertices;  // sorted
    bool operator==(const ReductionStep&) const = default;
};

struct ReductionScript {
    std::vector<ReductionStep> steps;
    bool operator==(const ReductionScript&) const = default;
};

struct EdgeExpansion {
    MultiGraph graph;
    RootedSpanningTree tree;
    VertexId low_copy = -1;   // new vertex attached to the lower-id endpoint
    VertexId high_copy = -1;  // new vertex attached to the higher-id endpoint
    // old EdgeId -> new EdgeId; -1 for the expanded edge
    std::vector<EdgeId> edge_map;
};

/// Replaces the non-tree edge e = uv by the gadget u', v' with r-1 parallel
/// edges between them plus uu' and vv'; the tree gains uu' and vv'. Vertex
/// ids are unchanged, u' = n, v' = n+1. Requires a regular graph.
EdgeExpansion edge_expansion(const MultiGraph& g, const RootedSpanningTree& tree, EdgeId e);

struct LeafExpansion {
    MultiGraph graph;
    RootedSpanningTree tree;
    std::vector<VertexId> clique;      // l_1..l_r; clique[0] carries the tree edge
    std::vector<VertexId> vertex_map;  // old -> new, -1 for the removed leaf
    // old -> new; edges formerly at the leaf map to their redirected copies
    std::vector<EdgeId> edge_map;
};

/// Removes the tree leaf l (which must have odd degree r) and substitutes a
/// copy of K_r, redirecting each of l's edge copies to a distinct clique
/// vertex: the tree edge goes to l_1, the rest in ascending EdgeId order to
/// l_2..l_r. The tree gains the star of l_1 inside the clique.
LeafExpansion leaf_expansion(const MultiGraph& g, const RootedSpanningTree& tree, VertexId leaf);

struct TwoCutReduction {
    MultiGraph graph;
    std::vector<VertexId> vertex_map;  // old -> new, -1 for removed vertices
    std::vector<EdgeId> edge_map;      // old -> new, -1 for removed edges
    EdgeId joining_edge = -1;          // the added uv edge (last id)
};

/// Deletes the even-cardinality set s with |boundary(s)| = 2 and joins the
/// two outside neighbors by a new edge. Throws InternalContradictionError
/// when the two outside neighbors coincide (the host was not an r-graph with
/// r >= 3).
TwoCutReduction two_cut_reduction(const MultiGraph& g, const std::vector<VertexId>& s);

/// All inclusion-minimal even-cardinality sets with a 2-edge boundary, found
/// by removing each edge pair and inspecting components; of each
/// complementary pair the side avoiding vertex 0 is reported. Sorted
/// lexicographically.
std::vector<std::vector<VertexId>> find_two_cuts(const MultiGraph& g);

/// Folds two_cut_reduction over the steps; errors are rethrown with the step
/// index prepended.
MultiGraph apply_script(const MultiGraph& g, const ReductionScript& script);

}  // namespace rotg
