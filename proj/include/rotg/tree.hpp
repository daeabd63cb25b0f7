#pragma once

#include <vector>

#include "rotg/multigraph.hpp"

namespace rotg {

// A spanning tree of a host graph, as a root plus the ascending list of the
// host EdgeIds that belong to the tree. The host is passed alongside.
struct RootedSpanningTree {
    VertexId root = 0;
    std::vector<EdgeId> edges;
    bool operator==(const RootedSpanningTree&) const = default;
};

struct TreeStructure {
    VertexId root = 0;
    std::vector<VertexId> parent;       // -1 at the root
    std::vector<EdgeId> parent_edge;    // -1 at the root
    std::vector<int> depth;
    std::vector<int> tree_degree;
    std::vector<std::vector<VertexId>> children;  // in BFS discovery order
    std::vector<VertexId> bfs_order;
    int height = 0;
};

// Validates that tree.edges span the host and returns parent/depth/degree
// data. Throws std::invalid_argument when the edges are not a spanning tree.
TreeStructure analyze_tree(const MultiGraph& g, const RootedSpanningTree& tree);

/// Deterministic BFS spanning tree from `root`, scanning incident edges in
/// ascending EdgeId order. Throws NoSpanningTreeError when g is disconnected.
RootedSpanningTree spanning_tree(const MultiGraph& g, VertexId root);

// The tree as a standalone graph on the host's vertex set; edge k of the
// result is tree.edges[k].
MultiGraph tree_as_graph(const MultiGraph& g, const RootedSpanningTree& tree);

// Spanning tree covering every edge of a graph that is itself a tree.
RootedSpanningTree whole_graph_tree(const MultiGraph& g, VertexId root = 0);

}  // namespace rotg
