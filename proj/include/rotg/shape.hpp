#pragma once

#include <optional>
#include <vector>

#include "rotg/multigraph.hpp"
#include "rotg/permutation.hpp"
#include "rotg/tree.hpp"

namespace rotg {

// A tir tree is the unique tree whose vertex degrees all lie in {1, r} and
// whose root is at the same distance `depth` from every leaf. r == 0 in a
// recognition result means the single-vertex tree, which fits every r.
struct TirShape {
    int r = 0;
    int depth = 0;
    VertexId root = 0;
    bool operator==(const TirShape&) const = default;
};

// 1 + sum_{j=0}^{depth-1} r*(r-1)^j; even iff r is odd (for depth >= 1).
long long tir_order(int r, int depth);

/// Canonical tir tree: root 0, children labeled in BFS order, edge k joining
/// vertex k+1 to its parent. Valid for odd r >= 3, or r = 1 with depth <= 1.
MultiGraph build_tir(int r, int depth);

/// Recognizes whether a tree is a tir tree and locates its root (the unique
/// vertex equidistant from all leaves). Throws std::invalid_argument when the
/// input is not a tree.
std::optional<TirShape> recognize_tir(const MultiGraph& tree);

// No vertex of the spanning tree has tree-degree 2.
bool is_hist(const MultiGraph& g, const RootedSpanningTree& tree);

/// Checks the decomposition of a regular graph with a tir spanning tree:
/// every non-tree edge joins two leaves and the leaf-induced subgraph is an
/// even graph. Throws when g is irregular or the tree is not a tir tree.
bool verify_hist_partition(const MultiGraph& g, const RootedSpanningTree& tree);

/// Multiplicity-preserving vertex map test. Throws on non-bijective input.
bool is_automorphism(const MultiGraph& g, const VertexPermutation& p);

/// True iff p fixes the tree root and every other orbit has length equal to
/// the root's tree degree. Throws when p is not an automorphism of the tree.
bool is_rotational(const MultiGraph& g, const RootedSpanningTree& tree, const VertexPermutation& p);

/// Exhaustive backtracking search for an automorphism of g that is rotational
/// on the given tir spanning tree; absence of a witness is a proof at this
/// scale. Throws when the tree is not a tir tree.
std::optional<VertexPermutation> find_rotational_automorphism(const MultiGraph& g,
                                                              const RootedSpanningTree& tree);

}  // namespace rotg
