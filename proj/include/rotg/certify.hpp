#pragma once

#include <utility>
#include <vector>

#include "rotg/multigraph.hpp"

namespace rotg {

enum class OddCutMethod { Exhaustive, GomoryHu, Auto };

struct OddCutCertificate {
    int value = 0;
    std::vector<VertexId> witness;  // one minimizing odd-cardinality set, sorted
};

/// Minimum |boundary(S)| over all odd-cardinality S, with a witness.
///
/// Exhaustive enumerates every odd subset (the witness is the
/// lexicographically smallest minimizer). GomoryHu builds a cut tree with
/// n-1 max-flow computations and scans the fundamental cuts with odd sides;
/// that needs even n, so odd n falls back to Exhaustive. Auto picks GomoryHu
/// for even n > 22 and Exhaustive otherwise. Requires a connected graph with
/// n >= 1.
OddCutCertificate min_odd_cut(const MultiGraph& g, OddCutMethod method = OddCutMethod::Auto);

/// True iff g is r-regular, connected (or empty), and every odd-cardinality
/// vertex set has at least r boundary edges. Never throws: disconnected or
/// irregular graphs simply return false.
bool is_r_graph(const MultiGraph& g, int r);

/// For odd |s| with |boundary(s)| = r in an r-regular graph, returns the two
/// contractions (contract(g, s), contract(g, complement)). By Rizzi's lemma
/// g is an r-graph iff both halves are.
std::pair<MultiGraph, MultiGraph> rizzi_split(const MultiGraph& g, const std::vector<VertexId>& s);

// Every vertex has even degree (so every component is eulerian).
bool is_even_graph(const MultiGraph& g);

// Gomory-Hu cut tree edge: min cut between a and b has value w, and the
// fundamental cut of this tree edge attains it.
struct GomoryHuEdge {
    VertexId a;
    VertexId b;
    long long w;
};

std::vector<GomoryHuEdge> gomory_hu_tree(const MultiGraph& g);

}  // namespace rotg
