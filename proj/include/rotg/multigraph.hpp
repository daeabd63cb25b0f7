#pragma once

#include <utility>
#include <vector>

namespace rotg {

using VertexId = int;
using EdgeId = int;

// Endpoints are stored normalized with u < v.
struct Edge {
    VertexId u;
    VertexId v;
    bool operator==(const Edge&) const = default;
};

/// Loopless undirected multigraph. Parallel edges are distinct objects,
/// addressable by EdgeId (the index in construction order). Immutable after
/// construction; all operations below are pure functions returning new
/// values, so instances can be shared freely across threads.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n);
    MultiGraph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const;
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Edge ids incident to v, ascending. Parallel copies appear individually.
    const std::vector<EdgeId>& incident(VertexId v) const;

    int degree(VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    VertexId opposite(EdgeId e, VertexId v) const;

    bool is_simple() const;
    bool is_regular(int r) const;
    // -1 when not regular, else the common degree.
    int regularity() const;

    // Exact equality: same n and the same edge sequence (EdgeId-sensitive).
    bool operator==(const MultiGraph&) const = default;

private:
    void check_vertex(VertexId v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

// Same vertex count and same multiset of endpoint pairs (EdgeId-insensitive).
bool edge_multiset_equal(const MultiGraph& a, const MultiGraph& b);

// All edge copies with exactly one endpoint in s, ascending EdgeId.
std::vector<EdgeId> boundary(const MultiGraph& g, const std::vector<VertexId>& s);

// Sorted set of outside endpoints of boundary(g, s).
std::vector<VertexId> neighbors(const MultiGraph& g, const std::vector<VertexId>& s);

// n = 0 counts as connected.
bool is_connected(const MultiGraph& g);

/// Contracts s to a single vertex and removes the resulting loops. Surviving
/// vertices are relabeled densely in ascending original order; the contracted
/// vertex receives the highest id. Surviving edges keep their relative order.
MultiGraph contract(const MultiGraph& g, const std::vector<VertexId>& s);

}  // namespace rotg
