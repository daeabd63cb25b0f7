#include "rotg/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rotg/errors.hpp"

namespace rotg {

MultiGraph::MultiGraph(int n) : n_(n), incident_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

MultiGraph::MultiGraph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : MultiGraph(n) {
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("edge endpoint " + std::to_string(a < 0 || a >= n_ ? a : b) +
                                        " out of range");
        if (a == b) throw std::invalid_argument("loops are not allowed");
        const EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
        incident_[a].push_back(id);
        incident_[b].push_back(id);
    }
}

void MultiGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

const Edge& MultiGraph::edge(EdgeId e) const {
    if (e < 0 || e >= edge_count())
        throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
    return edges_[e];
}

const std::vector<EdgeId>& MultiGraph::incident(VertexId v) const {
    check_vertex(v);
    return incident_[v];
}

int MultiGraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(incident_[v].size());
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    const VertexId scan = degree(u) <= degree(v) ? u : v;
    int count = 0;
    for (EdgeId e : incident_[scan])
        if ((edges_[e].u == u && edges_[e].v == v) || (edges_[e].u == v && edges_[e].v == u))
            ++count;
    return count;
}

VertexId MultiGraph::opposite(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw std::invalid_argument("vertex is not an endpoint of the edge");
}

bool MultiGraph::is_simple() const {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return false;
    return true;
}

bool MultiGraph::is_regular(int r) const {
    for (VertexId v = 0; v < n_; ++v)
        if (static_cast<int>(incident_[v].size()) != r) return false;
    return true;
}

int MultiGraph::regularity() const {
    if (n_ == 0) return 0;
    const int r = static_cast<int>(incident_[0].size());
    return is_regular(r) ? r : -1;
}

bool edge_multiset_equal(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto key = [](const Edge& e) { return std::pair(e.u, e.v); };
    std::vector<std::pair<int, int>> ea, eb;
    ea.reserve(a.edge_count());
    eb.reserve(b.edge_count());
    for (const Edge& e : a.edges()) ea.push_back(key(e));
    for (const Edge& e : b.edges()) eb.push_back(key(e));
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

namespace {

std::vector<char> membership_mask(const MultiGraph& g, const std::vector<VertexId>& s) {
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    return in;
}

}  // namespace

std::vector<EdgeId> boundary(const MultiGraph& g, const std::vector<VertexId>& s) {
    const auto in = membership_mask(g, s);
    std::vector<EdgeId> result;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in[g.edge(e).u] != in[g.edge(e).v]) result.push_back(e);
    return result;
}

std::vector<VertexId> neighbors(const MultiGraph& g, const std::vector<VertexId>& s) {
    const auto in = membership_mask(g, s);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<VertexId> result;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (in[ed.u] == in[ed.v]) continue;
        const VertexId outside = in[ed.u] ? ed.v : ed.u;
        if (!seen[outside]) {
            seen[outside] = 1;
            result.push_back(outside);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool is_connected(const MultiGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<VertexId> stack = {0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(v)) {
            const VertexId w = g.opposite(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

MultiGraph contract(const MultiGraph& g, const std::vector<VertexId>& s) {
    if (s.empty()) throw std::invalid_argument("contraction set must be non-empty");
    const auto in = membership_mask(g, s);
    const int n = g.vertex_count();
    std::vector<VertexId> map(static_cast<size_t>(n), -1);
    int next = 0;
    for (VertexId v = 0; v < n; ++v)
        if (!in[v]) map[v] = next++;
    const VertexId merged = next;
    for (VertexId v = 0; v < n; ++v)
        if (in[v]) map[v] = merged;

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : g.edges()) {
        if (in[e.u] && in[e.v]) continue;  // becomes a loop, removed
        edges.emplace_back(map[e.u], map[e.v]);
    }
    return MultiGraph(merged + 1, edges);
}

}  // namespace rotg
