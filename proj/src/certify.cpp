#include "rotg/certify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "rotg/errors.hpp"

namespace rotg {

namespace {

// Edmonds-Karp on an undirected capacity graph. Arcs come in (i, i^1) pairs.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(static_cast<size_t>(n), -1) {}

    void add_undirected(int u, int v, long long cap) {
        add_arc(u, v, cap);
        add_arc(v, u, cap);
    }

    // Returns the max-flow value; `side` is the source side of a minimum cut
    // (residual reachability from s).
    long long solve(int s, int t, std::vector<char>& side) {
        long long total = 0;
        const int n = static_cast<int>(head_.size());
        std::vector<int> via(static_cast<size_t>(n));
        while (true) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue = {s};
            via[s] = -2;
            while (!queue.empty() && via[t] == -1) {
                const int v = queue.front();
                queue.pop_front();
                for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                    const int w = arcs_[a].to;
                    if (via[w] == -1 && residual(a) > 0) {
                        via[w] = a;
                        queue.push_back(w);
                    }
                }
            }
            if (via[t] == -1) break;
            long long push = std::numeric_limits<long long>::max();
            for (int a = via[t]; a != -2; a = via[arc_from(a)]) push = std::min(push, residual(a));
            for (int a = via[t]; a != -2; a = via[arc_from(a)]) arcs_[a].flow += push, arcs_[a ^ 1].flow -= push;
            total += push;
        }
        side.assign(head_.size(), 0);
        std::deque<int> queue = {s};
        side[s] = 1;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int a = head_[v]; a != -1; a = arcs_[a].next)
                if (!side[arcs_[a].to] && residual(a) > 0) {
                    side[arcs_[a].to] = 1;
                    queue.push_back(arcs_[a].to);
                }
        }
        return total;
    }

private:
    struct Arc {
        int to;
        int next;
        long long cap;
        long long flow = 0;
    };

    void add_arc(int u, int v, long long cap) {
        arcs_.push_back(Arc{v, head_[u], cap});
        head_[u] = static_cast<int>(arcs_.size()) - 1;
    }

    long long residual(int a) const { return arcs_[a].cap - arcs_[a].flow; }
    int arc_from(int a) const { return arcs_[a ^ 1].to; }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

OddCutCertificate min_odd_cut_exhaustive(const MultiGraph& g) {
    const int n = g.vertex_count();
    if (n > 26)
        throw ResourceLimitError("exhaustive min_odd_cut supports at most 26 vertices; use GomoryHu");
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> ends(static_cast<size_t>(m));
    for (EdgeId e = 0; e < m; ++e) ends[e] = {g.edge(e).u, g.edge(e).v};

    // For even n a minimizing odd set containing vertex 0 always exists (the
    // complement of an odd set is odd), and any set containing 0 is
    // lexicographically smaller than any set avoiding it, so the scan can fix
    // vertex 0. For odd n all odd subsets are scanned.
    const bool fix_zero = (n % 2 == 0);
    const int free_bits = fix_zero ? n - 1 : n;
    const std::uint64_t limit = std::uint64_t{1} << free_bits;

    int best = std::numeric_limits<int>::max();
    std::vector<VertexId> best_set;
    auto set_of = [&](std::uint64_t mask) {
        std::vector<VertexId> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        return s;
    };

    for (std::uint64_t free = 0; free < limit; ++free) {
        const std::uint64_t mask = fix_zero ? (free << 1 | 1) : free;
        if (std::popcount(mask) % 2 == 0) continue;
        int cut = 0;
        for (const auto& [u, v] : ends) {
            cut += static_cast<int>((mask >> u ^ mask >> v) & 1);
            if (cut > best) break;
        }
        if (cut > best) continue;
        auto s = set_of(mask);
        if (cut < best || std::lexicographical_compare(s.begin(), s.end(), best_set.begin(), best_set.end())) {
            best = cut;
            best_set = std::move(s);
        }
    }
    return OddCutCertificate{best, std::move(best_set)};
}

OddCutCertificate min_odd_cut_gomory_hu(const MultiGraph& g) {
    const int n = g.vertex_count();
    auto edges = gomory_hu_tree(g);
    std::sort(edges.begin(), edges.end(), [](const GomoryHuEdge& x, const GomoryHuEdge& y) {
        return std::pair(std::min(x.a, x.b), std::max(x.a, x.b)) <
               std::pair(std::min(y.a, y.b), std::max(y.a, y.b));
    });

    std::vector<std::vector<std::pair<VertexId, size_t>>> adj(static_cast<size_t>(n));
    for (size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].a].emplace_back(edges[i].b, i);
        adj[edges[i].b].emplace_back(edges[i].a, i);
    }

    OddCutCertificate best;
    best.value = std::numeric_limits<int>::max();
    for (size_t cut = 0; cut < edges.size(); ++cut) {
        // side of edges[cut].a when the tree edge is removed
        std::vector<char> side(static_cast<size_t>(n), 0);
        std::deque<VertexId> queue = {edges[cut].a};
        side[edges[cut].a] = 1;
        int count = 1;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (const auto& [w, i] : adj[v])
                if (i != cut && !side[w]) {
                    side[w] = 1;
                    ++count;
                    queue.push_back(w);
                }
        }
        if (count % 2 == 0) continue;
        const int value = static_cast<int>(edges[cut].w);
        if (value >= best.value) continue;
        best.value = value;
        best.witness.clear();
        const char keep = side[0] ? 0 : 1;  // report the side avoiding vertex 0
        for (VertexId v = 0; v < n; ++v)
            if (side[v] == keep) best.witness.push_back(v);
    }
    return best;
}

}  // namespace

std::vector<GomoryHuEdge> gomory_hu_tree(const MultiGraph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("gomory_hu_tree needs n >= 1");
    if (!is_connected(g)) throw std::invalid_argument("gomory_hu_tree needs a connected graph");

    // Aggregate parallel edges into capacities once.
    std::map<std::pair<int, int>, long long> caps;
    for (const Edge& e : g.edges()) caps[{e.u, e.v}] += 1;

    // Tree over supernodes; each node holds a sorted member list.
    struct Node {
        std::vector<VertexId> members;
        std::vector<std::pair<int, long long>> nbrs;  // (node index, weight)
    };
    std::vector<Node> nodes(1);
    nodes[0].members.resize(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v) nodes[0].members[v] = v;
    std::vector<int> node_of(static_cast<size_t>(n), 0);

    int pending = (n >= 2) ? 1 : 0;
    while (pending > 0) {
        int x = 0;
        while (nodes[x].members.size() < 2) ++x;
        const VertexId s = nodes[x].members[0];
        const VertexId t = nodes[x].members[1];

        // Components of the tree with node x removed.
        std::vector<int> comp(nodes.size(), -1);
        int comps = 0;
        for (size_t start = 0; start < nodes.size(); ++start) {
            if (static_cast<int>(start) == x || comp[start] != -1) continue;
            std::deque<int> queue = {static_cast<int>(start)};
            comp[start] = comps;
            while (!queue.empty()) {
                const int v = queue.front();
                queue.pop_front();
                for (const auto& [w, wt] : nodes[v].nbrs)
                    if (w != x && comp[w] == -1) {
                        comp[w] = comps;
                        queue.push_back(w);
                    }
            }
            ++comps;
        }

        // Contracted graph: members of x stay individual, each tree component
        // collapses to one vertex.
        std::vector<int> flow_id(static_cast<size_t>(n), -1);
        int next = 0;
        for (VertexId v : nodes[x].members) flow_id[v] = next++;
        const int comp_base = next;
        for (VertexId v = 0; v < n; ++v)
            if (flow_id[v] == -1) flow_id[v] = comp_base + comp[node_of[v]];

        std::map<std::pair<int, int>, long long> merged;
        for (const auto& [pair, cap] : caps) {
            const int a = flow_id[pair.first];
            const int b = flow_id[pair.second];
            if (a == b) continue;
            merged[{std::min(a, b), std::max(a, b)}] += cap;
        }
        MaxFlow mf(comp_base + comps);
        for (const auto& [pair, cap] : merged) mf.add_undirected(pair.first, pair.second, cap);
        std::vector<char> side;
        const long long f = mf.solve(flow_id[s], flow_id[t], side);

        // Split x along the cut.
        Node a, b;
        for (VertexId v : nodes[x].members)
            (side[flow_id[v]] ? a : b).members.push_back(v);
        const int bi = static_cast<int>(nodes.size());
        for (const auto& [w, wt] : nodes[x].nbrs) {
            const int target = side[comp_base + comp[w]] ? x : bi;
            if (target == bi) {
                b.nbrs.emplace_back(w, wt);
                for (auto& back : nodes[w].nbrs)
                    if (back.first == x) back.first = bi;
            } else {
                a.nbrs.emplace_back(w, wt);
            }
        }
        a.nbrs.emplace_back(bi, f);
        b.nbrs.emplace_back(x, f);
        for (VertexId v : b.members) node_of[v] = bi;
        nodes[x] = std::move(a);
        nodes.push_back(std::move(b));

        pending = 0;
        for (const Node& node : nodes)
            if (node.members.size() >= 2) pending = 1;
    }

    std::vector<GomoryHuEdge> result;
    for (size_t i = 0; i < nodes.size(); ++i)
        for (const auto& [w, wt] : nodes[i].nbrs)
            if (static_cast<size_t>(w) > i)
                result.push_back(GomoryHuEdge{nodes[i].members[0], nodes[w].members[0], wt});
    return result;
}

OddCutCertificate min_odd_cut(const MultiGraph& g, OddCutMethod method) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("min_odd_cut needs n >= 1");
    if (!is_connected(g)) throw std::invalid_argument("min_odd_cut needs a connected graph");

    switch (method) {
        case OddCutMethod::Exhaustive:
            return min_odd_cut_exhaustive(g);
        case OddCutMethod::GomoryHu:
            // The fundamental-cut argument needs an odd side to exist on both
            // ends of a tree edge, hence even n.
            return n % 2 == 0 ? min_odd_cut_gomory_hu(g) : min_odd_cut_exhaustive(g);
        case OddCutMethod::Auto:
            return (n % 2 == 0 && n > 22) ? min_odd_cut_gomory_hu(g) : min_odd_cut_exhaustive(g);
    }
    throw std::invalid_argument("unknown method");
}

bool is_r_graph(const MultiGraph& g, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (!g.is_regular(r)) return false;
    if (g.vertex_count() == 0) return true;
    if (!is_connected(g)) return false;  // an odd component would have cut 0
    return min_odd_cut(g).value >= r;
}

std::pair<MultiGraph, MultiGraph> rizzi_split(const MultiGraph& g, const std::vector<VertexId>& s) {
    const int r = g.regularity();
    if (r < 0) throw std::invalid_argument("rizzi_split: graph is not regular");
    std::vector<VertexId> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() % 2 != 1) throw std::invalid_argument("rizzi_split: |S| must be odd");
    const auto cut = boundary(g, sorted);
    if (static_cast<int>(cut.size()) != r)
        throw std::invalid_argument("rizzi_split: |boundary(S)| is " + std::to_string(cut.size()) +
                                    ", expected r = " + std::to_string(r));
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : sorted) in[v] = 1;
    std::vector<VertexId> complement;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) complement.push_back(v);
    if (complement.empty()) throw std::invalid_argument("rizzi_split: S must be a proper subset");
    return {contract(g, sorted), contract(g, complement)};
}

bool is_even_graph(const MultiGraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

}  // namespace rotg
