#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rotg/mgf.hpp"
#include "rotg/multigraph.hpp"

namespace fixtures {

using rotg::EdgeId;
using rotg::MultiGraph;
using rotg::VertexId;

inline MultiGraph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return MultiGraph(n, edges);
}

inline MultiGraph cycle_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return MultiGraph(n, edges);
}

inline MultiGraph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return MultiGraph(n, edges);
}

inline MultiGraph bundle_graph(int multiplicity) {
    std::vector<std::pair<VertexId, VertexId>> edges(static_cast<size_t>(multiplicity), {0, 1});
    return MultiGraph(2, edges);
}

inline MultiGraph petersen_graph() {
    return MultiGraph(10, {{0, 1},
                           {0, 4},
                           {0, 5},
                           {1, 2},
                           {1, 6},
                           {2, 3},
                           {2, 7},
                           {3, 4},
                           {3, 8},
                           {4, 9},
                           {5, 7},
                           {5, 8},
                           {6, 8},
                           {6, 9},
                           {7, 9}});
}

inline MultiGraph bipartite_complete(int a, int b) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return MultiGraph(a + b, edges);
}

// Flower snark J5: centers 0..4 joined to tip 5+i and pair 10+i, 15+i;
// a 5-cycle on the tips and one 10-cycle through the u's then the v's.
inline MultiGraph flower_snark_j5() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, 5 + i);
        edges.emplace_back(i, 10 + i);
        edges.emplace_back(i, 15 + i);
    }
    for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 1) % 5);
    for (int i = 0; i < 4; ++i) edges.emplace_back(10 + i, 10 + i + 1);
    edges.emplace_back(14, 15);
    for (int i = 0; i < 4; ++i) edges.emplace_back(15 + i, 15 + i + 1);
    edges.emplace_back(10, 19);
    return MultiGraph(20, edges);
}

// Two copies of K_4 with one subdivided edge, bridged at the subdivision
// vertices: the standard small bridged cubic graph.
inline MultiGraph bridged_cubic_graph() {
    return MultiGraph(10, {{0, 1},
                           {0, 2},
                           {0, 3},
                           {1, 2},
                           {1, 3},
                           {2, 4},
                           {3, 4},
                           {4, 9},
                           {5, 6},
                           {5, 7},
                           {5, 8},
                           {6, 7},
                           {6, 8},
                           {7, 9},
                           {8, 9}});
}

inline rotg::MgfDocument load_mgf_file(const std::string& name) {
    const std::string path = std::string(ROTG_DATA_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return rotg::read_mgf(buffer.str());
}

// Configuration-model r-regular multigraph: loopless, connected; retries
// until both hold.
inline MultiGraph random_regular_multigraph(std::mt19937& rng, int n, int r) {
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        std::vector<VertexId> stubs;
        stubs.reserve(static_cast<size_t>(n) * r);
        for (VertexId v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        bool loop = false;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                loop = true;
                break;
            }
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        if (loop) continue;
        MultiGraph g(n, edges);
        if (rotg::is_connected(g)) return g;
    }
    throw std::runtime_error("failed to sample a random regular multigraph");
}

// Connected multigraph: a random attachment tree plus random extra copies.
inline MultiGraph random_connected_multigraph(std::mt19937& rng, int n, int extra) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v) {
        std::uniform_int_distribution<VertexId> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    std::uniform_int_distribution<VertexId> any(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        VertexId u = any(rng), v = any(rng);
        while (u == v) v = any(rng);
        edges.emplace_back(u, v);
    }
    return MultiGraph(n, edges);
}

// Dumb independent oracle: scan every odd subset without pruning.
inline int oracle_min_odd_cut(const MultiGraph& g) {
    const int n = g.vertex_count();
    int best = -1;
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
        int size = 0;
        for (int v = 0; v < n; ++v) size += static_cast<int>(mask >> v & 1);
        if (size % 2 == 0) continue;
        int cut = 0;
        for (const auto& e : g.edges()) cut += static_cast<int>((mask >> e.u ^ mask >> e.v) & 1);
        if (best < 0 || cut < best) best = cut;
    }
    return best;
}

// Independent matching count: choose n/2 edges in all ways and test.
inline long long oracle_count_perfect_matchings(const MultiGraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n % 2 != 0) return 0;
    const int want = n / 2;
    long long count = 0;
    std::vector<int> pick;
    std::vector<char> used(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == want) {
            ++count;
            return;
        }
        for (int e = from; e < m; ++e) {
            const auto& ed = g.edge(e);
            if (used[ed.u] || used[ed.v]) continue;
            used[ed.u] = used[ed.v] = 1;
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
            used[ed.u] = used[ed.v] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

// Independent proper-edge-coloring feasibility: plain backtracking without
// any ordering tricks.
inline bool oracle_edge_colorable(const MultiGraph& g, int k) {
    const int m = g.edge_count();
    std::vector<int> color(static_cast<size_t>(m), -1);
    auto conflict = [&](EdgeId e, int c) {
        for (EdgeId f = 0; f < m; ++f) {
            if (f == e || color[f] != c) continue;
            const auto& a = g.edge(e);
            const auto& b = g.edge(f);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, EdgeId e) -> bool {
        if (e == m) return true;
        for (int c = 0; c < k; ++c) {
            if (conflict(e, c)) continue;
            color[e] = c;
            if (self(self, e + 1)) return true;
            color[e] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace fixtures
