#include "rotg/surgery.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "rotg/errors.hpp"

namespace rotg {

EdgeExpansion edge_expansion(const MultiGraph& g, const RootedSpanningTree& tree, EdgeId e) {
    const int r = g.regularity();
    if (r < 0) throw std::invalid_argument("edge_expansion: graph is not regular");
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge id out of range");
    if (std::binary_search(tree.edges.begin(), tree.edges.end(), e))
        throw std::invalid_argument("edge_expansion: edge belongs to the spanning tree");

    const int n = g.vertex_count();
    const VertexId u = g.edge(e).u, v = g.edge(e).v;
    const VertexId low_copy = n, high_copy = n + 1;

    EdgeExpansion out;
    out.low_copy = low_copy;
    out.high_copy = high_copy;
    out.edge_map.assign(static_cast<size_t>(g.edge_count()), -1);

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) + r + 1);
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        out.edge_map[i] = static_cast<EdgeId>(edges.size());
        edges.emplace_back(g.edge(i).u, g.edge(i).v);
    }
    const EdgeId low_link = static_cast<EdgeId>(edges.size());
    edges.emplace_back(u, low_copy);
    const EdgeId high_link = static_cast<EdgeId>(edges.size());
    edges.emplace_back(v, high_copy);
    for (int i = 0; i < r - 1; ++i) edges.emplace_back(low_copy, high_copy);

    out.graph = MultiGraph(n + 2, edges);
    out.tree.root = tree.root;
    for (EdgeId t : tree.edges) out.tree.edges.push_back(out.edge_map[t]);
    out.tree.edges.push_back(low_link);
    out.tree.edges.push_back(high_link);
    std::sort(out.tree.edges.begin(), out.tree.edges.end());
    return out;
}

LeafExpansion leaf_expansion(const MultiGraph& g, const RootedSpanningTree& tree, VertexId leaf) {
    const auto ts = analyze_tree(g, tree);
    if (leaf < 0 || leaf >= g.vertex_count()) throw std::invalid_argument("leaf id out of range");
    if (ts.tree_degree[leaf] != 1)
        throw std::invalid_argument("leaf_expansion: vertex is not a leaf of the tree");
    const int r = g.degree(leaf);
    if (r % 2 == 0) throw std::invalid_argument("leaf_expansion: leaf degree must be odd");

    const int n = g.vertex_count();
    std::set<EdgeId> tree_set(tree.edges.begin(), tree.edges.end());

    // slots: the tree edge feeds l_1, the rest feed l_2..l_r ascending
    std::vector<EdgeId> slots;
    slots.reserve(static_cast<size_t>(r));
    EdgeId tree_edge = -1;
    for (EdgeId e : g.incident(leaf)) {
        if (tree_set.count(e)) tree_edge = e;
    }
    slots.push_back(tree_edge);
    for (EdgeId e : g.incident(leaf))
        if (e != tree_edge) slots.push_back(e);

    LeafExpansion out;
    out.vertex_map.assign(static_cast<size_t>(n), -1);
    for (VertexId v = 0; v < n; ++v)
        if (v != leaf) out.vertex_map[v] = v < leaf ? v : v - 1;
    out.clique.resize(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) out.clique[j] = (n - 1) + j;

    out.edge_map.assign(static_cast<size_t>(g.edge_count()), -1);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u == leaf || ed.v == leaf) continue;
        out.edge_map[e] = static_cast<EdgeId>(edges.size());
        edges.emplace_back(out.vertex_map[ed.u], out.vertex_map[ed.v]);
    }
    for (int j = 0; j < r; ++j) {
        const EdgeId old = slots[j];
        const VertexId other = g.opposite(old, leaf);
        out.edge_map[old] = static_cast<EdgeId>(edges.size());
        edges.emplace_back(out.vertex_map[other], out.clique[j]);
    }
    std::vector<EdgeId> star;  // tree edges l_1 l_j
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            if (a == 0) star.push_back(static_cast<EdgeId>(edges.size()));
            edges.emplace_back(out.clique[a], out.clique[b]);
        }
    out.graph = MultiGraph(n - 1 + r, edges);

    out.tree.root = (tree.root == leaf) ? out.clique[0] : out.vertex_map[tree.root];
    for (EdgeId t : tree.edges) out.tree.edges.push_back(out.edge_map[t]);
    out.tree.edges.insert(out.tree.edges.end(), star.begin(), star.end());
    std::sort(out.tree.edges.begin(), out.tree.edges.end());

    // no clique vertex may end up with parallel edges
    for (VertexId c : out.clique)
        for (EdgeId e : out.graph.incident(c)) {
            const Edge& ed = out.graph.edge(e);
            if (out.graph.multiplicity(ed.u, ed.v) != 1)
                throw InternalContradictionError("leaf_expansion created a parallel edge at the clique");
        }
    return out;
}

TwoCutReduction two_cut_reduction(const MultiGraph& g, const std::vector<VertexId>& s) {
    std::vector<VertexId> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() % 2 != 0)
        throw std::invalid_argument("two_cut_reduction: |S| must be even");
    const auto cut = boundary(g, sorted);
    if (cut.size() != 2)
        throw std::invalid_argument("two_cut_reduction: |boundary(S)| is " +
                                    std::to_string(cut.size()) + ", expected 2");

    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : sorted) in[v] = 1;
    auto outside_end = [&](EdgeId e) {
        const Edge& ed = g.edge(e);
        return in[ed.u] ? ed.v : ed.u;
    };
    const VertexId a = outside_end(cut[0]);
    const VertexId b = outside_end(cut[1]);
    if (a == b)
        throw InternalContradictionError(
            "two_cut_reduction: the two outside neighbors coincide; the host cannot be an r-graph "
            "with r >= 3");

    TwoCutReduction out;
    out.vertex_map.assign(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) out.vertex_map[v] = next++;

    out.edge_map.assign(static_cast<size_t>(g.edge_count()), -1);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (in[ed.u] || in[ed.v]) continue;
        out.edge_map[e] = static_cast<EdgeId>(edges.size());
        edges.emplace_back(out.vertex_map[ed.u], out.vertex_map[ed.v]);
    }
    out.joining_edge = static_cast<EdgeId>(edges.size());
    edges.emplace_back(out.vertex_map[a], out.vertex_map[b]);
    out.graph = MultiGraph(next, edges);
    return out;
}

std::vector<std::vector<VertexId>> find_two_cuts(const MultiGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("find_two_cuts: graph must be connected");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    std::set<std::vector<VertexId>> found;
    std::vector<int> comp(static_cast<size_t>(n));
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = e + 1; f < m; ++f) {
            std::fill(comp.begin(), comp.end(), -1);
            int comps = 0;
            for (VertexId start = 0; start < n; ++start) {
                if (comp[start] != -1) continue;
                std::deque<VertexId> queue = {start};
                comp[start] = comps;
                while (!queue.empty()) {
                    const VertexId v = queue.front();
                    queue.pop_front();
                    for (EdgeId i : g.incident(v)) {
                        if (i == e || i == f) continue;
                        const VertexId w = g.opposite(i, v);
                        if (comp[w] == -1) {
                            comp[w] = comps;
                            queue.push_back(w);
                        }
                    }
                }
                ++comps;
            }
            if (comps < 2) continue;
            for (int c = 0; c < comps; ++c) {
                // both removed edges must cross this component's border
                const auto crosses = [&](EdgeId i) {
                    return (comp[g.edge(i).u] == c) != (comp[g.edge(i).v] == c);
                };
                if (!crosses(e) || !crosses(f)) continue;
                std::vector<VertexId> side, other;
                for (VertexId v = 0; v < n; ++v)
                    (comp[v] == c ? side : other).push_back(v);
                for (auto* cand : {&side, &other}) {
                    if (cand->size() % 2 != 0 || cand->empty()) continue;
                    if (!cand->empty() && cand->front() == 0 && (cand == &side ? other : side).size() % 2 == 0)
                        continue;  // prefer the complementary side, which avoids vertex 0
                    found.insert(*cand);
                }
            }
        }
    }

    // inclusion-minimal only
    std::vector<std::vector<VertexId>> result;
    for (const auto& s : found) {
        bool minimal = true;
        for (const auto& t : found) {
            if (t.size() >= s.size() || t == s) continue;
            if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) result.push_back(s);
    }
    std::sort(result.begin(), result.end());
    return result;
}

MultiGraph apply_script(const MultiGraph& g, const ReductionScript& script) {
    MultiGraph current = g;
    for (size_t i = 0; i < script.steps.size(); ++i) {
        try {
            current = two_cut_reduction(current, script.steps[i].vertices).graph;
        } catch (const InternalContradictionError& ex) {
            throw InternalContradictionError("script step " + std::to_string(i) + ": " + ex.what());
        } catch (const std::exception& ex) {
            throw std::invalid_argument("script step " + std::to_string(i) + ": " + ex.what());
        }
    }
    return current;
}

}  // namespace rotg
