#include "rotg/conjecture.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

#include "rotg/errors.hpp"
#include "rotg/surgery.hpp"
#include "rotg/tree.hpp"

namespace rotg {

bool is_perfect_matching(const MultiGraph& g, const PerfectMatching& pm) {
    std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
    for (EdgeId e : pm.edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        const Edge& ed = g.edge(e);
        if (covered[ed.u] || covered[ed.v]) return false;
        covered[ed.u] = covered[ed.v] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const MultiGraph& g,
                                                         std::optional<long long> limit) {
    const int n = g.vertex_count();
    std::vector<PerfectMatching> result;
    if (n % 2 != 0) return result;
    if (n == 0) {
        result.push_back(PerfectMatching{});
        return result;
    }

    std::vector<char> covered(static_cast<size_t>(n), 0);
    std::vector<EdgeId> chosen;
    std::function<bool()> extend = [&]() {
        VertexId v = -1;
        for (VertexId u = 0; u < n; ++u)
            if (!covered[u]) {
                v = u;
                break;
            }
        if (v < 0) {
            result.push_back(PerfectMatching{chosen});
            return !(limit && static_cast<long long>(result.size()) >= *limit);
        }
        for (EdgeId e : g.incident(v)) {
            const VertexId w = g.opposite(e, v);
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            chosen.push_back(e);
            const bool keep_going = extend();
            chosen.pop_back();
            covered[v] = covered[w] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    extend();
    return result;
}

std::optional<std::vector<PerfectMatching>> find_pm_cover(const MultiGraph& g, int count,
                                                          CoverRule rule, int k) {
    if (count <= 0) throw std::invalid_argument("cover size must be positive");
    if (rule == CoverRule::AtMostK && k < 1)
        throw std::invalid_argument("AtMostK needs a positive k");
    if (g.vertex_count() > 30)
        throw ResourceLimitError("matching covers are limited to 30 vertices");

    const auto matchings = enumerate_perfect_matchings(g, 1'000'001);
    if (matchings.size() > 1'000'000)
        throw ResourceLimitError("matching covers are limited to 1e6 perfect matchings");

    const int m = g.edge_count();
    const int cap = rule == CoverRule::ExactlyTwo ? 2 : (rule == CoverRule::AtMostK ? k : count);
    std::vector<std::vector<int>> containing(static_cast<size_t>(m));
    for (size_t i = 0; i < matchings.size(); ++i)
        for (EdgeId e : matchings[i].edges) containing[e].push_back(static_cast<int>(i));

    std::vector<int> coverage(static_cast<size_t>(m), 0);
    std::vector<int> picks;

    auto deficient_edge = [&]() -> EdgeId {
        for (EdgeId e = 0; e < m; ++e) {
            if (rule == CoverRule::ExactlyTwo && coverage[e] < 2) return e;
            if (rule == CoverRule::AtLeastOne && coverage[e] < 1) return e;
        }
        return -1;
    };

    std::function<bool(int)> search = [&](int remaining) -> bool {
        const EdgeId need = deficient_edge();
        if (need < 0) {
            if (remaining == 0) return true;
            if (rule == CoverRule::ExactlyTwo) {
                // only an edgeless matching can pad without breaking exactness
                for (size_t i = 0; i < matchings.size(); ++i)
                    if (matchings[i].edges.empty()) {
                        picks.insert(picks.end(), static_cast<size_t>(remaining), static_cast<int>(i));
                        return true;
                    }
                return false;
            }
            if (matchings.empty()) return false;
            picks.insert(picks.end(), static_cast<size_t>(remaining), 0);
            return true;
        }
        if (remaining == 0) return false;

        // lower bound on picks still needed to repair all deficits
        if (g.vertex_count() > 0) {
            long long deficit = 0;
            for (EdgeId e = 0; e < m; ++e) {
                if (rule == CoverRule::ExactlyTwo) deficit += std::max(0, 2 - coverage[e]);
                if (rule == CoverRule::AtLeastOne) deficit += coverage[e] < 1 ? 1 : 0;
            }
            const long long per_pick = g.vertex_count() / 2;
            if (deficit > per_pick * remaining) return false;
        }

        for (int i : containing[need]) {
            bool feasible = true;
            for (EdgeId e : matchings[i].edges)
                if (coverage[e] + 1 > cap) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;
            for (EdgeId e : matchings[i].edges) ++coverage[e];
            picks.push_back(i);
            if (search(remaining - 1)) return true;
            picks.pop_back();
            for (EdgeId e : matchings[i].edges) --coverage[e];
        }
        return false;
    };

    // AtMostK has no deficits, only the cap; handle count picks directly.
    if (rule == CoverRule::AtMostK) {
        std::function<bool(int, int)> pick_at_most = [&](int remaining, int from) -> bool {
            if (remaining == 0) return true;
            for (size_t i = static_cast<size_t>(from); i < matchings.size(); ++i) {
                bool feasible = true;
                for (EdgeId e : matchings[i].edges)
                    if (coverage[e] + 1 > cap) {
                        feasible = false;
                        break;
                    }
                if (!feasible) continue;
                for (EdgeId e : matchings[i].edges) ++coverage[e];
                picks.push_back(static_cast<int>(i));
                if (pick_at_most(remaining - 1, static_cast<int>(i))) return true;
                picks.pop_back();
                for (EdgeId e : matchings[i].edges) --coverage[e];
            }
            return false;
        };
        if (!pick_at_most(count, 0)) return std::nullopt;
    } else {
        if (!search(count)) return std::nullopt;
    }

    std::vector<PerfectMatching> witness;
    witness.reserve(picks.size());
    for (int i : picks) witness.push_back(matchings[i]);
    return witness;
}

std::optional<std::vector<int>> chromatic_index_at_most(const MultiGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("color count must be non-negative");
    const int m = g.edge_count();
    if (m == 0) return std::vector<int>{};

    // conflicts: earlier edges sharing an endpoint
    std::vector<std::vector<EdgeId>> conflicts(static_cast<size_t>(m));
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = 0; f < e; ++f) {
            const Edge& a = g.edge(e);
            const Edge& b = g.edge(f);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) conflicts[e].push_back(f);
        }

    std::vector<int> color(static_cast<size_t>(m), -1);
    std::function<bool(EdgeId, int)> assign = [&](EdgeId e, int used) -> bool {
        if (e == m) return true;
        const int limit = std::min(k, used + 1);  // new colors enter in order
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (EdgeId f : conflicts[e])
                if (color[f] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[e] = c;
            if (assign(e + 1, std::max(used, c + 1))) return true;
            color[e] = -1;
        }
        return false;
    };
    if (!assign(0, 0)) return std::nullopt;
    return color;
}

bool has_bridge(const MultiGraph& g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (g.multiplicity(ed.u, ed.v) > 1) continue;  // a parallel copy survives
        // connectivity of ed.u's component without e
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        std::deque<VertexId> queue = {ed.u};
        seen[ed.u] = 1;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (EdgeId i : g.incident(v)) {
                if (i == e) continue;
                const VertexId w = g.opposite(i, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        if (!seen[ed.v]) return true;
    }
    return false;
}

bool is_snark(const MultiGraph& g) {
    if (g.vertex_count() == 0 || !g.is_regular(3)) return false;
    if (has_bridge(g)) return false;
    return !chromatic_index_at_most(g, 3).has_value();
}

namespace {

// BFS forest over all components, smallest-id roots, ascending edge scan.
std::vector<EdgeId> bfs_forest(const MultiGraph& g, std::vector<VertexId>& parent,
                               std::vector<EdgeId>& parent_edge, std::vector<int>& order) {
    const int n = g.vertex_count();
    parent.assign(static_cast<size_t>(n), -1);
    parent_edge.assign(static_cast<size_t>(n), -1);
    order.clear();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<EdgeId> tree;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::deque<VertexId> queue = {root};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (EdgeId e : g.incident(v)) {
                const VertexId w = g.opposite(e, v);
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                parent_edge[w] = e;
                tree.push_back(e);
                queue.push_back(w);
            }
        }
    }
    return tree;
}

}  // namespace

std::optional<FlowAssignment> nowhere_zero_flow(const MultiGraph& g, int k) {
    if (k < 2) throw std::invalid_argument("flow order must be at least 2");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0) return FlowAssignment{};
    if (has_bridge(g)) return std::nullopt;

    std::vector<VertexId> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<int> order;
    bfs_forest(g, parent, parent_edge, order);

    std::vector<char> in_tree(static_cast<size_t>(m), 0);
    for (VertexId v = 0; v < n; ++v)
        if (parent_edge[v] >= 0) in_tree[parent_edge[v]] = 1;
    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < m; ++e)
        if (!in_tree[e]) free_edges.push_back(e);

    // subtree intervals for O(1) membership tests
    std::vector<int> tin(static_cast<size_t>(n)), tout(static_cast<size_t>(n));
    {
        std::vector<std::vector<VertexId>> children(static_cast<size_t>(n));
        for (VertexId v = 0; v < n; ++v)
            if (parent[v] >= 0) children[parent[v]].push_back(v);
        int clock = 0;
        // order is BFS; a manual DFS assigns consistent intervals
        std::vector<char> done(static_cast<size_t>(n), 0);
        for (VertexId root = 0; root < n; ++root) {
            if (parent[root] >= 0 || done[root]) continue;
            std::vector<std::pair<VertexId, size_t>> stack = {{root, 0}};
            tin[root] = clock++;
            done[root] = 1;
            while (!stack.empty()) {
                auto& [v, idx] = stack.back();
                if (idx < children[v].size()) {
                    const VertexId c = children[v][idx++];
                    tin[c] = clock++;
                    done[c] = 1;
                    stack.emplace_back(c, 0);
                } else {
                    tout[v] = clock;
                    stack.pop_back();
                }
            }
        }
    }
    auto in_subtree = [&](VertexId x, VertexId top) { return tin[top] <= tin[x] && tin[x] < tout[top]; };

    // Each tree edge (v, parent(v)) balances its fundamental cut: the signed
    // sum of the free edges crossing subtree(v), plus the tree edge itself.
    struct Cut {
        EdgeId tree_edge;
        int tree_sign;  // +1 when the reference direction points out of the subtree
        int pending = 0;
        long long sum = 0;
    };
    std::vector<Cut> cuts;
    std::vector<std::vector<std::pair<int, int>>> touches(free_edges.size());  // (cut, sign)
    for (VertexId v = 0; v < n; ++v) {
        if (parent_edge[v] < 0) continue;
        Cut cut;
        cut.tree_edge = parent_edge[v];
        const Edge& te = g.edge(cut.tree_edge);
        cut.tree_sign = in_subtree(te.u, v) ? +1 : -1;  // reference u -> v direction
        for (size_t i = 0; i < free_edges.size(); ++i) {
            const Edge& fe = g.edge(free_edges[i]);
            const bool u_in = in_subtree(fe.u, v);
            const bool v_in = in_subtree(fe.v, v);
            if (u_in == v_in) continue;
            touches[i].emplace_back(static_cast<int>(cuts.size()), u_in ? +1 : -1);
            cut.pending += 1;
        }
        if (cut.pending == 0) return std::nullopt;  // bridge (already screened, kept for safety)
        cuts.push_back(cut);
    }

    std::vector<int> free_value(free_edges.size(), 0);
    std::vector<int> tree_value(static_cast<size_t>(m), 0);

    std::function<bool(size_t)> choose = [&](size_t idx) -> bool {
        if (idx == free_edges.size()) return true;
        for (int mag = 1; mag < k; ++mag)
            for (int value : {mag, -mag}) {
                for (const auto& [ci, sign] : touches[idx]) {
                    cuts[ci].sum += static_cast<long long>(sign) * value;
                    cuts[ci].pending -= 1;
                }
                bool ok = true;
                for (const auto& [ci, sign] : touches[idx]) {
                    const Cut& cut = cuts[ci];
                    if (cut.pending == 0) {
                        const long long x = -cut.sum * cut.tree_sign;  // tree_sign*x + sum = 0
                        if (x == 0 || x > k - 1 || x < -(k - 1)) {
                            ok = false;
                            break;
                        }
                        tree_value[cut.tree_edge] = static_cast<int>(x);
                    } else if (std::abs(cut.sum) > static_cast<long long>(k - 1) * (cut.pending + 1)) {
                        ok = false;  // balance is out of reach
                        break;
                    }
                }
                if (ok) {
                    free_value[idx] = value;
                    if (choose(idx + 1)) return true;
                    free_value[idx] = 0;
                }
                for (const auto& [ci, sign] : touches[idx]) {
                    cuts[ci].sum -= static_cast<long long>(sign) * value;
                    cuts[ci].pending += 1;
                }
            }
        return false;
    };

    if (!choose(0)) return std::nullopt;

    FlowAssignment flow;
    flow.values.assign(static_cast<size_t>(m), 0);
    for (size_t i = 0; i < free_edges.size(); ++i) flow.values[free_edges[i]] = free_value[i];
    for (const Cut& cut : cuts) flow.values[cut.tree_edge] = tree_value[cut.tree_edge];
    if (!verify_flow(g, k, flow))
        throw InternalContradictionError("flow search produced an invalid assignment");
    return flow;
}

bool verify_flow(const MultiGraph& g, int k, const FlowAssignment& flow) {
    if (static_cast<int>(flow.values.size()) != g.edge_count()) return false;
    for (int v : flow.values)
        if (v == 0 || v >= k || v <= -k) return false;
    std::vector<long long> net(static_cast<size_t>(g.vertex_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        net[ed.u] -= flow.values[e];  // reference orientation u -> v
        net[ed.v] += flow.values[e];
    }
    return std::all_of(net.begin(), net.end(), [](long long x) { return x == 0; });
}

PerfectMatching transfer_pm(const MultiGraph& g, const std::vector<VertexId>& s,
                            const PerfectMatching& pm) {
    if (!is_perfect_matching(g, pm))
        throw std::invalid_argument("transfer_pm: not a perfect matching of the host");
    const auto reduction = two_cut_reduction(g, s);

    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : s) in[v] = 1;
    int boundary_hits = 0;
    PerfectMatching out;
    for (EdgeId e : pm.edges) {
        const Edge& ed = g.edge(e);
        const bool u_in = in[ed.u], v_in = in[ed.v];
        if (u_in && v_in) continue;
        if (u_in != v_in) {
            ++boundary_hits;
            continue;
        }
        out.edges.push_back(reduction.edge_map[e]);
    }
    if (boundary_hits != 0 && boundary_hits != 2)
        throw InternalContradictionError("perfect matching hits a 2-cut an odd number of times");
    if (boundary_hits == 2) out.edges.push_back(reduction.joining_edge);
    std::sort(out.edges.begin(), out.edges.end());
    if (!is_perfect_matching(reduction.graph, out))
        throw InternalContradictionError("transferred matching is not perfect");
    return out;
}

}  // namespace rotg
