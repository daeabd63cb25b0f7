#include "rotg/shape.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "rotg/errors.hpp"

namespace rotg {

long long tir_order(int r, int depth) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    long long order = 1;
    long long level = r;
    for (int j = 0; j < depth; ++j) {
        order += level;
        level *= r - 1;
    }
    return order;
}

MultiGraph build_tir(int r, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("r must be a positive odd integer");
    if (r == 1 && depth > 1) throw std::invalid_argument("r = 1 only admits depth <= 1");

    const long long order = tir_order(r, depth);
    if (order > 2'000'000) throw ResourceLimitError("tir tree would have more than 2e6 vertices");

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> level = {0};
    int next = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<VertexId> below;
        for (VertexId parent : level) {
            const int fanout = (d == 0) ? r : r - 1;
            for (int c = 0; c < fanout; ++c) {
                edges.emplace_back(parent, next);
                below.push_back(next++);
            }
        }
        level = std::move(below);
    }
    return MultiGraph(static_cast<int>(order), edges);
}

std::optional<TirShape> recognize_tir(const MultiGraph& t) {
    const int n = t.vertex_count();
    if (n == 0 || t.edge_count() != n - 1 || !is_connected(t))
        throw std::invalid_argument("input is not a tree");

    if (n == 1) return TirShape{0, 0, 0};
    if (n == 2) return TirShape{1, 1, 0};

    int r = 0;
    for (VertexId v = 0; v < n; ++v) r = std::max(r, t.degree(v));
    if (r < 3) return std::nullopt;  // a path or K_2-like shape
    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v) {
        const int d = t.degree(v);
        if (d == 1)
            leaves.push_back(v);
        else if (d != r)
            return std::nullopt;
    }

    auto bfs_depths = [&](VertexId from) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        std::deque<VertexId> queue = {from};
        dist[from] = 0;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (EdgeId e : t.incident(v)) {
                const VertexId w = t.opposite(e, v);
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    };

    std::optional<TirShape> found;
    for (VertexId v = 0; v < n; ++v) {
        const auto dist = bfs_depths(v);
        const int d0 = dist[leaves.front()];
        bool uniform = true;
        for (VertexId leaf : leaves)
            if (dist[leaf] != d0) {
                uniform = false;
                break;
            }
        if (!uniform) continue;
        if (found) return std::nullopt;  // the root must be unique
        // Every vertex strictly above the leaf level must be internal, and
        // nothing may lie below it.
        for (VertexId w = 0; w < n; ++w) {
            if (dist[w] > d0) return std::nullopt;
            if (dist[w] < d0 && t.degree(w) != r) return std::nullopt;
            if (dist[w] == d0 && t.degree(w) != 1) return std::nullopt;
        }
        found = TirShape{r, d0, v};
    }
    return found;
}

bool is_hist(const MultiGraph& g, const RootedSpanningTree& tree) {
    const auto ts = analyze_tree(g, tree);
    for (int deg : ts.tree_degree)
        if (deg == 2) return false;
    return true;
}

bool verify_hist_partition(const MultiGraph& g, const RootedSpanningTree& tree) {
    if (g.regularity() < 0) throw std::invalid_argument("verify_hist_partition: graph is not regular");
    const MultiGraph tg = tree_as_graph(g, tree);
    if (!recognize_tir(tg)) throw std::invalid_argument("verify_hist_partition: tree is not a tir tree");

    std::vector<char> in_tree(static_cast<size_t>(g.edge_count()), 0);
    for (EdgeId e : tree.edges) in_tree[e] = 1;
    std::vector<char> leaf(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) leaf[v] = (tg.degree(v) == 1);

    std::vector<int> leaf_degree(static_cast<size_t>(g.vertex_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!in_tree[e] && !(leaf[ed.u] && leaf[ed.v])) return false;
        if (leaf[ed.u] && leaf[ed.v]) {
            ++leaf_degree[ed.u];
            ++leaf_degree[ed.v];
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (leaf[v] && leaf_degree[v] % 2 != 0) return false;
    return true;
}

bool is_automorphism(const MultiGraph& g, const VertexPermutation& p) {
    if (p.size() != g.vertex_count() || !is_bijection(p))
        throw std::invalid_argument("map is not a bijection on the vertex set");
    std::map<std::pair<VertexId, VertexId>, int> mult;
    for (const Edge& e : g.edges()) ++mult[{e.u, e.v}];
    for (const auto& [pair, count] : mult) {
        VertexId a = p(pair.first), b = p(pair.second);
        if (a > b) std::swap(a, b);
        const auto it = mult.find({a, b});
        if (it == mult.end() || it->second != count) return false;
    }
    return true;
}

bool is_rotational(const MultiGraph& g, const RootedSpanningTree& tree, const VertexPermutation& p) {
    const auto ts = analyze_tree(g, tree);
    const MultiGraph tg = tree_as_graph(g, tree);
    if (!is_automorphism(tg, p))
        throw std::invalid_argument("map is not an automorphism of the tree");
    if (p(tree.root) != tree.root) return false;
    const int root_degree = ts.tree_degree[tree.root];
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != tree.root && orbit_length(p, v) != root_degree) return false;
    return true;
}

namespace {

// Backtracking state for the rotational-automorphism search. Branches of the
// root are mapped cyclically b_0 -> b_1 -> ... -> b_{r-1} -> b_0; the maps of
// the first r-1 hops are searched, the last hop is forced by alpha^r = id.
class RotationSearch {
public:
    RotationSearch(const MultiGraph& g, const TreeStructure& ts, int r)
        : g_(g), ts_(ts), r_(r), image_(static_cast<size_t>(g.vertex_count()), -1),
          used_(static_cast<size_t>(g.vertex_count()), 0) {
        signature_.resize(static_cast<size_t>(g.vertex_count()));
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            signature_[v] = {ts_.depth[v], ts_.tree_degree[v], g_.degree(v)};
    }

    std::optional<VertexPermutation> run() {
        const VertexId root = ts_.root;
        const auto& branches = ts_.children[root];
        assign(root, root);

        // Branch orderings: fix branches[0] first, permute the rest.
        std::vector<int> rest(branches.begin() + 1, branches.end());
        std::sort(rest.begin(), rest.end());
        do {
            cycle_.clear();
            cycle_.push_back(branches[0]);
            cycle_.insert(cycle_.end(), rest.begin(), rest.end());
            if (map_branch(0)) {
                VertexPermutation p{image_};
                return p;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
        return std::nullopt;
    }

private:
    void assign(VertexId v, VertexId w) {
        image_[v] = w;
        used_[w] = 1;
    }
    void unassign(VertexId v) {
        used_[image_[v]] = 0;
        image_[v] = -1;
    }

    bool compatible(VertexId v, VertexId w) {
        if (signature_[v] != signature_[w]) return false;
        // every already-mapped pair must preserve multiplicity
        for (EdgeId e : g_.incident(v)) {
            const VertexId u = g_.opposite(e, v);
            if (image_[u] == -1 || u == v) continue;
            if (g_.multiplicity(v, u) != g_.multiplicity(w, image_[u])) return false;
        }
        return true;
    }

    // Maps branch cycle_[k] onto branch cycle_[(k+1) % r].
    bool map_branch(int k) {
        if (k == r_ - 1) return force_last_branch();
        const VertexId src_top = cycle_[k];
        const VertexId dst_top = cycle_[(k + 1) % r_];
        std::vector<VertexId> order;
        collect_branch(src_top, order);
        return map_vertex(k, order, 0, dst_top);
    }

    void collect_branch(VertexId top, std::vector<VertexId>& order) const {
        order.clear();
        std::deque<VertexId> queue = {top};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (VertexId c : ts_.children[v]) queue.push_back(c);
        }
    }

    bool map_vertex(int k, const std::vector<VertexId>& order, size_t idx, VertexId dst_top) {
        if (idx == order.size()) return map_branch(k + 1);
        const VertexId v = order[idx];
        if (idx == 0) {
            if (!compatible(v, dst_top)) return false;
            assign(v, dst_top);
            if (map_vertex(k, order, idx + 1, dst_top)) return true;
            unassign(v);
            return false;
        }
        const VertexId mapped_parent = image_[ts_.parent[v]];
        for (VertexId w : ts_.children[mapped_parent]) {
            if (used_[w] || !compatible(v, w)) continue;
            assign(v, w);
            if (map_vertex(k, order, idx + 1, dst_top)) return true;
            unassign(v);
        }
        return false;
    }

    // alpha^r = id forces the last branch map to be the inverse of the
    // composition of the previous hops; build it and check edges.
    bool force_last_branch() {
        const VertexId src_top = cycle_[r_ - 1];
        std::vector<VertexId> first_branch;
        collect_branch(cycle_[0], first_branch);
        std::vector<std::pair<VertexId, VertexId>> forced;
        for (VertexId v : first_branch) {
            VertexId w = v;
            for (int hop = 0; hop < r_ - 1; ++hop) w = image_[w];
            // w lies in the last branch and must map back to v
            forced.emplace_back(w, v);
        }
        (void)src_top;
        for (const auto& [w, v] : forced) assign(w, v);
        bool ok = true;
        for (const auto& [w, v] : forced)
            if (!compatible_full(w)) {
                ok = false;
                break;
            }
        if (ok) return true;
        for (const auto& [w, v] : forced) unassign(w);
        return false;
    }

    bool compatible_full(VertexId v) {
        const VertexId w = image_[v];
        if (signature_[v] != signature_[w]) return false;
        for (EdgeId e : g_.incident(v)) {
            const VertexId u = g_.opposite(e, v);
            if (image_[u] == -1) continue;
            if (g_.multiplicity(v, u) != g_.multiplicity(w, image_[u])) return false;
        }
        return true;
    }

    const MultiGraph& g_;
    const TreeStructure& ts_;
    int r_;
    std::vector<VertexId> image_;
    std::vector<char> used_;
    std::vector<std::array<int, 3>> signature_;
    std::vector<VertexId> cycle_;
};

}  // namespace

std::optional<VertexPermutation> find_rotational_automorphism(const MultiGraph& g,
                                                              const RootedSpanningTree& tree) {
    const auto shape = recognize_tir(tree_as_graph(g, tree));
    if (!shape) throw std::invalid_argument("spanning tree is not a tir tree");
    if (shape->depth == 0 || g.vertex_count() == 2) {
        // single vertex or the K_2 family: the identity is rotational
        return identity_permutation(g.vertex_count());
    }

    RootedSpanningTree rooted = tree;
    rooted.root = shape->root;  // the tir root is intrinsic
    const auto ts = analyze_tree(g, rooted);
    RotationSearch search(g, ts, shape->r);
    auto result = search.run();
    if (result) {
        // structural guarantees, re-checked cheaply
        if (!is_automorphism(g, *result) || !is_rotational(g, rooted, *result))
            throw InternalContradictionError("rotation search produced an invalid witness");
    }
    return result;
}

}  // namespace rotg
