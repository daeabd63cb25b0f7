#include "rotg/build.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "rotg/certify.hpp"
#include "rotg/errors.hpp"
#include "rotg/shape.hpp"

namespace rotg {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void ensure(bool ok, const std::string& what) {
    if (!ok) throw InternalContradictionError(what);
}

MultiGraph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return MultiGraph(n, edges);
}

struct GrowState {
    MultiGraph graph;
    RootedSpanningTree tree;
    VertexPermutation rotation;
};

// Expands every current leaf once and lifts the rotation: the clique vertex
// that received edge e at leaf v maps to the clique vertex that received the
// image edge at leaf rotation(v).
GrowState expand_level(const GrowState& state) {
    const MultiGraph& g = state.graph;
    ensure(g.is_simple(), "expand_level expects a simple graph");
    const auto ts = analyze_tree(g, state.tree);

    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (ts.tree_degree[v] == 1) leaves.push_back(v);

    // edge lookup of the level's starting graph
    std::map<std::pair<VertexId, VertexId>, EdgeId> edge_at;
    for (EdgeId e = 0; e < g.edge_count(); ++e) edge_at[{g.edge(e).u, g.edge(e).v}] = e;

    std::vector<VertexId> cur(static_cast<size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) cur[v] = v;
    std::vector<EdgeId> cur_edge(static_cast<size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) cur_edge[e] = e;

    std::vector<std::vector<VertexId>> clique_of(static_cast<size_t>(g.vertex_count()));
    std::vector<std::map<EdgeId, int>> slot_of(static_cast<size_t>(g.vertex_count()));

    MultiGraph work = g;
    RootedSpanningTree tree = state.tree;
    for (VertexId leaf : leaves) {
        // mirror the slot choice of leaf_expansion: the tree edge first, the
        // rest ascending by their ids in the graph the operation sees
        ensure(ts.parent_edge[leaf] >= 0, "a leaf of the growth tree must have a parent");
        const EdgeId tree_edge = ts.parent_edge[leaf];
        slot_of[leaf][tree_edge] = 0;
        std::vector<std::pair<EdgeId, EdgeId>> others;  // (current id, original id)
        for (EdgeId e : g.incident(leaf))
            if (e != tree_edge) others.emplace_back(cur_edge[e], e);
        std::sort(others.begin(), others.end());
        for (size_t j = 0; j < others.size(); ++j)
            slot_of[leaf][others[j].second] = static_cast<int>(j) + 1;

        const auto op = leaf_expansion(work, tree, cur[leaf]);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (cur[v] >= 0) cur[v] = op.vertex_map[cur[v]];
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (cur_edge[e] >= 0) cur_edge[e] = op.edge_map[cur_edge[e]];
        for (auto& clique : clique_of)
            for (VertexId& c : clique) c = op.vertex_map[c];
        clique_of[leaf] = op.clique;
        cur[leaf] = -1;
        work = op.graph;
        tree = op.tree;
    }

    VertexPermutation lifted;
    lifted.image.assign(static_cast<size_t>(work.vertex_count()), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (cur[v] >= 0) lifted.image[cur[v]] = cur[state.rotation(v)];
    for (VertexId leaf : leaves) {
        const VertexId target = state.rotation(leaf);
        for (const auto& [e, slot] : slot_of[leaf]) {
            VertexId a = state.rotation(g.edge(e).u);
            VertexId b = state.rotation(g.edge(e).v);
            if (a > b) std::swap(a, b);
            const EdgeId image_edge = edge_at.at({a, b});
            lifted.image[clique_of[leaf][slot]] = clique_of[target].at(slot_of[target].at(image_edge));
        }
    }
    return GrowState{std::move(work), std::move(tree), std::move(lifted)};
}

}  // namespace

RotationGraph base_rotation_graph(int r, int depth) {
    require(r >= 3 && r % 2 == 1, "r must be an odd integer >= 3");
    require(depth >= 1, "depth must be at least 1");

    GrowState state;
    state.graph = complete_graph(r + 1);
    state.tree = spanning_tree(state.graph, 0);  // the star at vertex 0
    state.rotation.image.resize(static_cast<size_t>(r + 1));
    state.rotation.image[0] = 0;
    for (int v = 1; v <= r; ++v) state.rotation.image[v] = v % r + 1;

    for (int level = 1; level < depth; ++level) state = expand_level(state);

    ensure(is_automorphism(state.graph, state.rotation) &&
               is_rotational(state.graph, state.tree, state.rotation),
           "base_rotation_graph produced an invalid rotation");
    const auto shape = recognize_tir(tree_as_graph(state.graph, state.tree));
    ensure(shape && shape->r == r && shape->depth == depth && shape->root == state.tree.root,
           "base_rotation_graph tree shape mismatch");
    return RotationGraph{HistGraph{std::move(state.graph), std::move(state.tree), r, depth},
                         std::move(state.rotation)};
}

HistExpansion expand_to_hist(const MultiGraph& g, int r) {
    require(r >= 3 && r % 2 == 1, "r must be an odd integer >= 3");
    require(g.is_regular(r), "graph is not r-regular");
    require(is_connected(g), "graph is not connected");
    if (g.vertex_count() <= 22) require(is_r_graph(g, r), "graph is not an r-graph");

    MultiGraph work = g;
    RootedSpanningTree tree = spanning_tree(g, 0);

    std::vector<EdgeId> cur_edge(static_cast<size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) cur_edge[e] = e;
    std::vector<EdgeId> non_tree;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!std::binary_search(tree.edges.begin(), tree.edges.end(), e)) non_tree.push_back(e);

    std::vector<std::vector<VertexId>> gadgets;
    for (EdgeId e : non_tree) {
        const auto op = edge_expansion(work, tree, cur_edge[e]);
        for (EdgeId i = 0; i < g.edge_count(); ++i)
            if (cur_edge[i] >= 0) cur_edge[i] = op.edge_map[cur_edge[i]];
        gadgets.push_back({op.low_copy, op.high_copy});
        work = op.graph;
        tree = op.tree;
    }

    // target depth: one below the deepest leaf of the expanded tree
    const int target = analyze_tree(work, tree).height + 1;
    while (true) {
        const auto ts = analyze_tree(work, tree);
        VertexId leaf = -1;
        for (VertexId v = 0; v < work.vertex_count(); ++v)
            if (ts.tree_degree[v] == 1 && ts.depth[v] < target) {
                leaf = v;
                break;
            }
        if (leaf < 0) break;
        const auto op = leaf_expansion(work, tree, leaf);
        for (auto& gadget : gadgets) {
            std::vector<VertexId> updated;
            for (VertexId v : gadget) {
                if (v == leaf)
                    updated.insert(updated.end(), op.clique.begin(), op.clique.end());
                else
                    updated.push_back(op.vertex_map[v]);
            }
            gadget = std::move(updated);
        }
        work = op.graph;
        tree = op.tree;
    }

    ensure(work.is_simple(), "expanded graph is not simple");
    ensure(work.is_regular(r), "expanded graph lost regularity");
    const auto shape = recognize_tir(tree_as_graph(work, tree));
    ensure(shape && shape->r == r && shape->depth == target && shape->root == 0,
           "expanded tree is not the expected tir tree");

    HistExpansion out;
    out.hist = HistGraph{work, tree, r, target};

    MultiGraph rewind = work;
    for (size_t j = gadgets.size(); j-- > 0;) {
        ReductionStep step;
        step.vertices = gadgets[j];
        std::sort(step.vertices.begin(), step.vertices.end());
        const auto res = two_cut_reduction(rewind, step.vertices);
        for (size_t t = 0; t < j; ++t)
            for (VertexId& v : gadgets[t]) v = res.vertex_map[v];
        rewind = res.graph;
        out.to_input.steps.push_back(std::move(step));
    }
    ensure(edge_multiset_equal(rewind, g), "reduction script does not recover the input");
    return out;
}

Assembly assemble(const HistGraph& h, const RotationGraph& r_graph) {
    const int r = h.r;
    require(r >= 3 && r % 2 == 1, "r must be an odd integer >= 3");
    require(r_graph.base.r == r, "regularity mismatch between the copies");
    require(h.depth == r_graph.base.depth, "depth mismatch between the copies");
    require(h.depth >= 1, "copies must have depth >= 1");
    require(h.graph.is_regular(r) && r_graph.base.graph.is_regular(r),
            "both inputs must be r-regular");
    require(h.graph.is_simple() && r_graph.base.graph.is_simple(), "both inputs must be simple");
    {
        const auto sh = recognize_tir(tree_as_graph(h.graph, h.tree));
        require(sh && sh->r == r && sh->depth == h.depth && sh->root == h.tree.root,
                "hist input tree is not a tir tree of the stated depth");
        const auto sr = recognize_tir(tree_as_graph(r_graph.base.graph, r_graph.base.tree));
        require(sr && sr->r == r && sr->depth == h.depth && sr->root == r_graph.base.tree.root,
                "rotation input tree is not a tir tree of the stated depth");
        require(is_automorphism(r_graph.base.graph, r_graph.rotation) &&
                    is_rotational(r_graph.base.graph, r_graph.base.tree, r_graph.rotation),
                "rotation input does not carry a rotational automorphism");
    }

    const int copies_r = (r - 1) * (r - 1) - r;
    const int n_h = h.graph.vertex_count();
    const int n_r = r_graph.base.graph.vertex_count();
    const MultiGraph hub = build_tir(r, 2);
    const int hub_size = hub.vertex_count();

    AssemblyPlan plan;
    plan.r = r;
    plan.depth = h.depth;
    plan.hub_size = hub_size;
    plan.h_copy_size = n_h - 1;
    plan.r_copy_size = n_r - 1;
    plan.h_copies = r;
    plan.r_copies = copies_r;

    // positions of non-root source vertices within a block
    const VertexId root_h = h.tree.root;
    const VertexId root_r = r_graph.base.tree.root;
    std::vector<int> pos_h(static_cast<size_t>(n_h), -1), pos_r(static_cast<size_t>(n_r), -1);
    {
        int p = 0;
        for (VertexId v = 0; v < n_h; ++v)
            if (v != root_h) pos_h[v] = p++;
        p = 0;
        for (VertexId v = 0; v < n_r; ++v)
            if (v != root_r) pos_r[v] = p++;
    }
    auto map_h = [&](int i, VertexId v) {  // i in 1..r
        return hub_size + (i - 1) * plan.h_copy_size + pos_h[v];
    };
    auto map_r = [&](int j, VertexId v) {  // j in 1..copies_r
        return hub_size + r * plan.h_copy_size + (j - 1) * plan.r_copy_size + pos_r[v];
    };

    const std::vector<VertexId> y = neighbors(h.graph, {root_h});
    ensure(static_cast<int>(y.size()) == r, "hist root must have r distinct neighbors");
    std::vector<VertexId> z = neighbors(r_graph.base.graph, {root_r});
    ensure(static_cast<int>(z.size()) == r, "rotation root must have r distinct neighbors");
    {
        // relabel so that the rotation advances z_i to z_{i+1}
        std::vector<VertexId> ordered = {z.front()};
        while (static_cast<int>(ordered.size()) < r)
            ordered.push_back(r_graph.rotation(ordered.back()));
        std::vector<VertexId> check = ordered;
        std::sort(check.begin(), check.end());
        ensure(check == z, "rotation does not cycle the root neighbors");
        z = std::move(ordered);
    }

    const int total = hub_size + r * plan.h_copy_size + copies_r * plan.r_copy_size;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<EdgeId> tree_edges;

    for (EdgeId e = 0; e < hub.edge_count(); ++e) {
        tree_edges.push_back(static_cast<EdgeId>(edges.size()));
        edges.emplace_back(hub.edge(e).u, hub.edge(e).v);
    }
    std::vector<char> h_tree(static_cast<size_t>(h.graph.edge_count()), 0);
    for (EdgeId e : h.tree.edges) h_tree[e] = 1;
    std::vector<char> r_tree(static_cast<size_t>(r_graph.base.graph.edge_count()), 0);
    for (EdgeId e : r_graph.base.tree.edges) r_tree[e] = 1;

    for (int i = 1; i <= r; ++i)
        for (EdgeId e = 0; e < h.graph.edge_count(); ++e) {
            const Edge& ed = h.graph.edge(e);
            if (ed.u == root_h || ed.v == root_h) continue;
            if (h_tree[e]) tree_edges.push_back(static_cast<EdgeId>(edges.size()));
            edges.emplace_back(map_h(i, ed.u), map_h(i, ed.v));
        }
    for (int j = 1; j <= copies_r; ++j)
        for (EdgeId e = 0; e < r_graph.base.graph.edge_count(); ++e) {
            const Edge& ed = r_graph.base.graph.edge(e);
            if (ed.u == root_r || ed.v == root_r) continue;
            if (r_tree[e]) tree_edges.push_back(static_cast<EdgeId>(edges.size()));
            edges.emplace_back(map_r(j, ed.u), map_r(j, ed.v));
        }

    plan.n_lists.resize(static_cast<size_t>(r));
    plan.l_lists.resize(static_cast<size_t>(r));
    for (int i = 1; i <= r; ++i) {
        auto& n_list = plan.n_lists[i - 1];
        for (VertexId yv : y) n_list.push_back(map_h(i, yv));
        for (int j = 1; j <= copies_r; ++j) n_list.push_back(map_r(j, z[i - 1]));
        auto& l_list = plan.l_lists[i - 1];
        for (int t = 1; t <= r - 1; ++t) l_list.push_back(r + (i - 1) * (r - 1) + t);
    }
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < r - 1; ++t)
            for (int s = 0; s < r - 1; ++s) {
                const VertexId a = plan.n_lists[i][t * (r - 1) + s];
                const VertexId b = plan.l_lists[i][t];
                plan.new_edges.push_back(static_cast<EdgeId>(edges.size()));
                tree_edges.push_back(static_cast<EdgeId>(edges.size()));
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }

    Assembly out;
    out.plan = plan;
    out.rotation.base.graph = MultiGraph(total, edges);
    out.rotation.base.r = r;
    out.rotation.base.depth = h.depth + 2;
    out.rotation.base.tree.root = 0;
    std::sort(tree_edges.begin(), tree_edges.end());
    out.rotation.base.tree.edges = std::move(tree_edges);

    VertexPermutation rot;
    rot.image.assign(static_cast<size_t>(total), -1);
    rot.image[0] = 0;
    for (int i = 1; i <= r; ++i) {
        const int next_branch = i % r + 1;
        rot.image[i] = next_branch;
        for (int t = 1; t <= r - 1; ++t)
            rot.image[r + (i - 1) * (r - 1) + t] = r + (next_branch - 1) * (r - 1) + t;
        for (VertexId v = 0; v < n_h; ++v)
            if (v != root_h) rot.image[map_h(i, v)] = map_h(next_branch, v);
    }
    for (int j = 1; j <= copies_r; ++j)
        for (VertexId v = 0; v < n_r; ++v)
            if (v != root_r) rot.image[map_r(j, v)] = map_r(j, r_graph.rotation(v));
    out.rotation.rotation = std::move(rot);

    // everything except copy 1 of the hist graph and the first hub leaf
    ReductionStep step;
    std::vector<char> keep(static_cast<size_t>(total), 0);
    keep[r + 1] = 1;  // hub leaf l_1
    for (VertexId v = 0; v < n_h; ++v)
        if (v != root_h) keep[map_h(1, v)] = 1;
    for (VertexId v = 0; v < total; ++v)
        if (!keep[v]) step.vertices.push_back(v);
    out.to_hist.steps.push_back(std::move(step));

    const MultiGraph& gp = out.rotation.base.graph;
    ensure(gp.is_simple(), "assembled graph is not simple");
    ensure(gp.is_regular(r), "assembled graph is not r-regular");
    const auto shape = recognize_tir(tree_as_graph(gp, out.rotation.base.tree));
    ensure(shape && shape->r == r && shape->depth == h.depth + 2 && shape->root == 0,
           "assembled tree is not the expected tir tree");
    ensure(is_automorphism(gp, out.rotation.rotation), "assembled rotation is not an automorphism");
    ensure(is_rotational(gp, out.rotation.base.tree, out.rotation.rotation),
           "assembled rotation is not rotational");
    return out;
}

Construction construct_rotation_graph(const MultiGraph& g, int r) {
    auto expansion = expand_to_hist(g, r);
    ensure(expansion.hist.tree.root == 0, "hist expansion must be rooted at vertex 0");
    auto base = base_rotation_graph(r, expansion.hist.depth);
    auto assembly = assemble(expansion.hist, base);

    Construction out;
    out.rotation = std::move(assembly.rotation);
    out.plan = std::move(assembly.plan);
    out.to_input = assembly.to_hist;
    for (const auto& step : expansion.to_input.steps) out.to_input.steps.push_back(step);
    out.hist = std::move(expansion.hist);
    out.base = std::move(base);
    return out;
}

MultiGraph bipartite_contraction(const MultiGraph& assembled, const AssemblyPlan& plan) {
    const int r = plan.r;
    require(r >= 3 && plan.hub_size == static_cast<int>(tir_order(r, 2)) && plan.h_copies == r &&
                plan.r_copies == (r - 1) * (r - 1) - r && plan.h_copy_size > 0 &&
                plan.r_copy_size > 0,
            "assembly plan is inconsistent");
    const int total =
        plan.hub_size + plan.h_copies * plan.h_copy_size + plan.r_copies * plan.r_copy_size;
    require(assembled.vertex_count() == total, "assembly plan does not match the graph");

    const int quotient_n = plan.hub_size + plan.h_copies + plan.r_copies;
    auto quotient_id = [&](VertexId v) -> VertexId {
        if (v < plan.hub_size) return v;
        const int offset = v - plan.hub_size;
        if (offset < plan.h_copies * plan.h_copy_size)
            return plan.hub_size + offset / plan.h_copy_size;
        const int r_offset = offset - plan.h_copies * plan.h_copy_size;
        return plan.hub_size + plan.h_copies + r_offset / plan.r_copy_size;
    };

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Edge& e : assembled.edges()) {
        const VertexId a = quotient_id(e.u), b = quotient_id(e.v);
        if (a != b) edges.emplace_back(a, b);
    }
    MultiGraph quotient(quotient_n, edges);

    ensure(quotient.is_regular(r), "copy quotient is not r-regular");
    // 2-colorability check
    std::vector<int> color(static_cast<size_t>(quotient_n), -1);
    for (VertexId start = 0; start < quotient_n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<VertexId> stack = {start};
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : quotient.incident(v)) {
                const VertexId w = quotient.opposite(e, v);
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else {
                    ensure(color[w] != color[v], "copy quotient is not bipartite");
                }
            }
        }
    }
    return quotient;
}

}  // namespace rotg
