#include "rotg/tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "rotg/errors.hpp"

namespace rotg {

TreeStructure analyze_tree(const MultiGraph& g, const RootedSpanningTree& tree) {
    const int n = g.vertex_count();
    if (tree.root < 0 || tree.root >= n) throw std::invalid_argument("tree root out of range");
    if (static_cast<int>(tree.edges.size()) != n - 1)
        throw std::invalid_argument("tree has " + std::to_string(tree.edges.size()) +
                                    " edges, expected " + std::to_string(n - 1));

    std::vector<std::vector<EdgeId>> adj(static_cast<size_t>(n));
    std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
    for (EdgeId e : tree.edges) {
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("tree edge id out of range");
        if (used[e]) throw std::invalid_argument("duplicate tree edge id");
        used[e] = 1;
        adj[g.edge(e).u].push_back(e);
        adj[g.edge(e).v].push_back(e);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    TreeStructure ts;
    ts.root = tree.root;
    ts.parent.assign(static_cast<size_t>(n), -1);
    ts.parent_edge.assign(static_cast<size_t>(n), -1);
    ts.depth.assign(static_cast<size_t>(n), -1);
    ts.tree_degree.assign(static_cast<size_t>(n), 0);
    ts.children.assign(static_cast<size_t>(n), {});
    for (VertexId v = 0; v < n; ++v) ts.tree_degree[v] = static_cast<int>(adj[v].size());

    std::deque<VertexId> queue = {tree.root};
    ts.depth[tree.root] = 0;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        ts.bfs_order.push_back(v);
        ts.height = std::max(ts.height, ts.depth[v]);
        for (EdgeId e : adj[v]) {
            const VertexId w = g.opposite(e, v);
            if (ts.depth[w] >= 0) continue;
            ts.depth[w] = ts.depth[v] + 1;
            ts.parent[w] = v;
            ts.parent_edge[w] = e;
            ts.children[v].push_back(w);
            queue.push_back(w);
        }
    }
    if (static_cast<int>(ts.bfs_order.size()) != n)
        throw std::invalid_argument("tree edges do not span the graph");
    return ts;
}

RootedSpanningTree spanning_tree(const MultiGraph& g, VertexId root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::deque<VertexId> queue = {root};
    seen[root] = 1;
    RootedSpanningTree tree;
    tree.root = root;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : g.incident(v)) {
            const VertexId w = g.opposite(e, v);
            if (seen[w]) continue;
            seen[w] = 1;
            tree.edges.push_back(e);
            queue.push_back(w);
        }
    }
    if (static_cast<int>(tree.edges.size()) != n - 1)
        throw NoSpanningTreeError("graph is disconnected; no spanning tree exists");
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

MultiGraph tree_as_graph(const MultiGraph& g, const RootedSpanningTree& tree) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(tree.edges.size());
    for (EdgeId e : tree.edges) edges.emplace_back(g.edge(e).u, g.edge(e).v);
    return MultiGraph(g.vertex_count(), edges);
}

RootedSpanningTree whole_graph_tree(const MultiGraph& g, VertexId root) {
    RootedSpanningTree tree;
    tree.root = root;
    tree.edges.resize(static_cast<size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) tree.edges[e] = e;
    analyze_tree(g, tree);  // validates that g is a tree
    return tree;
}

}  // namespace rotg
