#include "rotg/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rotg/errors.hpp"

namespace rotg {

namespace {

// One refinement sweep over both graphs at once, so color ids stay
// comparable across them. Returns false once the histograms diverge.
bool refine(const MultiGraph& a, const MultiGraph& b, std::vector<int>& ca, std::vector<int>& cb) {
    while (true) {
        using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
        auto signature = [](const MultiGraph& g, const std::vector<int>& colors, VertexId v) {
            std::vector<std::pair<int, int>> around;  // (neighbor color, 1) per edge copy
            for (EdgeId e : g.incident(v)) around.emplace_back(colors[g.opposite(e, v)], 1);
            std::sort(around.begin(), around.end());
            return Signature{colors[v], std::move(around)};
        };

        std::map<Signature, int> ids;
        std::vector<int> na(ca.size()), nb(cb.size());
        for (VertexId v = 0; v < a.vertex_count(); ++v) {
            auto sig = signature(a, ca, v);
            na[v] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
        }
        for (VertexId v = 0; v < b.vertex_count(); ++v) {
            auto sig = signature(b, cb, v);
            nb[v] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
        }

        std::vector<int> ha(ids.size(), 0), hb(ids.size(), 0);
        for (int c : na) ++ha[c];
        for (int c : nb) ++hb[c];
        if (ha != hb) return false;

        const bool stable = std::equal(na.begin(), na.end(), ca.begin()) &&
                            std::equal(nb.begin(), nb.end(), cb.begin());
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) return true;
    }
}

}  // namespace

std::optional<IsoWitness> are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() > 64 || b.vertex_count() > 64)
        throw ResourceLimitError("isomorphism search is limited to 64 vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    const int n = a.vertex_count();
    if (n == 0) return IsoWitness{};

    std::vector<int> ca(static_cast<size_t>(n), 0), cb(static_cast<size_t>(n), 0);
    if (!refine(a, b, ca, cb)) return std::nullopt;

    // order A's vertices by ascending color-class size, then id
    std::vector<int> class_size(static_cast<size_t>(n) + 1, 0);
    for (int c : ca) ++class_size[c];
    std::vector<VertexId> order(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        return std::tuple(class_size[ca[x]], ca[x], x) < std::tuple(class_size[ca[y]], ca[y], y);
    });

    std::vector<VertexId> map(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::function<bool(size_t)> place = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        const VertexId v = order[idx];
        for (VertexId w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (EdgeId e : a.incident(v)) {
                const VertexId u = a.opposite(e, v);
                if (u == v || map[u] < 0) continue;
                if (a.multiplicity(v, u) != b.multiplicity(w, map[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (place(idx + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return IsoWitness{std::move(map)};
}

}  // namespace rotg
