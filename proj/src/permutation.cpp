#include "rotg/permutation.hpp"

#include <stdexcept>

namespace rotg {

VertexPermutation identity_permutation(int n) {
    VertexPermutation p;
    p.image.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) p.image[v] = v;
    return p;
}

bool is_bijection(const VertexPermutation& p) {
    const int n = p.size();
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (VertexId v : p.image) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

int orbit_length(const VertexPermutation& p, VertexId v) {
    if (!is_bijection(p)) throw std::invalid_argument("permutation is not a bijection");
    if (v < 0 || v >= p.size()) throw std::invalid_argument("vertex out of range");
    int k = 1;
    VertexId w = p.image[v];
    while (w != v) {
        w = p.image[w];
        ++k;
    }
    return k;
}

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("size mismatch");
    VertexPermutation r;
    r.image.resize(inner.image.size());
    for (int v = 0; v < inner.size(); ++v) r.image[v] = outer.image[inner.image[v]];
    return r;
}

}  // namespace rotg
