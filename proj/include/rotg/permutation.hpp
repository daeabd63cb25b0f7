#pragma once

#include <vector>

#include "rotg/multigraph.hpp"

namespace rotg {

struct VertexPermutation {
    std::vector<VertexId> image;  // image[v] is where v maps to
    int size() const noexcept { return static_cast<int>(image.size()); }
    VertexId operator()(VertexId v) const { return image[v]; }
    bool operator==(const VertexPermutation&) const = default;
};

VertexPermutation identity_permutation(int n);
bool is_bijection(const VertexPermutation& p);

// Smallest positive k with p^k(v) = v. Throws on non-bijective input.
int orbit_length(const VertexPermutation& p, VertexId v);

VertexPermutation compose(const VertexPermutation& outer, const VertexPermutation& inner);

}  // namespace rotg
