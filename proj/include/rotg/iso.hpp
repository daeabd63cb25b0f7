#pragma once

#include <optional>
#include <vector>

#include "rotg/multigraph.hpp"

namespace rotg {

struct IsoWitness {
    std::vector<VertexId> map;  // vertex of A -> vertex of B
};

/// Multigraph isomorphism by iterated degree/multiplicity refinement plus
/// backtracking; exhaustive, intended for graphs up to 64 vertices (beyond
/// that ResourceLimitError is thrown).
std::optional<IsoWitness> are_isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace rotg
