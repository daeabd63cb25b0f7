#pragma once

#include <optional>
#include <string>

#include "rotg/multigraph.hpp"
#include "rotg/permutation.hpp"
#include "rotg/surgery.hpp"
#include "rotg/tree.hpp"

namespace rotg {

// The mgf text format ("multigraph format"):
//
//   mgf 1
//   <n> <m>
//   <u> <v>            m edge lines with u < v; repeats mean parallel copies
//   tree <root> <t>    optional; t lines with one tree edge index each
//   perm <n>           optional; n lines with one image each
//   script <s>         optional; s lines "reduce <k> <v1> ... <vk>"
//
// '#' starts a comment, blank lines are ignored. EdgeId equals line order.
struct MgfDocument {
    MultiGraph graph;
    std::optional<RootedSpanningTree> tree;
    std::optional<VertexPermutation> permutation;
    std::optional<ReductionScript> script;
};

/// Parses a document; errors carry 1-based line numbers.
MgfDocument read_mgf(const std::string& text);

/// Canonical form: LF newlines, single spaces, edges sorted by endpoints
/// (parallel copies keep their relative order), sections in the fixed order
/// tree, perm, script. Tree edge indices are rewritten against the sorted
/// edge order, so write_mgf(read_mgf(t)) == t for canonical documents.
std::string write_mgf(const MgfDocument& doc);

}  // namespace rotg
