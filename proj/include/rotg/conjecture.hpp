#pragma once

#include <optional>
#include <vector>

#include "rotg/multigraph.hpp"

namespace rotg {

struct PerfectMatching {
    std::vector<EdgeId> edges;  // ascending
    bool operator==(const PerfectMatching&) const = default;
};

bool is_perfect_matching(const MultiGraph& g, const PerfectMatching& pm);

/// Exhaustive enumeration by always matching the lowest-id uncovered vertex,
/// trying its incident edges in ascending EdgeId order. Parallel copies count
/// as distinct edges. Odd order yields the empty list; order zero yields one
/// empty matching. Stops after `limit` matchings when given.
std::vector<PerfectMatching> enumerate_perfect_matchings(
    const MultiGraph& g, std::optional<long long> limit = std::nullopt);

enum class CoverRule { ExactlyTwo, AtLeastOne, AtMostK };

/// Searches for a multiset of `count` perfect matchings whose per-edge
/// coverage satisfies the rule. k applies to AtMostK only and any k >= 1 is
/// accepted (the interesting range for an r-regular graph is 2..r-1).
/// Exhaustive, so std::nullopt certifies absence at this scale. Limits:
/// n <= 30 and at most 1e6 enumerated matchings, beyond which
/// ResourceLimitError is thrown.
std::optional<std::vector<PerfectMatching>> find_pm_cover(const MultiGraph& g, int count,
                                                          CoverRule rule, int k = 0);

/// Backtracking proper edge coloring with at most k colors; color classes are
/// explored lowest-index-first with symmetry breaking. Returns one color per
/// EdgeId, or std::nullopt after exhausting the search space.
std::optional<std::vector<int>> chromatic_index_at_most(const MultiGraph& g, int k);

// Some single edge copy whose removal disconnects the graph exists.
bool has_bridge(const MultiGraph& g);

// 3-regular, bridgeless, and not 3-edge-colorable.
bool is_snark(const MultiGraph& g);

// Signed value per EdgeId on the reference orientation (lower id -> higher
// id endpoint); a negative value means the edge is oriented the other way
// and carries the absolute value.
struct FlowAssignment {
    std::vector<int> values;
    bool forward(EdgeId e) const { return values[e] > 0; }
    int magnitude(EdgeId e) const { return values[e] < 0 ? -values[e] : values[e]; }
};

/// Nowhere-zero k-flow search: non-tree edges of the deterministic BFS forest
/// take values in {±1..±(k-1)}, tree edges are eliminated through their
/// fundamental cuts. A bridge makes the answer std::nullopt immediately.
std::optional<FlowAssignment> nowhere_zero_flow(const MultiGraph& g, int k);

// Conservation at every vertex, no zeros, magnitudes below k. Independent of
// the search above.
bool verify_flow(const MultiGraph& g, int k, const FlowAssignment& flow);

/// Pushes a perfect matching of g through the 2-cut reduction of s: edges
/// outside s survive (relabeled), and the new joining edge is included iff
/// the matching used both boundary edges.
PerfectMatching transfer_pm(const MultiGraph& g, const std::vector<VertexId>& s,
                            const PerfectMatching& pm);

}  // namespace rotg
