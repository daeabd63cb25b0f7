#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "rotg/build.hpp"
#include "rotg/conjecture.hpp"
#include "rotg/errors.hpp"
#include "rotg/surgery.hpp"

using namespace rotg;

TEST_CASE("perfect matching counts on the worked examples") {
    // counts frozen from the edge-subset oracle
    CHECK(fixtures::oracle_count_perfect_matchings(fixtures::complete_graph(4)) == 3);
    CHECK(enumerate_perfect_matchings(fixtures::complete_graph(4)).size() == 3);

    CHECK(fixtures::oracle_count_perfect_matchings(fixtures::petersen_graph()) == 6);
    CHECK(enumerate_perfect_matchings(fixtures::petersen_graph()).size() == 6);

    CHECK(enumerate_perfect_matchings(fixtures::cycle_graph(3)).empty());
    CHECK(enumerate_perfect_matchings(MultiGraph(0)).size() == 1);
    CHECK(enumerate_perfect_matchings(fixtures::bundle_graph(5)).size() == 5);

    const auto limited = enumerate_perfect_matchings(fixtures::petersen_graph(), 2);
    CHECK(limited.size() == 2);
}

TEST_CASE("every enumerated matching is perfect and they are distinct") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = fixtures::random_regular_multigraph(rng, 6 + 2 * (trial % 3), 3);
        const auto pms = enumerate_perfect_matchings(g);
        CHECK(static_cast<long long>(pms.size()) == fixtures::oracle_count_perfect_matchings(g));
        std::set<std::vector<EdgeId>> unique;
        for (const auto& pm : pms) {
            CHECK(is_perfect_matching(g, pm));
            unique.insert(pm.edges);
        }
        CHECK(unique.size() == pms.size());
    }
}

TEST_CASE("fulkerson-style cover of K_4 doubles the three matchings") {
    const auto witness = find_pm_cover(fixtures::complete_graph(4), 6, CoverRule::ExactlyTwo);
    REQUIRE(witness.has_value());
    CHECK(witness->size() == 6);
    std::vector<int> coverage(6, 0);
    for (const auto& pm : *witness)
        for (EdgeId e : pm.edges) ++coverage[e];
    for (int c : coverage) CHECK(c == 2);
}

TEST_CASE("the six Petersen matchings form an exactly-two cover") {
    const auto petersen = fixtures::petersen_graph();
    const auto witness = find_pm_cover(petersen, 6, CoverRule::ExactlyTwo);
    REQUIRE(witness.has_value());
    std::vector<int> coverage(15, 0);
    for (const auto& pm : *witness)
        for (EdgeId e : pm.edges) ++coverage[e];
    for (int c : coverage) CHECK(c == 2);
    // and they are exactly the six distinct matchings
    std::set<std::vector<EdgeId>> unique;
    for (const auto& pm : *witness) unique.insert(pm.edges);
    CHECK(unique.size() == 6);
}

TEST_CASE("berge-style cover of the Petersen graph with five matchings") {
    const auto witness = find_pm_cover(fixtures::petersen_graph(), 5, CoverRule::AtLeastOne);
    REQUIRE(witness.has_value());
    std::vector<int> coverage(15, 0);
    for (const auto& pm : *witness)
        for (EdgeId e : pm.edges) ++coverage[e];
    for (int c : coverage) CHECK(c >= 1);
    // four matchings never suffice: 4 * 5 edges < ... exhaustively absent
    CHECK_FALSE(find_pm_cover(fixtures::petersen_graph(), 4, CoverRule::AtLeastOne).has_value());
}

TEST_CASE("at-most-k covers") {
    // three matchings of K_4 are pairwise disjoint
    const auto k4 = find_pm_cover(fixtures::complete_graph(4), 3, CoverRule::AtMostK, 2);
    REQUIRE(k4.has_value());
    // Petersen: any three of the six pairwise intersect in one edge
    const auto petersen = find_pm_cover(fixtures::petersen_graph(), 3, CoverRule::AtMostK, 2);
    REQUIRE(petersen.has_value());
    std::vector<int> coverage(15, 0);
    for (const auto& pm : *petersen)
        for (EdgeId e : pm.edges) ++coverage[e];
    for (int c : coverage) CHECK(c <= 2);
    // with k = 1 a proper 3-edge-coloring would be needed; Petersen has none
    CHECK_FALSE(find_pm_cover(fixtures::petersen_graph(), 3, CoverRule::AtMostK, 1).has_value());

    CHECK_THROWS_AS(find_pm_cover(fixtures::complete_graph(4), 0, CoverRule::AtLeastOne),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_pm_cover(fixtures::complete_graph(4), 3, CoverRule::AtMostK, 0),
                    std::invalid_argument);
}

TEST_CASE("chromatic index on the worked examples") {
    // K_4 is 3-edge-colorable; frozen against the independent oracle
    CHECK(fixtures::oracle_edge_colorable(fixtures::complete_graph(4), 3));
    const auto k4 = chromatic_index_at_most(fixtures::complete_graph(4), 3);
    REQUIRE(k4.has_value());

    CHECK_FALSE(fixtures::oracle_edge_colorable(fixtures::petersen_graph(), 3));
    CHECK_FALSE(chromatic_index_at_most(fixtures::petersen_graph(), 3).has_value());
    const auto four = chromatic_index_at_most(fixtures::petersen_graph(), 4);
    REQUIRE(four.has_value());

    const auto bundle = chromatic_index_at_most(fixtures::bundle_graph(5), 5);
    REQUIRE(bundle.has_value());
    CHECK(std::set<int>(bundle->begin(), bundle->end()).size() == 5);
    CHECK_FALSE(chromatic_index_at_most(fixtures::bundle_graph(5), 4).has_value());
}

TEST_CASE("returned colorings are proper") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = fixtures::random_regular_multigraph(rng, 8, 3);
        const auto coloring = chromatic_index_at_most(g, 4);
        REQUIRE(coloring.has_value());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f = 0; f < e; ++f) {
                const auto& a = g.edge(e);
                const auto& b = g.edge(f);
                if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                    CHECK((*coloring)[e] != (*coloring)[f]);
            }
    }
}

TEST_CASE("snark detection") {
    CHECK(is_snark(fixtures::petersen_graph()));
    CHECK_FALSE(is_snark(fixtures::complete_graph(4)));
    CHECK_FALSE(is_snark(fixtures::bridged_cubic_graph()));
    CHECK_FALSE(is_snark(fixtures::complete_graph(5)));  // not cubic
}

TEST_CASE("bridge detection") {
    CHECK(has_bridge(fixtures::bridged_cubic_graph()));
    CHECK_FALSE(has_bridge(fixtures::petersen_graph()));
    CHECK_FALSE(has_bridge(fixtures::bundle_graph(2)));
    CHECK(has_bridge(fixtures::path_graph(3)));
}

TEST_CASE("nowhere-zero flows on the worked examples") {
    // cubic: 4-flow exists iff 3-edge-colorable, which gives the oracle
    const auto k4 = nowhere_zero_flow(fixtures::complete_graph(4), 4);
    REQUIRE(k4.has_value());
    CHECK(verify_flow(fixtures::complete_graph(4), 4, *k4));

    CHECK_FALSE(nowhere_zero_flow(fixtures::petersen_graph(), 4).has_value());
    const auto five = nowhere_zero_flow(fixtures::petersen_graph(), 5);
    REQUIRE(five.has_value());
    CHECK(verify_flow(fixtures::petersen_graph(), 5, *five));

    CHECK_FALSE(nowhere_zero_flow(fixtures::bridged_cubic_graph(), 6).has_value());
    CHECK_THROWS_AS(nowhere_zero_flow(fixtures::complete_graph(4), 1), std::invalid_argument);

    // an even cycle carries a 2-flow
    const auto cycle = nowhere_zero_flow(fixtures::cycle_graph(4), 2);
    REQUIRE(cycle.has_value());
    CHECK(verify_flow(fixtures::cycle_graph(4), 2, *cycle));
}

TEST_CASE("flow verification is strict") {
    FlowAssignment zero{std::vector<int>(6, 0)};
    CHECK_FALSE(verify_flow(fixtures::complete_graph(4), 4, zero));
    FlowAssignment wrong_size{std::vector<int>(3, 1)};
    CHECK_FALSE(verify_flow(fixtures::complete_graph(4), 4, wrong_size));
}

TEST_CASE("flows exist on five-regular instances") {
    const auto k6 = fixtures::complete_graph(6);
    const auto flow = nowhere_zero_flow(k6, 3);
    REQUIRE(flow.has_value());  // K_6 happens to carry a 3-flow
    CHECK(verify_flow(k6, 3, *flow));
    CHECK_FALSE(nowhere_zero_flow(k6, 2).has_value());
}

TEST_CASE("transfer_pm across a gadget reduction") {
    const auto k4 = fixtures::complete_graph(4);
    const auto expanded = edge_expansion(k4, spanning_tree(k4, 0), 3);
    const std::vector<VertexId> s = {4, 5};
    const auto reduction = two_cut_reduction(expanded.graph, s);

    int with_joining = 0, without_joining = 0;
    for (const auto& pm : enumerate_perfect_matchings(expanded.graph)) {
        const auto moved = transfer_pm(expanded.graph, s, pm);
        CHECK(is_perfect_matching(reduction.graph, moved));
        const bool uses_boundary =
            std::find(moved.edges.begin(), moved.edges.end(), reduction.joining_edge) !=
            moved.edges.end();
        (uses_boundary ? with_joining : without_joining) += 1;
        // the joining edge appears exactly when both boundary edges were taken
        int hits = 0;
        for (EdgeId e : boundary(expanded.graph, s))
            hits += std::find(pm.edges.begin(), pm.edges.end(), e) != pm.edges.end();
        CHECK(hits % 2 == 0);
        CHECK((hits == 2) == uses_boundary);
    }
    CHECK(with_joining > 0);
    CHECK(without_joining > 0);

    PerfectMatching not_perfect{{0}};
    CHECK_THROWS_AS(transfer_pm(expanded.graph, s, not_perfect), std::invalid_argument);
}

TEST_CASE("transferring every matching down a construction script") {
    const auto bundle = fixtures::bundle_graph(3);
    const auto built = construct_rotation_graph(bundle, 3);
    // walk the script from the hist graph down (the full graph is beyond the
    // enumeration cap); the answers must stay constant
    MultiGraph current = built.hist.graph;
    ReductionScript script;
    script.steps = {built.to_input.steps.begin() + 1, built.to_input.steps.end()};
    for (const auto& step : script.steps) {
        const auto pms = enumerate_perfect_matchings(current);
        const auto reduced = two_cut_reduction(current, step.vertices);
        for (const auto& pm : pms)
            CHECK(is_perfect_matching(reduced.graph, transfer_pm(current, step.vertices, pm)));
        current = reduced.graph;
    }
    CHECK(edge_multiset_equal(current, bundle));
}

TEST_CASE("the flower snark behaves like a snark") {
    const auto j5 = fixtures::flower_snark_j5();
    REQUIRE(j5.is_regular(3));
    REQUIRE(j5.is_simple());
    CHECK(is_snark(j5));
    CHECK_FALSE(nowhere_zero_flow(j5, 4).has_value());
    const auto five = nowhere_zero_flow(j5, 5);
    REQUIRE(five.has_value());
    CHECK(verify_flow(j5, 5, *five));
    // matching count frozen after the subset oracle agreed
    CHECK(fixtures::oracle_count_perfect_matchings(j5) == 32);
    CHECK(enumerate_perfect_matchings(j5).size() == 32);
}

TEST_CASE("resource limits on cover search") {
    const auto big = fixtures::cycle_graph(32);
    CHECK_THROWS_AS(find_pm_cover(big, 2, CoverRule::AtLeastOne), ResourceLimitError);
}

namespace {

// independent flow oracle: try every signed assignment over all edges
bool oracle_flow_exists(const MultiGraph& g, int k) {
    const int m = g.edge_count();
    std::vector<int> values(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int e) -> bool {
        if (e == m) {
            std::vector<long long> net(static_cast<size_t>(g.vertex_count()), 0);
            for (EdgeId i = 0; i < m; ++i) {
                net[g.edge(i).u] -= values[i];
                net[g.edge(i).v] += values[i];
            }
            return std::all_of(net.begin(), net.end(), [](long long x) { return x == 0; });
        }
        for (int mag = 1; mag < k; ++mag)
            for (int sign : {1, -1}) {
                values[e] = sign * mag;
                if (self(self, e + 1)) return true;
            }
        values[e] = 0;
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

TEST_CASE("flow search agrees with the whole-assignment oracle") {
    std::mt19937 rng(606);
    int done = 0;
    while (done < 25) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const auto g = fixtures::random_connected_multigraph(rng, n, 2 + static_cast<int>(rng() % 3));
        if (g.edge_count() > 8) continue;
        for (int k : {2, 3}) {
            const auto found = nowhere_zero_flow(g, k);
            CHECK(found.has_value() == oracle_flow_exists(g, k));
            if (found) CHECK(verify_flow(g, k, *found));
        }
        ++done;
    }
}

TEST_CASE("edge coloring agrees with the plain oracle") {
    std::mt19937 rng(607);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const auto g = fixtures::random_connected_multigraph(rng, n, 2 + static_cast<int>(rng() % 4));
        for (int k = 2; k <= 4; ++k)
            CHECK(chromatic_index_at_most(g, k).has_value() == fixtures::oracle_edge_colorable(g, k));
    }
}

TEST_CASE("exactly-two covers exist iff at-least-one covers do") {
    // cross-check of the two cover notions on the corpus, including a
    // negative instance (the bridged graph blocks both)
    struct Item {
        MultiGraph g;
        int r;
    };
    const std::vector<Item> items = {
        {fixtures::complete_graph(4), 3},   {fixtures::petersen_graph(), 3},
        {fixtures::bundle_graph(3), 3},     {fixtures::bridged_cubic_graph(), 3},
        {fixtures::bundle_graph(5), 5},     {fixtures::complete_graph(6), 5},
    };
    for (const auto& [g, r] : items) {
        const bool fulkerson = find_pm_cover(g, 2 * r, CoverRule::ExactlyTwo).has_value();
        const bool berge = find_pm_cover(g, 2 * r - 1, CoverRule::AtLeastOne).has_value();
        CHECK(fulkerson == berge);
    }
    CHECK_FALSE(find_pm_cover(fixtures::bridged_cubic_graph(), 6, CoverRule::ExactlyTwo).has_value());
}
