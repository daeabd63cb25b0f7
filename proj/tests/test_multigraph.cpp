#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "rotg/errors.hpp"
#include "rotg/multigraph.hpp"
#include "rotg/tree.hpp"

using namespace rotg;

TEST_CASE("construction rejects loops and bad endpoints") {
    CHECK_THROWS_AS(MultiGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("degrees and multiplicity count parallel copies") {
    const auto bundle = fixtures::bundle_graph(5);
    CHECK(bundle.degree(0) == 5);
    CHECK(bundle.degree(1) == 5);
    CHECK(bundle.multiplicity(0, 1) == 5);
    CHECK_FALSE(bundle.is_simple());
    CHECK(fixtures::petersen_graph().is_simple());
}

TEST_CASE("boundary on the worked examples") {
    const auto c4 = fixtures::cycle_graph(4);
    CHECK(boundary(c4, {0, 1}).size() == 2);
    const auto k4 = fixtures::complete_graph(4);
    CHECK(boundary(k4, {0}).size() == 3);
    CHECK(boundary(fixtures::bundle_graph(5), {0}).size() == 5);
    CHECK_THROWS_AS(boundary(k4, {7}), std::invalid_argument);
}

TEST_CASE("neighbors on the worked examples") {
    CHECK(neighbors(fixtures::complete_graph(4), {0}) == std::vector<VertexId>{1, 2, 3});
    CHECK(neighbors(fixtures::cycle_graph(4), {0, 1}) == std::vector<VertexId>{2, 3});
    CHECK(neighbors(fixtures::bundle_graph(5), {0}) == std::vector<VertexId>{1});
}

TEST_CASE("connectivity convention") {
    CHECK(is_connected(MultiGraph(0)));
    CHECK(is_connected(fixtures::complete_graph(4)));
    MultiGraph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK_FALSE(is_connected(two_triangles));
}

TEST_CASE("spanning tree is the deterministic BFS tree") {
    const auto k4 = fixtures::complete_graph(4);
    const auto star = spanning_tree(k4, 0);
    CHECK(star.edges == std::vector<EdgeId>{0, 1, 2});  // the three edges at 0

    const auto path = fixtures::path_graph(3);
    CHECK(spanning_tree(path, 0).edges == std::vector<EdgeId>{0, 1});

    // frozen from running BFS by hand on the canonical Petersen labeling
    const auto petersen = fixtures::petersen_graph();
    const auto tree = spanning_tree(petersen, 0);
    CHECK(tree.edges == std::vector<EdgeId>{0, 1, 2, 3, 4, 7, 9, 10, 11});
    const auto ts = analyze_tree(petersen, tree);
    CHECK(ts.height == 2);

    MultiGraph split(2, {});
    CHECK_THROWS_AS(spanning_tree(split, 0), NoSpanningTreeError);
}

TEST_CASE("contract follows the dense relabeling convention") {
    const auto k4 = fixtures::complete_graph(4);
    const auto g = contract(k4, {0, 1});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 5);
    CHECK(g.multiplicity(2, 0) == 2);  // contracted vertex gets the top id
    CHECK(g.multiplicity(2, 1) == 2);
    CHECK(g.multiplicity(0, 1) == 1);

    const auto point = contract(fixtures::cycle_graph(3), {0, 1, 2});
    CHECK(point.vertex_count() == 1);
    CHECK(point.edge_count() == 0);

    // contracting one pentagon of the Petersen graph leaves the five spokes
    const auto quotient = contract(fixtures::petersen_graph(), {0, 1, 2, 3, 4});
    CHECK(quotient.degree(5) == 5);

    CHECK_THROWS_AS(contract(k4, {}), std::invalid_argument);
}

TEST_CASE("boundary is symmetric and degree sums are even") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto g = fixtures::random_connected_multigraph(rng, n, static_cast<int>(rng() % 12));
        std::vector<VertexId> s, complement;
        for (VertexId v = 0; v < n; ++v) (rng() % 2 ? s : complement).push_back(v);
        CHECK(boundary(g, s).size() == boundary(g, complement).size());
        long long degree_sum = 0;
        for (VertexId v = 0; v < n; ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2LL * g.edge_count());
    }
}

TEST_CASE("cut parity in regular graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const int r = (trial % 2) ? 3 : 4;
        const int n = (r % 2 == 1) ? 6 : 5 + static_cast<int>(rng() % 3);
        const auto g = fixtures::random_regular_multigraph(rng, (r * n) % 2 == 0 ? n : n + 1, r);
        std::vector<VertexId> s;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2) s.push_back(v);
        const int cut = static_cast<int>(boundary(g, s).size());
        CHECK((cut - r * static_cast<int>(s.size())) % 2 == 0);
    }
}

TEST_CASE("double contraction never produces loops") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const auto g = fixtures::random_connected_multigraph(rng, n, static_cast<int>(rng() % 10));
        std::vector<VertexId> s;
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 2) s.push_back(v);
        if (s.empty() || static_cast<int>(s.size()) == n) continue;
        const auto once = contract(g, s);
        // the complement image is everything but the merged vertex
        std::vector<VertexId> rest;
        for (VertexId v = 0; v + 1 < once.vertex_count(); ++v) rest.push_back(v);
        const auto twice = contract(once, rest);
        CHECK(twice.vertex_count() == 2);
        CHECK(twice.edge_count() == static_cast<int>(boundary(g, s).size()));
    }
}
