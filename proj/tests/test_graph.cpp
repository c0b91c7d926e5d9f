#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cers/graph.hpp"

using cers::SimpleGraph;

namespace {

SimpleGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph::from_edges(n, std::move(edges));
}

SimpleGraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph::from_edges(n, std::move(edges));
}

SimpleGraph star_k13() { return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

SimpleGraph c4_with_tail() {
    return SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}});
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return SimpleGraph::from_edges(g.n, std::move(edges));
}

}  // namespace

TEST_CASE("from_edges normalizes and rejects bad input") {
    auto g = SimpleGraph::from_edges(3, {{2, 1}, {0, 1}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(SimpleGraph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SimpleGraph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("distances, connectivity, bipartiteness") {
    auto c6 = cycle(6);
    CHECK(cers::bfs_distances(c6, 0) == std::vector<int>{0, 1, 2, 3, 2, 1});
    CHECK(cers::is_connected(c6));
    CHECK(cers::is_bipartite(c6));
    CHECK_FALSE(cers::is_bipartite(cycle(5)));

    auto two_parts = SimpleGraph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(cers::is_connected(two_parts));
    CHECK(cers::bfs_distances(two_parts, 0)[2] == -1);
}

TEST_CASE("path recognition") {
    CHECK(cers::is_path_graph(path(1)));
    CHECK(cers::is_path_graph(path(2)));
    CHECK(cers::is_path_graph(path(7)));
    CHECK_FALSE(cers::is_path_graph(cycle(4)));
    CHECK_FALSE(cers::is_path_graph(star_k13()));
    CHECK_FALSE(cers::is_path_graph(c4_with_tail()));
}

TEST_CASE("girth") {
    CHECK(cers::girth(cycle(4)) == 4);
    CHECK(cers::girth(cycle(7)) == 7);
    CHECK(cers::girth(c4_with_tail()) == 4);
    CHECK_FALSE(cers::girth(path(5)).has_value());
    CHECK_FALSE(cers::girth(star_k13()).has_value());
    auto k4 = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(cers::girth(k4) == 3);
}

TEST_CASE("median recognition") {
    CHECK(cers::is_median_graph(path(1)));
    CHECK(cers::is_median_graph(path(6)));
    CHECK(cers::is_median_graph(star_k13()));
    CHECK(cers::is_median_graph(cycle(4)));
    // the three pairwise-antipodal vertices of a six cycle have no median
    CHECK_FALSE(cers::is_median_graph(cycle(6)));
    CHECK_FALSE(cers::is_median_graph(cycle(5)));
    // cube graph
    std::vector<std::pair<int, int>> q3;
    for (int u = 0; u < 8; ++u)
        for (int b : {1, 2, 4})
            if (u < (u ^ b)) q3.emplace_back(u, u ^ b);
    CHECK(cers::is_median_graph(SimpleGraph::from_edges(8, q3)));
    // K_{2,3} is bipartite but two degree-three vertices have three medians
    auto k23 = SimpleGraph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK_FALSE(cers::is_median_graph(k23));
    CHECK_THROWS_AS(cers::is_median_graph(SimpleGraph::from_edges(2, {})),
                    std::invalid_argument);
}

TEST_CASE("articulation points and two-connectivity") {
    CHECK(cers::articulation_points(cycle(5)).empty());
    CHECK(cers::articulation_points(path(3)) == std::vector<int>{1});
    CHECK(cers::articulation_points(c4_with_tail()) == std::vector<int>{2});
    CHECK(cers::is_two_connected(cycle(3)));
    CHECK(cers::is_two_connected(cycle(8)));
    CHECK_FALSE(cers::is_two_connected(path(3)));
    CHECK_FALSE(cers::is_two_connected(path(2)));  // too small
    CHECK_FALSE(cers::is_two_connected(c4_with_tail()));

    // two squares glued at a vertex
    auto bowtie = SimpleGraph::from_edges(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    CHECK(cers::articulation_points(bowtie) == std::vector<int>{3});
}

TEST_CASE("residual graph after trimming leaves") {
    CHECK(cers::two_connected_after_leaf_removal(c4_with_tail()));
    // a square with two tails hanging off opposite corners
    auto g = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}});
    CHECK(cers::two_connected_after_leaf_removal(g));
    CHECK_FALSE(cers::two_connected_after_leaf_removal(path(4)));
    // star collapses to a single vertex: not two-connected
    CHECK_FALSE(cers::two_connected_after_leaf_removal(star_k13()));
    // path(2) trims away completely
    CHECK_THROWS_AS(cers::two_connected_after_leaf_removal(path(2)), std::invalid_argument);
}

TEST_CASE("remove_vertices keeps the rest intact") {
    auto g = c4_with_tail();
    auto res = cers::remove_vertices(g, {4});
    CHECK(res.n == 4);
    CHECK(res.edge_count() == 4);
    CHECK(cers::is_two_connected(res));
}

TEST_CASE("isomorphism accepts relabelings") {
    std::mt19937_64 rng(5);
    for (const auto& g : {cycle(6), c4_with_tail(), star_k13(), path(7)}) {
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        auto mapping = cers::graph_isomorphism(g, h);
        REQUIRE(mapping.has_value());
        // witness must be a real isomorphism
        for (const auto& [u, v] : g.edges) CHECK(h.adjacent((*mapping)[u], (*mapping)[v]));
        std::vector<int> sorted = *mapping;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < g.n; ++i) CHECK(sorted[i] == i);
    }
}

TEST_CASE("isomorphism rejects look-alikes") {
    CHECK_FALSE(cers::graph_isomorphic(path(4), star_k13()));
    // same order and size, all degrees two: a hexagon vs two triangles
    auto two_triangles =
        SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(cers::graph_isomorphic(cycle(6), two_triangles));
    CHECK_FALSE(cers::graph_isomorphic(cycle(6), cycle(5)));
    // regular pair needing refinement beyond degrees: C8 vs two squares
    auto two_squares = SimpleGraph::from_edges(
        8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
    CHECK_FALSE(cers::graph_isomorphic(cycle(8), two_squares));
}

TEST_CASE("hypercube labelings verify as isometric") {
    auto c4 = cycle(4);
    CHECK(cers::verify_isometric_embedding(c4, {"00", "01", "11", "10"}));
    // swapping two labels breaks it
    CHECK_FALSE(cers::verify_isometric_embedding(c4, {"00", "11", "01", "10"}));
    // a six cycle embeds into the three-cube
    CHECK(cers::verify_isometric_embedding(cycle(6),
                                           {"000", "001", "011", "111", "110", "100"}));
    // a path with a non-isometric labeling: endpoint codes too close
    CHECK_FALSE(cers::verify_isometric_embedding(path(3), {"00", "01", "10"}));
    CHECK_THROWS_AS(cers::verify_isometric_embedding(path(3), {"00", "01", "00"}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cers::verify_isometric_embedding(c4, {"00", "01"}), std::invalid_argument);
    CHECK_THROWS_AS(cers::verify_isometric_embedding(c4, {"00", "01", "1", "10"}),
                    std::invalid_argument);
}
