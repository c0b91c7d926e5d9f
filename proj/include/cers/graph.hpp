#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cers {

/// Small undirected simple graph used for the structural verifiers.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(int u, int v) const;
};

std::vector<int> bfs_distances(const SimpleGraph& g, int src);
std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_path_graph(const SimpleGraph& g);

/// Brute-force median verification: all-pairs BFS, then every vertex triple
/// must have exactly one vertex lying on shortest paths between each pair.
/// Requires a connected graph; refuses graphs above 5000 vertices.
bool is_median_graph(const SimpleGraph& g);

/// Length of a shortest cycle; std::nullopt for a forest.
std::optional<int> girth(const SimpleGraph& g);

std::vector<int> degree_one_vertices(const SimpleGraph& g);

std::vector<int> articulation_points(const SimpleGraph& g);

/// Connected, no cut vertex, at least three vertices.
bool is_two_connected(const SimpleGraph& g);

/// Drops the degree-one vertices (of the original graph, in one pass) and
/// checks 2-connectivity of what remains. Throws when nothing remains.
bool two_connected_after_leaf_removal(const SimpleGraph& g);

SimpleGraph remove_vertices(const SimpleGraph& g, const std::vector<int>& drop);

/// Backtracking isomorphism with degree/distance-profile refinement.
/// Returns a vertex bijection g1 -> g2 when one exists.
std::optional<std::vector<int>> graph_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2);
bool graph_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2);

/// Graph distance must equal Hamming distance for every vertex pair under
/// the given vertex -> bit string assignment. Throws on a size mismatch,
/// mixed code widths, or duplicate codes.
bool verify_isometric_embedding(const SimpleGraph& g, const std::vector<std::string>& codes);

}  // namespace cers
