#include "cers/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace cers {

SimpleGraph SimpleGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("from_edges: bad edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("from_edges: parallel edge");
    g.edges = std::move(edges);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u : g.adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.n);
    for (int v = 0; v < g.n; ++v) dist.push_back(bfs_distances(g, v));
    return dist;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_bipartite(const SimpleGraph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int u : g.adj[v]) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    queue.push(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_path_graph(const SimpleGraph& g) {
    if (g.n == 0) return false;
    if (g.n == 1) return g.edge_count() == 0;
    if (g.edge_count() != g.n - 1 || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

namespace {

// interval table: bit x of row(u)[v] says x lies between u and v
class IntervalTable {
public:
    IntervalTable(const std::vector<std::vector<int>>& dist, int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * n * words_, 0) {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) {
                std::uint64_t* row = bits_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
                for (int x = 0; x < n_; ++x)
                    if (dist[u][x] + dist[x][v] == dist[u][v])
                        row[x >> 6] |= std::uint64_t{1} << (x & 63);
            }
    }

    int triple_median_count(int u, int v, int w) const {
        const std::uint64_t* uv = row(u, v);
        const std::uint64_t* uw = row(u, w);
        const std::uint64_t* vw = row(v, w);
        int count = 0;
        for (int i = 0; i < words_; ++i) count += std::popcount(uv[i] & uw[i] & vw[i]);
        return count;
    }

private:
    const std::uint64_t* row(int u, int v) const {
        return bits_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

bool is_median_graph(const SimpleGraph& g) {
    if (g.n == 0 || !is_connected(g))
        throw std::invalid_argument("is_median_graph: requires a non-empty connected graph");
    if (g.n > 5000)
        throw std::invalid_argument(
            "is_median_graph: brute-force check refuses graphs above 5000 vertices");
    if (g.n < 3) return true;

    auto dist = all_pairs_distances(g);
    if (g.n <= 1024) {
        IntervalTable table(dist, g.n);
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                for (int w = v + 1; w < g.n; ++w)
                    if (table.triple_median_count(u, v, w) != 1) return false;
        return true;
    }
    // above the table threshold: same check, scanning candidates per triple
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            for (int w = v + 1; w < g.n; ++w) {
                int count = 0;
                for (int x = 0; x < g.n && count < 2; ++x)
                    if (dist[u][x] + dist[x][v] == dist[u][v] &&
                        dist[u][x] + dist[x][w] == dist[u][w] &&
                        dist[v][x] + dist[x][w] == dist[v][w])
                        ++count;
                if (count != 1) return false;
            }
    return true;
}

std::optional<int> girth(const SimpleGraph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.n), via(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(via.begin(), via.end(), -1);
        std::queue<int> queue;
        dist[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int u : g.adj[v]) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    via[u] = v;
                    queue.push(u);
                } else if (via[v] != u) {
                    best = std::min(best, dist[v] + dist[u] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::vector<int> degree_one_vertices(const SimpleGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

namespace {

struct ArticulationState {
    const SimpleGraph& g;
    std::vector<int> tin, low;
    std::vector<bool> cut;
    int timer = 0;

    explicit ArticulationState(const SimpleGraph& graph)
        : g(graph), tin(graph.n, -1), low(graph.n, -1), cut(graph.n, false) {}

    void dfs(int v, int parent) {
        tin[v] = low[v] = timer++;
        int children = 0;
        for (int u : g.adj[v]) {
            if (u == parent) continue;
            if (tin[u] >= 0) {
                low[v] = std::min(low[v], tin[u]);
            } else {
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= tin[v] && parent >= 0) cut[v] = true;
                ++children;
            }
        }
        if (parent < 0 && children > 1) cut[v] = true;
    }
};

}  // namespace

std::vector<int> articulation_points(const SimpleGraph& g) {
    ArticulationState state(g);
    for (int v = 0; v < g.n; ++v)
        if (state.tin[v] < 0) state.dfs(v, -1);
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (state.cut[v]) out.push_back(v);
    return out;
}

bool is_two_connected(const SimpleGraph& g) {
    return g.n >= 3 && is_connected(g) && articulation_points(g).empty();
}

SimpleGraph remove_vertices(const SimpleGraph& g, const std::vector<int>& drop) {
    std::vector<bool> gone(g.n, false);
    for (int v : drop) gone[v] = true;
    std::vector<int> remap(g.n, -1);
    int kept = 0;
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) remap[v] = kept++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (!gone[u] && !gone[v]) edges.push_back({remap[u], remap[v]});
    return SimpleGraph::from_edges(kept, std::move(edges));
}

bool two_connected_after_leaf_removal(const SimpleGraph& g) {
    SimpleGraph residual = remove_vertices(g, degree_one_vertices(g));
    if (residual.n == 0)
        throw std::invalid_argument("two_connected_after_leaf_removal: empty residual graph");
    return is_two_connected(residual);
}

namespace {

// iterated refinement: color by degree + distance profile, then by the
// multiset of neighbor colors until stable
std::vector<int> stable_colors(const SimpleGraph& g) {
    // ids must depend on the signature alone (not on vertex numbering) so
    // that colors are comparable between two different graphs
    auto assign = [&g](const std::vector<std::vector<int>>& sig) {
        std::map<std::vector<int>, int> palette;
        for (const auto& s : sig) palette.emplace(s, 0);
        int next_id = 0;
        for (auto& [key, id] : palette) id = next_id++;
        std::vector<int> color(g.n);
        for (int v = 0; v < g.n; ++v) color[v] = palette.at(sig[v]);
        return std::pair(color, next_id);
    };

    auto dist = all_pairs_distances(g);
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
        sig[v] = dist[v];
        std::sort(sig[v].begin(), sig[v].end());
        sig[v].push_back(g.degree(v));
    }
    auto [color, classes] = assign(sig);
    while (true) {
        for (int v = 0; v < g.n; ++v) {
            sig[v].clear();
            sig[v].push_back(color[v]);
            for (int u : g.adj[v]) sig[v].push_back(color[u]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        auto [next, next_classes] = assign(sig);
        bool stable = next_classes == classes;
        color = std::move(next);
        classes = next_classes;
        if (stable) return color;
    }
}

std::vector<int> color_histogram(const std::vector<int>& color) {
    int top = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<int> hist(top, 0);
    for (int c : color) ++hist[c];
    return hist;
}

}  // namespace

std::optional<std::vector<int>> graph_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2) {
    if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (g1.n == 0) return std::vector<int>{};

    // refinement colors must agree as multisets; they also prune the search
    std::vector<int> c1 = stable_colors(g1);
    std::vector<int> c2 = stable_colors(g2);
    if (color_histogram(c1) != color_histogram(c2)) return std::nullopt;

    std::vector<int> hist = color_histogram(c1);

    // order: rarest color class first, then prefer vertices touching the
    // already-mapped region so adjacency constraints bite early
    std::vector<int> order;
    {
        std::vector<bool> placed(g1.n, false);
        for (int step = 0; step < g1.n; ++step) {
            int best = -1;
            long best_key = std::numeric_limits<long>::max();
            for (int v = 0; v < g1.n; ++v) {
                if (placed[v]) continue;
                int mapped_neighbors = 0;
                for (int u : g1.adj[v])
                    if (placed[u]) ++mapped_neighbors;
                long key = -static_cast<long>(mapped_neighbors) * 100000 + hist[c1[v]] * 100 -
                           g1.degree(v);
                if (key < best_key) {
                    best_key = key;
                    best = v;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
    }

    std::vector<int> map1(g1.n, -1), used2(g2.n, 0);

    auto fits = [&](int v, int w) {
        if (c1[v] != c2[w]) return false;
        for (int u : g1.adj[v]) {
            if (map1[u] < 0) continue;
            if (!g2.adjacent(w, map1[u])) return false;
        }
        // mapped neighbor counts must agree both ways
        int back = 0;
        for (int x : g2.adj[w])
            if (used2[x]) ++back;
        int forward = 0;
        for (int u : g1.adj[v])
            if (map1[u] >= 0) ++forward;
        return back == forward;
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < g2.n; ++w) {
            if (used2[w] || !fits(v, w)) continue;
            map1[v] = w;
            used2[w] = 1;
            if (self(self, depth + 1)) return true;
            map1[v] = -1;
            used2[w] = 0;
        }
        return false;
    };

    if (!recurse(recurse, 0)) return std::nullopt;
    return map1;
}

bool graph_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2) {
    return graph_isomorphism(g1, g2).has_value();
}

bool verify_isometric_embedding(const SimpleGraph& g, const std::vector<std::string>& codes) {
    if (static_cast<int>(codes.size()) != g.n)
        throw std::invalid_argument("verify_isometric_embedding: one code per vertex required");
    for (const auto& c : codes)
        if (c.size() != codes[0].size())
            throw std::invalid_argument("verify_isometric_embedding: mixed code widths");
    {
        std::vector<std::string> sorted = codes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("verify_isometric_embedding: duplicate codes");
    }

    auto hamming = [](const std::string& a, const std::string& b) {
        int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
        return d;
    };
    for (int u = 0; u < g.n; ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.n; ++v)
            if (dist[v] != hamming(codes[u], codes[v])) return false;
    }
    return true;
}

}  // namespace cers
