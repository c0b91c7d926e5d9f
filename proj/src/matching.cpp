#include "cers/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cers {

int Matching::size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::vector<int> Matching::edge_list() const {
    std::vector<int> out;
    for (int e = 0; e < n_; ++e)
        if (contains(e)) out.push_back(e);
    return out;
}

Matching Matching::symmetric_difference(const Matching& other) const {
    Matching out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= other.words_[i];
    return out;
}

bool Matching::operator<(const Matching& other) const {
    // first differing edge decides; absent ('0') sorts before present ('1')
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t diff = words_[i] ^ other.words_[i];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (words_[i] & low) == 0;
        }
    }
    return false;
}

std::vector<Matching> enumerate_perfect_matchings(const PlaneCers& g) {
    std::vector<Matching> out;
    std::vector<char> covered(g.vertex_count, 0);
    Matching current(g.edge_count());

    auto recurse = [&](auto&& self, int from) -> void {
        int v = from;
        while (v < g.vertex_count && covered[v]) ++v;
        if (v == g.vertex_count) {
            out.push_back(current);
            return;
        }
        covered[v] = 1;
        for (int e : g.vertex_edges[v]) {
            int u = g.edges[e][0] == v ? g.edges[e][1] : g.edges[e][0];
            if (covered[u]) continue;
            covered[u] = 1;
            current.insert(e);
            self(self, v + 1);
            current.erase(e);
            covered[u] = 0;
        }
        covered[v] = 0;
    };
    recurse(recurse, 0);

    std::sort(out.begin(), out.end());
    if (out.empty())
        throw std::logic_error("enumerate_perfect_matchings: none found on a valid ring system");
    return out;
}

bool is_perfect_matching(const PlaneCers& g, const Matching& m) {
    if (m.width() != g.edge_count()) return false;
    std::vector<int> cover(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (m.contains(e)) {
            ++cover[g.edges[e][0]];
            ++cover[g.edges[e][1]];
        }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

bool check_link_property(const PlaneCers& g, const Matching& m) {
    if (!is_perfect_matching(g, m))
        throw std::invalid_argument("check_link_property: not a perfect matching");
    for (int f = 0; f < g.face_count(); ++f)
        for (const auto& att : g.face_attachments(f)) {
            auto pair = link(g, f, att.neighbor);
            if (m.contains(pair[0]) != m.contains(pair[1])) return false;
        }
    return true;
}

Matching face_edge_mask(const PlaneCers& g, int face) {
    Matching mask(g.edge_count());
    for (int e : g.faces[face].edge_cycle) mask.insert(e);
    return mask;
}

}  // namespace cers
