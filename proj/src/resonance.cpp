#include "cers/resonance.hpp"

#include <algorithm>
#include <stdexcept>

namespace cers {

SimpleGraph ResonanceGraph::skeleton() const {
    std::vector<std::pair<int, int>> simple;
    simple.reserve(edges.size());
    for (const auto& e : edges) simple.push_back({e.u, e.v});
    return SimpleGraph::from_edges(static_cast<int>(vertices.size()), std::move(simple));
}

ResonanceGraph build_resonance_graph(const PlaneCers& g,
                                     const std::vector<Matching>& matchings) {
    if (!std::is_sorted(matchings.begin(), matchings.end()))
        throw std::invalid_argument("build_resonance_graph: matchings not in canonical order");

    std::vector<Matching> face_masks;
    face_masks.reserve(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) face_masks.push_back(face_edge_mask(g, f));

    ResonanceGraph r;
    r.vertices = matchings;
    const int m = static_cast<int>(matchings.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Matching diff = matchings[i].symmetric_difference(matchings[j]);
            for (int f = 0; f < g.face_count(); ++f)
                if (diff == face_masks[f]) {
                    r.edges.push_back({i, j, f});
                    break;
                }
        }
    return r;
}

}  // namespace cers
