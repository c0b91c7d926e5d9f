#pragma once

#include <vector>

#include "cers/graph.hpp"
#include "cers/matching.hpp"

namespace cers {

struct ResonanceEdge {
    int u = 0;
    int v = 0;
    int face = 0;  // the inner face the two matchings rotate
};

/// Vertices are the perfect matchings (canonical order); two matchings are
/// adjacent when their symmetric difference is the edge set of exactly one
/// inner face.
struct ResonanceGraph {
    std::vector<Matching> vertices;
    std::vector<ResonanceEdge> edges;

    SimpleGraph skeleton() const;
};

/// `matchings` must be the full canonical output of
/// enumerate_perfect_matchings for the same ring system.
ResonanceGraph build_resonance_graph(const PlaneCers& g, const std::vector<Matching>& matchings);

}  // namespace cers
