#pragma once

#include <array>
#include <string>
#include <vector>

#include "cers/spec.hpp"

namespace cers {

enum class TripleClass { Regular, Irregular };

struct PlaneFace {
    std::string id;
    // Counterclockwise boundary; edge_cycle[k] joins vertex_cycle[k] to
    // vertex_cycle[(k+1) % length]. For a non-root face, position 0 is the
    // edge shared with its construction parent.
    std::vector<int> edge_cycle;
    std::vector<int> vertex_cycle;
    int parent = -1;
    int parent_edge = -1;

    int length() const { return static_cast<int>(edge_cycle.size()); }
};

/// A realized ring system: simple bipartite plane graph whose inner faces
/// are even cycles and whose inner dual is a tree. Every vertex lies on the
/// outer boundary; vertex degrees are 2 or 3.
struct PlaneCers {
    int vertex_count = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<PlaneFace> faces;  // same order as the spec
    int root = 0;
    std::vector<int> outer_boundary;  // cyclic edge list

    // filled by realize()
    std::vector<std::vector<int>> vertex_edges;   // ascending edge index
    std::vector<std::array<int, 2>> edge_faces_;  // inner faces; -1 = outer side

    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int face_index(const std::string& id) const;
    bool boundary_edge(int e) const { return edge_faces_[e][1] < 0; }
    const std::array<int, 2>& edge_faces(int e) const { return edge_faces_[e]; }
    int shared_edge(int f, int g) const;  // -1 when the faces are not adjacent

    struct FaceAttachment {
        int position;
        int neighbor;
        int edge;
    };
    /// Shared edges of a face in ascending position order.
    std::vector<FaceAttachment> face_attachments(int f) const;
};

/// Deterministic combinatorial embedding of a valid spec. Vertices and edges
/// are indexed in construction order: the root cycle first, then each child
/// face depth-first in ascending attachment position, a child of length L
/// contributing L-2 fresh vertices behind its parent edge.
PlaneCers realize(const CersSpec& spec);

/// Face adjacency lists (ascending), one entry per face. Always a tree.
std::vector<std::vector<int>> inner_dual(const PlaneCers& g);

struct BoundarySegment {
    int face = -1;
    std::vector<int> edges;  // consecutive run along the face cycle
};

/// Maximal runs of outer-boundary edges of a face, in cyclic order; run i
/// follows the face's i-th shared edge. A lone face yields one run of all
/// its edges.
std::vector<BoundarySegment> boundary_segments(const PlaneCers& g, int face);

/// The two edges of `f` with exactly one endpoint on `f_other`. They flank
/// the shared edge. Throws when the faces are not adjacent.
std::array<int, 2> link(const PlaneCers& g, int f, int f_other);

/// Distance between edges in the line graph: 0 for e == f, otherwise one
/// more than the smallest vertex distance between their endpoints.
int edge_distance(const PlaneCers& g, int e, int f);

/// Classifies the triple (f, f_mid, f2) of inner faces where f_mid is
/// adjacent to both others: Regular iff the distance between the two shared
/// edges is even. Throws on non-adjacent input or f == f2.
TripleClass classify_triple(const PlaneCers& g, int f, int f_mid, int f2);

}  // namespace cers
