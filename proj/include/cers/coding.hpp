#pragma once

#include <string>
#include <vector>

#include "cers/graph.hpp"
#include "cers/matching.hpp"
#include "cers/plane.hpp"

namespace cers {

enum class OrderStrategy { Bfs, Dfs };

/// A well-ordering of the inner faces: starts at a terminal root face and
/// every face appears after its tree predecessor. Sibling ties break by
/// ascending face id.
struct FaceOrdering {
    std::vector<int> faces;  // face indices; faces[0] is the root
    OrderStrategy strategy = OrderStrategy::Bfs;
    int root = 0;

    /// 1-based rank of a face; bit k of a code belongs to the rank-k face.
    int rank(int face) const;
};

/// Throws when `root_face` is not terminal (tree degree above one).
FaceOrdering well_order_faces(const PlaneCers& g, int root_face, OrderStrategy strategy);

/// The spec root when terminal, otherwise the terminal face with the
/// smallest id.
int default_coding_root(const PlaneCers& g);

struct CodeSet {
    std::vector<std::string> codes;  // sorted; bit for the rank-1 face leftmost
    FaceOrdering ordering;
};

/// Builds the code set face by face. Both faces of a two-face system give
/// {00, 01, 10}; a lone face gives {0, 1}. When face k arrives, j is its
/// already-placed neighbor and i the smallest-rank neighbor of j; a Regular
/// (i, j, k) triple admits the new 1-bit exactly on codes with bit j zero,
/// an Irregular one exactly on codes with bit j one.
CodeSet binary_codes(const PlaneCers& g, const FaceOrdering& ordering);

/// Vertices are the codes (sorted order), adjacent at Hamming distance one.
SimpleGraph code_graph(const CodeSet& codes);

/// Explicit code -> perfect matching bijection, aligned with CodeSet order.
struct CodedMatchingMap {
    CodeSet code_set;
    std::vector<Matching> matchings;  // matchings[i] belongs to code_set.codes[i]

    int index_of_code(const std::string& code) const;  // -1 when absent
    int index_of_matching(const Matching& m) const;    // -1 when absent
};

/// Carries the coding construction on matchings: appending 0 extends a
/// matching over the new face's fresh vertices, appending 1 additionally
/// rotates the new face. The codes eligible for the 1-bit must be exactly
/// the codes whose extension contains the new shared edge; any mismatch is
/// an internal contradiction and throws.
CodedMatchingMap coded_matchings(const PlaneCers& g, const FaceOrdering& ordering);

}  // namespace cers
