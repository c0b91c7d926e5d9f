#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cers/plane.hpp"
#include "cers/spec.hpp"

namespace cers {

/// One parity-preserving boundary move: grow or shrink one boundary segment
/// of one face by an even number of edges. `segment` is the cyclic segment
/// index as produced by segment_lengths().
struct SegmentEdit {
    std::string face;
    int segment = 0;
    int delta = 0;  // even; negative smooths, positive subdivides
};

/// Applies the edit: the face's length changes by delta and attachment
/// positions after the edited segment shift along. Throws on odd delta, a
/// segment shrunk below one edge, or a face shrunk below length four.
CersSpec apply_transformation(const CersSpec& spec, const SegmentEdit& edit);

/// Reduces every boundary segment to the smallest length of the same
/// parity (1 or 2; 3 for the lone segment of a terminal face; a lone face
/// becomes a 4-cycle) and re-anchors each face at its first attachment.
/// Idempotent; face ids survive.
CersSpec canonical_form(const CersSpec& spec);

/// Mirror image: every face's cyclic order reversed.
CersSpec reflect_spec(const CersSpec& spec);

/// Whether the two systems are connected by boundary moves, decided by
/// comparing canonical forms up to face relabeling, choice of root, and
/// (unless disallowed) global reflection.
bool resonantly_equivalent(const CersSpec& a, const CersSpec& b, bool allow_reflection = true);

/// No face has more than three neighbors and every face triple through a
/// three-neighbor face is Regular.
bool is_normal(const PlaneCers& g);

/// Equivalent all-hexagon system for a normal input: a two-neighbor face
/// keeps its triple class (Regular -> attachments {0,2}, Irregular ->
/// {0,3}); a three-neighbor face becomes {0,2,4}. Throws when the input is
/// not normal.
CersSpec to_benzenoid(const CersSpec& spec);

/// Splices a 4-cycle between every pair of adjacent hexagons, attached at
/// its positions 0 and 2. Throws when some face is not a hexagon.
CersSpec benzenoid_to_phenylene(const CersSpec& spec);

struct WitnessBounds {
    int max_faces = 4;
    int max_face_length = 8;
};

enum class WitnessScope { NonNormal, Normal, All };

/// A ring system whose resonance graph fails the necessary shape of
/// hexagon-system resonance graphs: not a path, yet of girth other than
/// four or with a leaf-stripped residual that is not 2-connected.
struct NonbenzenoidWitness {
    CersSpec spec;
    std::string reason;        // "girth" or "residual"
    bool residual_cut_vertex;  // the residual is connected but has a cut vertex
};

std::vector<NonbenzenoidWitness> find_nonbenzenoid_witnesses(const WitnessBounds& bounds,
                                                             WitnessScope scope,
                                                             std::size_t max_results);

/// First witness in canonical enumeration order, if any.
std::optional<NonbenzenoidWitness> find_nonbenzenoid_witness(
    const WitnessBounds& bounds, WitnessScope scope = WitnessScope::NonNormal);

}  // namespace cers
