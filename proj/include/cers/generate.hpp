#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cers/spec.hpp"

namespace cers {

/// Uniform-ish draw in [0, n); plain modulo keeps the stream portable.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n);

/// Random valid spec: faces F1..Fn, root F1, each new face attached at a
/// free non-adjacent position of a random earlier face. Growth stops early
/// only when no face has a free position left.
CersSpec random_spec(std::mt19937_64& rng, int max_faces, int max_face_length,
                     bool hexagons_only = false);

std::vector<CersSpec> random_corpus(std::uint64_t seed, int count, int max_faces,
                                    int max_face_length, bool hexagons_only = false);

struct SegmentEdit;  // equivalence.hpp

/// A random parity-preserving boundary edit that keeps the spec valid.
SegmentEdit random_valid_edit(std::mt19937_64& rng, const CersSpec& spec);

/// Systematic enumeration of all valid specs within the bounds, in a fixed
/// canonical order (root's first attachment pinned to position 0; rotated
/// duplicates of the root face are skipped, mirror images are not). The
/// visitor returns false to stop; the function reports whether it ran out.
bool enumerate_specs(int max_faces, int max_face_length,
                     const std::function<bool(const CersSpec&)>& visit,
                     bool hexagons_only = false);

}  // namespace cers
