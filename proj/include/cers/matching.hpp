#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cers/plane.hpp"

namespace cers {

/// Subset of the edge set, fixed width. Ordering is lexicographic on the
/// bit vector with edge 0 first ("000101" < "010001").
class Matching {
public:
    Matching() = default;
    explicit Matching(int edge_count)
        : n_(edge_count), words_((edge_count + 63) / 64, 0) {}

    int width() const { return n_; }
    bool contains(int e) const { return (words_[e >> 6] >> (e & 63)) & 1; }
    void insert(int e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(int e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    int size() const;
    std::vector<int> edge_list() const;
    Matching symmetric_difference(const Matching& other) const;

    bool operator==(const Matching& other) const = default;
    bool operator<(const Matching& other) const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// All perfect matchings in canonical (lexicographic) order, via
/// backtracking on the lowest uncovered vertex. This enumeration is the
/// ground truth the rest of the library is checked against. A valid ring
/// system always has one; an empty result throws.
std::vector<Matching> enumerate_perfect_matchings(const PlaneCers& g);

bool is_perfect_matching(const PlaneCers& g, const Matching& m);

/// For every ordered pair of adjacent faces, the two link edges must be
/// both in or both out of the matching. Throws when `m` is not a perfect
/// matching.
bool check_link_property(const PlaneCers& g, const Matching& m);

/// Edge set of a face as a Matching-shaped bitmask.
Matching face_edge_mask(const PlaneCers& g, int face);

}  // namespace cers
