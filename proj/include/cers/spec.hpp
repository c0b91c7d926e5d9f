#pragma once

#include <string>
#include <vector>

namespace cers {

/// One shared edge between two inner faces, seen from one face's side.
/// `position` indexes the face's cyclic edge list.
struct Attachment {
    std::string neighbor;
    int position = 0;

    friend bool operator==(const Attachment&, const Attachment&) = default;
};

/// An inner face: an even cycle together with the cyclic positions of its
/// shared edges. For a non-root face, position 0 is the edge shared with
/// its tree parent.
struct FaceSpec {
    std::string id;
    int length = 0;
    std::vector<Attachment> attachments;

    friend bool operator==(const FaceSpec&, const FaceSpec&) = default;

    const Attachment* find_attachment(const std::string& neighbor) const;
    /// Attachments in ascending position order.
    std::vector<Attachment> sorted_attachments() const;
};

/// A catacondensed even ring system described as a tree of inner faces.
struct CersSpec {
    std::string root;
    std::vector<FaceSpec> faces;

    friend bool operator==(const CersSpec&, const CersSpec&) = default;

    int face_index(const std::string& id) const;  // -1 when absent
    const FaceSpec* find_face(const std::string& id) const;
};

struct Violation {
    std::string face;  // empty when not tied to a single face
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks every structural rule: even face lengths >= 4, distinct and
/// cyclically non-adjacent attachment positions, symmetric attachment
/// records, the inner dual being a tree, and the parent edge of every
/// non-root face sitting at position 0. Violations are data, not errors.
ValidationReport validate_spec(const CersSpec& spec);

/// Throws std::invalid_argument with the full report when invalid.
void require_valid(const CersSpec& spec);

/// Lengths of the boundary segments of a face, in cyclic order; entry i is
/// the run of free edges following the i-th attachment (ascending position
/// order). A face without attachments has one segment, the whole cycle.
std::vector<int> segment_lengths(const FaceSpec& face);

/// Tree structure of a valid spec, oriented away from the root.
struct SpecTree {
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> children;  // ascending attachment position
    std::vector<int> preorder;               // depth-first from the root
};

SpecTree spec_tree(const CersSpec& spec);

}  // namespace cers
