#include "cers/generate.hpp"

#include <algorithm>
#include <stdexcept>

#include "cers/equivalence.hpp"

namespace cers {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    return n <= 1 ? 0 : rng() % n;
}

namespace {

std::vector<int> free_attachment_positions(const FaceSpec& face) {
    std::vector<bool> blocked(face.length, false);
    for (const auto& a : face.attachments) {
        blocked[a.position] = true;
        blocked[(a.position + 1) % face.length] = true;
        blocked[(a.position + face.length - 1) % face.length] = true;
    }
    std::vector<int> out;
    for (int q = 0; q < face.length; ++q)
        if (!blocked[q]) out.push_back(q);
    return out;
}

int random_even_length(std::mt19937_64& rng, int max_face_length, bool hexagons_only) {
    if (hexagons_only) return 6;
    int slots = (max_face_length - 4) / 2 + 1;
    return 4 + 2 * static_cast<int>(rand_below(rng, slots));
}

}  // namespace

CersSpec random_spec(std::mt19937_64& rng, int max_faces, int max_face_length,
                     bool hexagons_only) {
    if (max_faces < 1 || max_face_length < 4 || max_face_length % 2 != 0)
        throw std::invalid_argument("random_spec: bad bounds");
    int target = 1 + static_cast<int>(rand_below(rng, max_faces));

    CersSpec spec;
    spec.root = "F1";
    spec.faces.push_back({"F1", random_even_length(rng, max_face_length, hexagons_only), {}});

    for (int i = 2; i <= target; ++i) {
        std::vector<int> hosts;
        for (std::size_t f = 0; f < spec.faces.size(); ++f)
            if (!free_attachment_positions(spec.faces[f]).empty())
                hosts.push_back(static_cast<int>(f));
        if (hosts.empty()) break;
        int parent = hosts[rand_below(rng, hosts.size())];
        std::vector<int> free = free_attachment_positions(spec.faces[parent]);
        int q = free[rand_below(rng, free.size())];

        std::string id = "F" + std::to_string(i);
        spec.faces[parent].attachments.push_back({id, q});
        spec.faces.push_back({id, random_even_length(rng, max_face_length, hexagons_only),
                              {{spec.faces[parent].id, 0}}});
    }
    return spec;
}

std::vector<CersSpec> random_corpus(std::uint64_t seed, int count, int max_faces,
                                    int max_face_length, bool hexagons_only) {
    std::mt19937_64 rng(seed);
    std::vector<CersSpec> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_spec(rng, max_faces, max_face_length, hexagons_only));
    return out;
}

SegmentEdit random_valid_edit(std::mt19937_64& rng, const CersSpec& spec) {
    std::vector<SegmentEdit> candidates;
    for (const auto& face : spec.faces) {
        std::vector<int> segments = segment_lengths(face);
        for (std::size_t s = 0; s < segments.size(); ++s)
            for (int delta : {-4, -2, 2, 4})
                if (segments[s] + delta >= 1 && face.length + delta >= 4)
                    candidates.push_back({face.id, static_cast<int>(s), delta});
    }
    if (candidates.empty()) throw std::logic_error("random_valid_edit: no valid edit");
    return candidates[rand_below(rng, candidates.size())];
}

namespace {

struct Enumerator {
    int max_faces;
    int max_face_length;
    bool hexagons_only;
    const std::function<bool(const CersSpec&)>& visit;

    std::vector<int> lengths() const {
        if (hexagons_only) return {6};
        std::vector<int> out;
        for (int len = 4; len <= max_face_length; len += 2) out.push_back(len);
        return out;
    }

    // returns false when the visitor asked to stop
    bool grow(CersSpec& spec, int want) {
        if (static_cast<int>(spec.faces.size()) == want) return visit(spec);
        int index = static_cast<int>(spec.faces.size()) + 1;
        std::string id = "F" + std::to_string(index);
        for (std::size_t parent = 0; parent < spec.faces.size(); ++parent) {
            std::vector<int> free = free_attachment_positions(spec.faces[parent]);
            // the root face's indexing is arbitrary, so pin its first
            // attachment to position 0 and skip rotated repeats
            if (parent == 0 && spec.faces[0].attachments.empty()) free = {0};
            for (int q : free) {
                for (int len : lengths()) {
                    spec.faces[parent].attachments.push_back({id, q});
                    spec.faces.push_back({id, len, {{spec.faces[parent].id, 0}}});
                    bool keep = grow(spec, want);
                    spec.faces.pop_back();
                    spec.faces[parent].attachments.pop_back();
                    if (!keep) return false;
                }
            }
        }
        return true;
    }
};

}  // namespace

bool enumerate_specs(int max_faces, int max_face_length,
                     const std::function<bool(const CersSpec&)>& visit, bool hexagons_only) {
    if (max_faces < 1 || max_face_length < 4 || max_face_length % 2 != 0)
        throw std::invalid_argument("enumerate_specs: bad bounds");
    Enumerator en{max_faces, max_face_length, hexagons_only, visit};
    for (int n = 1; n <= max_faces; ++n) {
        for (int len : en.lengths()) {
            CersSpec spec;
            spec.root = "F1";
            spec.faces.push_back({"F1", len, {}});
            if (!en.grow(spec, n)) return false;
        }
    }
    return true;
}

}  // namespace cers
