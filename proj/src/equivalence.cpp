#include "cers/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

#include "cers/generate.hpp"
#include "cers/matching.hpp"
#include "cers/resonance.hpp"

namespace cers {

CersSpec apply_transformation(const CersSpec& spec, const SegmentEdit& edit) {
    require_valid(spec);
    int fi = spec.face_index(edit.face);
    if (fi < 0) throw std::invalid_argument("apply_transformation: unknown face " + edit.face);
    if (edit.delta % 2 != 0)
        throw std::invalid_argument("apply_transformation: delta must be even");

    CersSpec out = spec;
    FaceSpec& face = out.faces[fi];
    std::vector<int> segments = segment_lengths(face);
    if (edit.segment < 0 || edit.segment >= static_cast<int>(segments.size()))
        throw std::invalid_argument("apply_transformation: bad segment index");
    if (segments[edit.segment] + edit.delta < 1)
        throw std::invalid_argument("apply_transformation: segment would vanish");
    if (face.length + edit.delta < 4)
        throw std::invalid_argument("apply_transformation: face would fall below length 4");
    if (edit.delta == 0) return out;

    std::vector<Attachment> atts = face.sorted_attachments();
    if (atts.empty()) {
        face.length += edit.delta;
        return out;
    }

    const int k = static_cast<int>(atts.size());
    int anchor = atts[edit.segment].position;  // segment i follows attachment i
    // Positions after the anchor shift by delta. The wrap-around segment of
    // a root face may spill past position 0; shrinking it eats the tail run
    // first and only then shifts everything off the head run.
    int shift_head = 0;
    if (edit.delta < 0 && edit.segment == k - 1) {
        int tail = face.length - 1 - atts[k - 1].position;
        if (-edit.delta > tail) shift_head = -edit.delta - tail;
    }
    for (auto& a : face.attachments) {
        if (a.position > anchor) a.position += edit.delta;
        a.position -= shift_head;
        if (a.position < 0) throw std::logic_error("apply_transformation: position underflow");
    }
    face.length += edit.delta;

    ValidationReport check = validate_spec(out);
    if (!check.ok())
        throw std::logic_error("apply_transformation: produced an invalid spec:\n" +
                               check.to_string());
    return out;
}

namespace {

int minimal_segment(int length, bool lone_terminal_segment, bool lone_face) {
    if (lone_face) return 4;                      // whole cycle, keep length >= 4
    if (lone_terminal_segment) return 3;          // parity odd, face stays a 4-cycle
    return length % 2 == 0 ? 2 : 1;
}

void rebuild_positions(FaceSpec& face, const std::vector<int>& segments) {
    std::vector<Attachment> atts = face.sorted_attachments();
    const int k = static_cast<int>(atts.size());
    int total = 0;
    for (int s : segments) total += s;
    face.length = k == 0 ? segments[0] : k + total;
    int pos = 0;
    for (int i = 0; i < k; ++i) {
        atts[i].position = pos;
        pos += 1 + segments[i];
    }
    face.attachments = atts;
}

}  // namespace

CersSpec canonical_form(const CersSpec& spec) {
    require_valid(spec);
    CersSpec out = spec;
    for (auto& face : out.faces) {
        std::vector<int> segments = segment_lengths(face);
        const int k = static_cast<int>(face.attachments.size());
        std::vector<int> reduced;
        reduced.reserve(segments.size());
        for (int s : segments) reduced.push_back(minimal_segment(s, k == 1, k == 0));
        rebuild_positions(face, reduced);
    }
    return out;
}

CersSpec reflect_spec(const CersSpec& spec) {
    require_valid(spec);
    SpecTree tree = spec_tree(spec);
    CersSpec out = spec;
    for (std::size_t f = 0; f < out.faces.size(); ++f) {
        FaceSpec& face = out.faces[f];
        for (auto& a : face.attachments) a.position = face.length - 1 - a.position;
        // restore the parent-at-zero convention by rotating the indexing
        if (tree.parent[f] >= 0) {
            int base = face.find_attachment(spec.faces[tree.parent[f]].id)->position;
            for (auto& a : face.attachments)
                a.position = ((a.position - base) % face.length + face.length) % face.length;
        }
        std::sort(face.attachments.begin(), face.attachments.end(),
                  [](const Attachment& a, const Attachment& b) { return a.position < b.position; });
    }
    return out;
}

namespace {

/// Canonical string of the embedded face tree seen from `face` arriving via
/// `parent` (-1 at the traversal root, where all rotations compete).
/// Cyclic structure per face: attachments in position order with the
/// segment gaps between them.
struct TreeEncoder {
    const CersSpec& spec;

    std::string encode(int face, int parent) const {
        const FaceSpec& f = spec.faces[face];
        std::vector<Attachment> atts = f.sorted_attachments();
        std::vector<int> gaps = segment_lengths(f);
        const int k = static_cast<int>(atts.size());
        if (k == 0) return "(" + std::to_string(f.length) + ")";

        auto rotation = [&](int start) {
            std::string s = "(" + std::to_string(f.length) + "|";
            for (int i = 0; i < k; ++i) {
                int at = (start + i) % k;
                if (i > 0) {
                    int nb = spec.face_index(atts[at].neighbor);
                    s += encode(nb, face);
                    s += ',';
                }
                s += std::to_string(gaps[at]);
                s += ',';
            }
            s += ')';
            return s;
        };

        if (parent >= 0) {
            int start = -1;
            for (int i = 0; i < k; ++i)
                if (spec.face_index(atts[i].neighbor) == parent) start = i;
            if (start < 0) throw std::logic_error("TreeEncoder: parent not attached");
            return rotation(start);
        }
        std::string best;
        for (int start = 0; start < k; ++start) {
            // at the root every attachment is a subtree; fold it into the
            // rotation by treating the start attachment as "parent" and
            // appending its encoding up front
            std::string s = encode(spec.face_index(atts[start].neighbor), face) + rotation(start);
            if (best.empty() || s < best) best = s;
        }
        return best;
    }
};

std::string embedding_key(const CersSpec& spec) {
    TreeEncoder enc{spec};
    std::string best;
    for (std::size_t f = 0; f < spec.faces.size(); ++f) {
        std::string s = enc.encode(static_cast<int>(f), -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

bool resonantly_equivalent(const CersSpec& a, const CersSpec& b, bool allow_reflection) {
    CersSpec ca = canonical_form(a);
    CersSpec cb = canonical_form(b);
    std::string kb = embedding_key(cb);
    if (embedding_key(ca) == kb) return true;
    if (!allow_reflection) return false;
    return embedding_key(canonical_form(reflect_spec(ca))) == kb;
}

bool is_normal(const PlaneCers& g) {
    for (int f = 0; f < g.face_count(); ++f) {
        auto atts = g.face_attachments(f);
        if (atts.size() > 3) return false;
        if (atts.size() == 3) {
            for (std::size_t i = 0; i < atts.size(); ++i)
                for (std::size_t j = i + 1; j < atts.size(); ++j)
                    if (classify_triple(g, atts[i].neighbor, f, atts[j].neighbor) !=
                        TripleClass::Regular)
                        return false;
        }
    }
    return true;
}

CersSpec to_benzenoid(const CersSpec& spec) {
    PlaneCers g = realize(spec);
    if (!is_normal(g)) throw std::invalid_argument("to_benzenoid: input is not normal");

    CersSpec out = spec;
    for (std::size_t f = 0; f < out.faces.size(); ++f) {
        FaceSpec& face = out.faces[f];
        std::vector<Attachment> atts = face.sorted_attachments();
        face.length = 6;
        switch (atts.size()) {
            case 0:
                break;
            case 1:
                atts[0].position = 0;
                break;
            case 2: {
                int n0 = g.face_index(atts[0].neighbor);
                int n1 = g.face_index(atts[1].neighbor);
                bool regular = classify_triple(g, n0, static_cast<int>(f), n1) ==
                               TripleClass::Regular;
                atts[0].position = 0;
                atts[1].position = regular ? 2 : 3;
                break;
            }
            case 3:
                for (int i = 0; i < 3; ++i) atts[i].position = 2 * i;
                break;
            default:
                throw std::logic_error("to_benzenoid: normal face with over three neighbors");
        }
        face.attachments = atts;
    }
    ValidationReport check = validate_spec(out);
    if (!check.ok())
        throw std::logic_error("to_benzenoid: produced an invalid spec:\n" + check.to_string());
    return out;
}

CersSpec benzenoid_to_phenylene(const CersSpec& spec) {
    require_valid(spec);
    for (const auto& f : spec.faces)
        if (f.length != 6)
            throw std::invalid_argument("benzenoid_to_phenylene: face " + f.id +
                                        " is not a hexagon");
    SpecTree tree = spec_tree(spec);

    auto square_id = [&spec](const std::string& child) {
        std::string id = child + "#sq";
        while (spec.face_index(id) >= 0) id += '\'';
        return id;
    };

    CersSpec out;
    out.root = spec.root;
    out.faces = spec.faces;
    // hexagons keep their attachment positions; each tree edge gains a
    // para square between parent and child
    for (std::size_t child = 0; child < spec.faces.size(); ++child) {
        int parent = tree.parent[child];
        if (parent < 0) continue;
        std::string sq = square_id(spec.faces[child].id);
        const std::string& pid = spec.faces[parent].id;
        const std::string& cid = spec.faces[child].id;

        for (auto& a : out.faces[parent].attachments)
            if (a.neighbor == cid) a.neighbor = sq;
        for (auto& a : out.faces[child].attachments)
            if (a.neighbor == pid) a.neighbor = sq;
        out.faces.push_back({sq, 4, {{pid, 0}, {cid, 2}}});
    }
    ValidationReport check = validate_spec(out);
    if (!check.ok())
        throw std::logic_error("benzenoid_to_phenylene: produced an invalid spec:\n" +
                               check.to_string());
    return out;
}

std::vector<NonbenzenoidWitness> find_nonbenzenoid_witnesses(const WitnessBounds& bounds,
                                                             WitnessScope scope,
                                                             std::size_t max_results) {
    std::vector<NonbenzenoidWitness> out;
    enumerate_specs(bounds.max_faces, bounds.max_face_length, [&](const CersSpec& spec) {
        PlaneCers g = realize(spec);
        bool normal = is_normal(g);
        if (scope == WitnessScope::NonNormal && normal) return true;
        if (scope == WitnessScope::Normal && !normal) return true;

        auto matchings = enumerate_perfect_matchings(g);
        SimpleGraph r = build_resonance_graph(g, matchings).skeleton();
        if (is_path_graph(r)) return true;  // the necessary condition is vacuous

        auto ring = girth(r);
        if (ring && *ring == 4) {
            SimpleGraph residual = remove_vertices(r, degree_one_vertices(r));
            if (residual.n > 0 && is_two_connected(residual)) return true;
            bool cut = residual.n > 0 && is_connected(residual) &&
                       !articulation_points(residual).empty();
            out.push_back({spec, "residual", cut});
        } else {
            out.push_back({spec, "girth", false});
        }
        return out.size() < max_results;
    });
    return out;
}

std::optional<NonbenzenoidWitness> find_nonbenzenoid_witness(const WitnessBounds& bounds,
                                                             WitnessScope scope) {
    auto found = find_nonbenzenoid_witnesses(bounds, scope, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

}  // namespace cers
