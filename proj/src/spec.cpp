#include "cers/spec.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cers {

const Attachment* FaceSpec::find_attachment(const std::string& neighbor) const {
    for (const auto& a : attachments)
        if (a.neighbor == neighbor) return &a;
    return nullptr;
}

std::vector<Attachment> FaceSpec::sorted_attachments() const {
    std::vector<Attachment> out = attachments;
    std::sort(out.begin(), out.end(),
              [](const Attachment& a, const Attachment& b) { return a.position < b.position; });
    return out;
}

int CersSpec::face_index(const std::string& id) const {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].id == id) return static_cast<int>(i);
    return -1;
}

const FaceSpec* CersSpec::find_face(const std::string& id) const {
    int i = face_index(id);
    return i < 0 ? nullptr : &faces[i];
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream out;
    for (const auto& v : violations) {
        if (!v.face.empty()) out << "face " << v.face << ": ";
        out << v.rule;
        if (!v.detail.empty()) out << " (" << v.detail << ")";
        out << '\n';
    }
    return out.str();
}

namespace {

void add(ValidationReport& r, std::string face, std::string rule, std::string detail = {}) {
    r.violations.push_back({std::move(face), std::move(rule), std::move(detail)});
}

}  // namespace

ValidationReport validate_spec(const CersSpec& spec) {
    ValidationReport report;

    if (spec.faces.empty()) {
        add(report, "", "no faces");
        return report;
    }

    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < spec.faces.size(); ++i) {
        const auto& f = spec.faces[i];
        if (f.id.empty()) add(report, f.id, "empty face id");
        if (index.count(f.id))
            add(report, f.id, "duplicate face id");
        else
            index[f.id] = static_cast<int>(i);
    }
    if (!index.count(spec.root)) add(report, spec.root, "unknown root");

    for (const auto& f : spec.faces) {
        if (f.length < 4)
            add(report, f.id, "face length below minimum", "length " + std::to_string(f.length));
        else if (f.length % 2 != 0)
            add(report, f.id, "odd face length", "length " + std::to_string(f.length));

        std::vector<int> positions;
        for (const auto& a : f.attachments) {
            if (a.neighbor == f.id) add(report, f.id, "self attachment");
            if (!index.count(a.neighbor))
                add(report, f.id, "unknown attachment neighbor", a.neighbor);
            int dup = 0;
            for (const auto& b : f.attachments)
                if (b.neighbor == a.neighbor) ++dup;
            if (dup > 1) {
                add(report, f.id, "duplicate attachment neighbor", a.neighbor);
                break;  // one report per face is enough
            }
            if (f.length >= 4 && (a.position < 0 || a.position >= f.length))
                add(report, f.id, "bad attachment position", std::to_string(a.position));
            else
                positions.push_back(a.position);
        }

        std::sort(positions.begin(), positions.end());
        for (std::size_t i = 0; i + 1 < positions.size(); ++i)
            if (positions[i] == positions[i + 1])
                add(report, f.id, "duplicate attachment position", std::to_string(positions[i]));
        if (f.length >= 4 && positions.size() >= 2) {
            // shared edges may not touch: cyclically consecutive positions are out
            for (std::size_t i = 0; i < positions.size(); ++i) {
                int p = positions[i];
                int q = positions[(i + 1) % positions.size()];
                int gap = ((q - p) % f.length + f.length) % f.length;
                if (gap == 1)
                    add(report, f.id, "adjacent shared edges",
                        "positions " + std::to_string(p) + " and " + std::to_string(q));
            }
        }
    }

    // attachment symmetry (only where both endpoints resolve)
    for (const auto& f : spec.faces) {
        for (const auto& a : f.attachments) {
            const FaceSpec* g = spec.find_face(a.neighbor);
            if (!g || g->id == f.id) continue;
            if (!g->find_attachment(f.id))
                add(report, f.id, "asymmetric attachment",
                    a.neighbor + " does not list " + f.id);
        }
    }

    if (!report.ok()) return report;

    // inner dual must be a tree; orient from the root to place parent edges
    const int n = static_cast<int>(spec.faces.size());
    std::vector<std::vector<int>> adj(n);
    int edge_count = 0;
    for (int i = 0; i < n; ++i)
        for (const auto& a : spec.faces[i].attachments) {
            int j = index[a.neighbor];
            adj[i].push_back(j);
            if (i < j) ++edge_count;
        }

    std::vector<int> parent(n, -2);
    std::queue<int> queue;
    int root = index[spec.root];
    parent[root] = -1;
    queue.push(root);
    int reached = 0;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop();
        ++reached;
        for (int g : adj[f])
            if (parent[g] == -2) {
                parent[g] = f;
                queue.push(g);
            }
    }
    if (reached < n) {
        add(report, "", "inner dual disconnected");
        return report;
    }
    if (edge_count != n - 1) {
        add(report, "", "inner dual has a cycle");
        return report;
    }

    for (int f = 0; f < n; ++f) {
        if (parent[f] < 0) continue;
        const Attachment* a = spec.faces[f].find_attachment(spec.faces[parent[f]].id);
        if (a && a->position != 0)
            add(report, spec.faces[f].id, "parent not at position zero",
                "parent " + spec.faces[parent[f]].id + " at position " +
                    std::to_string(a->position));
    }

    return report;
}

void require_valid(const CersSpec& spec) {
    ValidationReport report = validate_spec(spec);
    if (!report.ok()) throw std::invalid_argument("invalid cers spec:\n" + report.to_string());
}

std::vector<int> segment_lengths(const FaceSpec& face) {
    std::vector<Attachment> atts = face.sorted_attachments();
    if (atts.empty()) return {face.length};
    std::vector<int> out;
    const int k = static_cast<int>(atts.size());
    for (int i = 0; i < k; ++i) {
        int p = atts[i].position;
        int q = atts[(i + 1) % k].position;
        int gap = ((q - p - 1) % face.length + face.length) % face.length;
        if (k == 1) gap = face.length - 1;
        out.push_back(gap);
    }
    return out;
}

SpecTree spec_tree(const CersSpec& spec) {
    require_valid(spec);
    const int n = static_cast<int>(spec.faces.size());
    SpecTree tree;
    tree.parent.assign(n, -1);
    tree.children.assign(n, {});

    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    int root = spec.face_index(spec.root);
    stack.push_back(root);
    seen[root] = true;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        tree.preorder.push_back(f);
        std::vector<Attachment> atts = spec.faces[f].sorted_attachments();
        // push in reverse so the smallest position is visited first
        std::vector<int> kids;
        for (const auto& a : atts) {
            int g = spec.face_index(a.neighbor);
            if (!seen[g]) {
                seen[g] = true;
                tree.parent[g] = f;
                tree.children[f].push_back(g);
                kids.push_back(g);
            }
        }
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return tree;
}

}  // namespace cers
