#include "cers/plane.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace cers {

int PlaneCers::face_index(const std::string& id) const {
    for (int i = 0; i < face_count(); ++i)
        if (faces[i].id == id) return i;
    return -1;
}

int PlaneCers::shared_edge(int f, int g) const {
    for (int e : faces[f].edge_cycle) {
        const auto& owners = edge_faces_[e];
        if ((owners[0] == f && owners[1] == g) || (owners[0] == g && owners[1] == f)) return e;
    }
    return -1;
}

std::vector<PlaneCers::FaceAttachment> PlaneCers::face_attachments(int f) const {
    std::vector<FaceAttachment> out;
    const PlaneFace& face = faces[f];
    for (int pos = 0; pos < face.length(); ++pos) {
        int e = face.edge_cycle[pos];
        const auto& owners = edge_faces_[e];
        if (owners[1] < 0) continue;
        out.push_back({pos, owners[0] == f ? owners[1] : owners[0], e});
    }
    return out;
}

PlaneCers realize(const CersSpec& spec) {
    SpecTree tree = spec_tree(spec);  // validates

    PlaneCers g;
    g.faces.resize(spec.faces.size());
    g.root = spec.face_index(spec.root);
    for (std::size_t i = 0; i < spec.faces.size(); ++i) g.faces[i].id = spec.faces[i].id;

    auto new_edge = [&g](int u, int v) {
        g.edges.push_back({u, v});
        return g.edge_count() - 1;
    };

    // root cycle
    {
        const FaceSpec& rf = spec.faces[g.root];
        PlaneFace& face = g.faces[g.root];
        for (int i = 0; i < rf.length; ++i) {
            face.vertex_cycle.push_back(i);
            face.edge_cycle.push_back(new_edge(i, (i + 1) % rf.length));
        }
        g.vertex_count = rf.length;
    }

    // children close their cycles through the parent edge, traversing it in
    // the opposite direction to keep all faces counterclockwise
    for (int f : tree.preorder) {
        for (int c : tree.children[f]) {
            int pos = spec.faces[f].find_attachment(spec.faces[c].id)->position;
            PlaneFace& pf = g.faces[f];
            PlaneFace& cf = g.faces[c];
            int e = pf.edge_cycle[pos];
            int x = pf.vertex_cycle[pos];
            int y = pf.vertex_cycle[(pos + 1) % pf.length()];
            int len = spec.faces[c].length;

            cf.parent = f;
            cf.parent_edge = e;
            cf.vertex_cycle.push_back(y);
            cf.vertex_cycle.push_back(x);
            cf.edge_cycle.push_back(e);
            int prev = x;
            for (int i = 0; i < len - 2; ++i) {
                int w = g.vertex_count++;
                cf.vertex_cycle.push_back(w);
                cf.edge_cycle.push_back(new_edge(prev, w));
                prev = w;
            }
            cf.edge_cycle.push_back(new_edge(prev, y));
        }
    }

    g.vertex_edges.assign(g.vertex_count, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        g.vertex_edges[g.edges[e][0]].push_back(e);
        g.vertex_edges[g.edges[e][1]].push_back(e);
    }

    g.edge_faces_.assign(g.edge_count(), {-1, -1});
    for (int f = 0; f < g.face_count(); ++f)
        for (int e : g.faces[f].edge_cycle) {
            auto& owners = g.edge_faces_[e];
            if (owners[0] < 0)
                owners[0] = f;
            else
                owners[1] = f;
        }

    // trace the outer boundary; every vertex carries exactly two boundary
    // edges, so the non-shared edges form a single Hamiltonian cycle
    int start = -1;
    for (int e = 0; e < g.edge_count() && start < 0; ++e)
        if (g.boundary_edge(e)) start = e;
    if (start < 0) throw std::logic_error("realize: no boundary edge");

    auto other_boundary_edge = [&g](int v, int e) {
        for (int d : g.vertex_edges[v])
            if (d != e && g.boundary_edge(d)) return d;
        throw std::logic_error("realize: boundary is not a cycle");
    };

    // walk opposite to the inner face of the start edge
    {
        int f = g.edge_faces_[start][0];
        const PlaneFace& face = g.faces[f];
        int pos = static_cast<int>(std::find(face.edge_cycle.begin(), face.edge_cycle.end(),
                                             start) -
                                   face.edge_cycle.begin());
        int v = face.vertex_cycle[pos];  // outer traversal ends here after crossing `start`
        int e = start;
        do {
            g.outer_boundary.push_back(e);
            e = other_boundary_edge(v, e);
            v = g.edges[e][0] == v ? g.edges[e][1] : g.edges[e][0];
        } while (e != start);
        std::size_t boundary_total = 0;
        for (int d = 0; d < g.edge_count(); ++d)
            if (g.boundary_edge(d)) ++boundary_total;
        if (g.outer_boundary.size() != boundary_total ||
            boundary_total != static_cast<std::size_t>(g.vertex_count))
            throw std::logic_error("realize: malformed outer boundary");
    }

    return g;
}

std::vector<std::vector<int>> inner_dual(const PlaneCers& g) {
    std::vector<std::vector<int>> adj(g.face_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& owners = g.edge_faces(e);
        if (owners[1] < 0) continue;
        adj[owners[0]].push_back(owners[1]);
        adj[owners[1]].push_back(owners[0]);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<BoundarySegment> boundary_segments(const PlaneCers& g, int face) {
    if (face < 0 || face >= g.face_count()) throw std::invalid_argument("bad face index");
    const PlaneFace& f = g.faces[face];
    std::vector<int> shared_positions;
    for (int pos = 0; pos < f.length(); ++pos)
        if (!g.boundary_edge(f.edge_cycle[pos])) shared_positions.push_back(pos);

    std::vector<BoundarySegment> out;
    if (shared_positions.empty()) {
        out.push_back({face, f.edge_cycle});
        return out;
    }
    const int k = static_cast<int>(shared_positions.size());
    for (int i = 0; i < k; ++i) {
        int from = shared_positions[i];
        int to = shared_positions[(i + 1) % k];
        BoundarySegment seg{face, {}};
        for (int pos = (from + 1) % f.length(); pos != to; pos = (pos + 1) % f.length())
            seg.edges.push_back(f.edge_cycle[pos]);
        out.push_back(std::move(seg));
    }
    return out;
}

std::array<int, 2> link(const PlaneCers& g, int f, int f_other) {
    if (g.shared_edge(f, f_other) < 0)
        throw std::invalid_argument("link: faces are not adjacent");
    std::vector<bool> on_other(g.vertex_count, false);
    for (int v : g.faces[f_other].vertex_cycle) on_other[v] = true;

    std::vector<int> hits;
    for (int e : g.faces[f].edge_cycle) {
        int cnt = (on_other[g.edges[e][0]] ? 1 : 0) + (on_other[g.edges[e][1]] ? 1 : 0);
        if (cnt == 1) hits.push_back(e);
    }
    if (hits.size() != 2) throw std::logic_error("link: expected exactly two edges");
    std::sort(hits.begin(), hits.end());
    return {hits[0], hits[1]};
}

namespace {

std::vector<int> vertex_distances(const PlaneCers& g, int src) {
    std::vector<int> dist(g.vertex_count, -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int e : g.vertex_edges[v]) {
            int u = g.edges[e][0] == v ? g.edges[e][1] : g.edges[e][0];
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
        }
    }
    return dist;
}

}  // namespace

int edge_distance(const PlaneCers& g, int e, int f) {
    if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count())
        throw std::invalid_argument("edge_distance: bad edge index");
    if (e == f) return 0;
    std::vector<int> da = vertex_distances(g, g.edges[e][0]);
    std::vector<int> db = vertex_distances(g, g.edges[e][1]);
    int hat = std::numeric_limits<int>::max();
    for (int v : {g.edges[f][0], g.edges[f][1]}) hat = std::min({hat, da[v], db[v]});
    return hat + 1;
}

TripleClass classify_triple(const PlaneCers& g, int f, int f_mid, int f2) {
    if (f == f2) throw std::invalid_argument("classify_triple: outer faces coincide");
    int e = g.shared_edge(f, f_mid);
    int d = g.shared_edge(f_mid, f2);
    if (e < 0 || d < 0) throw std::invalid_argument("classify_triple: faces are not adjacent");
    return edge_distance(g, e, d) % 2 == 0 ? TripleClass::Regular : TripleClass::Irregular;
}

}  // namespace cers
