#include "cers/coding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace cers {

int FaceOrdering::rank(int face) const {
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i] == face) return static_cast<int>(i) + 1;
    return -1;
}

namespace {

std::vector<int> sorted_by_id(const PlaneCers& g, std::vector<int> faces) {
    std::sort(faces.begin(), faces.end(),
              [&g](int a, int b) { return g.faces[a].id < g.faces[b].id; });
    return faces;
}

}  // namespace

FaceOrdering well_order_faces(const PlaneCers& g, int root_face, OrderStrategy strategy) {
    if (root_face < 0 || root_face >= g.face_count())
        throw std::invalid_argument("well_order_faces: bad root face");
    auto dual = inner_dual(g);
    if (dual[root_face].size() > 1)
        throw std::invalid_argument("well_order_faces: root face " + g.faces[root_face].id +
                                    " is not terminal");

    FaceOrdering ordering;
    ordering.strategy = strategy;
    ordering.root = root_face;
    std::vector<bool> seen(g.face_count(), false);
    seen[root_face] = true;

    if (strategy == OrderStrategy::Bfs) {
        std::deque<int> queue{root_face};
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            ordering.faces.push_back(f);
            std::vector<int> next;
            for (int n : dual[f])
                if (!seen[n]) {
                    seen[n] = true;
                    next.push_back(n);
                }
            for (int n : sorted_by_id(g, next)) queue.push_back(n);
        }
    } else {
        std::vector<int> stack{root_face};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            ordering.faces.push_back(f);
            std::vector<int> next;
            for (int n : dual[f])
                if (!seen[n]) {
                    seen[n] = true;
                    next.push_back(n);
                }
            next = sorted_by_id(g, next);
            for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(*it);
        }
    }
    return ordering;
}

int default_coding_root(const PlaneCers& g) {
    auto dual = inner_dual(g);
    if (dual[g.root].size() <= 1) return g.root;
    int best = -1;
    for (int f = 0; f < g.face_count(); ++f) {
        if (dual[f].size() > 1) continue;
        if (best < 0 || g.faces[f].id < g.faces[best].id) best = f;
    }
    return best;
}

namespace {

struct CodingStep {
    int face;      // F_k
    int anchor;    // F_j: the already-placed neighbor
    int j;         // 1-based rank of the anchor (bit position consulted)
    bool regular;  // class of the triple (F_i, F_j, F_k)
};

void check_ordering(const PlaneCers& g, const FaceOrdering& ordering) {
    const int n = g.face_count();
    if (static_cast<int>(ordering.faces.size()) != n)
        throw std::invalid_argument("binary_codes: ordering does not cover the faces");
    std::vector<int> rank(n, 0);
    for (int t = 0; t < n; ++t) {
        int f = ordering.faces[t];
        if (f < 0 || f >= n || rank[f])
            throw std::invalid_argument("binary_codes: ordering is not a permutation");
        rank[f] = t + 1;
    }
    auto dual = inner_dual(g);
    if (dual[ordering.faces[0]].size() > 1)
        throw std::invalid_argument("binary_codes: ordering root is not terminal");
    for (int t = 1; t < n; ++t) {
        int placed = 0;
        for (int nb : dual[ordering.faces[t]])
            if (rank[nb] < rank[ordering.faces[t]]) ++placed;
        if (placed != 1)
            throw std::invalid_argument("binary_codes: ordering is not predecessor-closed");
    }
}

/// The shared plan for codes and coded matchings: for each face beyond the
/// second, its placed neighbor, the bit to consult, and the triple class.
std::vector<CodingStep> coding_plan(const PlaneCers& g, const FaceOrdering& ordering) {
    check_ordering(g, ordering);
    auto dual = inner_dual(g);
    const int n = g.face_count();
    std::vector<int> rank(n, 0);
    for (int t = 0; t < n; ++t) rank[ordering.faces[t]] = t + 1;

    std::vector<CodingStep> plan;
    for (int k = 3; k <= n; ++k) {
        int fk = ordering.faces[k - 1];
        int fj = -1;
        for (int nb : dual[fk])
            if (rank[nb] < k) {
                if (fj >= 0) throw std::logic_error("coding_plan: two placed neighbors");
                fj = nb;
            }
        int fi = -1;
        for (int nb : dual[fj])
            if (fi < 0 || rank[nb] < rank[fi]) fi = nb;
        bool regular = classify_triple(g, fi, fj, fk) == TripleClass::Regular;
        plan.push_back({fk, fj, rank[fj], regular});
    }
    return plan;
}

}  // namespace

CodeSet binary_codes(const PlaneCers& g, const FaceOrdering& ordering) {
    CodeSet out;
    out.ordering = ordering;
    if (g.face_count() == 1) {
        check_ordering(g, ordering);
        out.codes = {"0", "1"};
        return out;
    }

    std::vector<CodingStep> plan = coding_plan(g, ordering);
    std::vector<std::string> codes{"00", "01", "10"};
    for (const auto& step : plan) {
        std::vector<std::string> next;
        next.reserve(codes.size() * 2);
        for (const auto& x : codes) {
            next.push_back(x + '0');
            char anchor_bit = x[step.j - 1];
            bool eligible = step.regular ? anchor_bit == '0' : anchor_bit == '1';
            if (eligible) next.push_back(x + '1');
        }
        codes = std::move(next);
    }
    std::sort(codes.begin(), codes.end());
    out.codes = std::move(codes);
    return out;
}

SimpleGraph code_graph(const CodeSet& codes) {
    const int m = static_cast<int>(codes.codes.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int d = 0;
            const std::string& x = codes.codes[a];
            const std::string& y = codes.codes[b];
            for (std::size_t i = 0; i < x.size() && d < 2; ++i) d += x[i] != y[i];
            if (d == 1) edges.push_back({a, b});
        }
    return SimpleGraph::from_edges(m, std::move(edges));
}

int CodedMatchingMap::index_of_code(const std::string& code) const {
    auto it = std::lower_bound(code_set.codes.begin(), code_set.codes.end(), code);
    if (it == code_set.codes.end() || *it != code) return -1;
    return static_cast<int>(it - code_set.codes.begin());
}

int CodedMatchingMap::index_of_matching(const Matching& m) const {
    for (std::size_t i = 0; i < matchings.size(); ++i)
        if (matchings[i] == m) return static_cast<int>(i);
    return -1;
}

namespace {

/// Alternating half of a face's cycle that contains the edge at `pos`.
Matching face_alternation(const PlaneCers& g, int face, int pos) {
    const PlaneFace& f = g.faces[face];
    Matching mask(g.edge_count());
    for (int i = 0; i < f.length(); i += 2) mask.insert(f.edge_cycle[(pos + i) % f.length()]);
    return mask;
}

int cycle_position(const PlaneFace& f, int edge) {
    for (int pos = 0; pos < f.length(); ++pos)
        if (f.edge_cycle[pos] == edge) return pos;
    throw std::logic_error("cycle_position: edge not on face");
}

}  // namespace

CodedMatchingMap coded_matchings(const PlaneCers& g, const FaceOrdering& ordering) {
    CodedMatchingMap out;
    const int n = g.face_count();

    if (n == 1) {
        check_ordering(g, ordering);
        // code 0 is the alternating set through the smallest-index edge
        Matching even = face_alternation(g, 0, 0);
        Matching odd = face_alternation(g, 0, 1);
        out.code_set = {{"0", "1"}, ordering};
        out.matchings = {even, odd};
        return out;
    }

    std::vector<CodingStep> plan = coding_plan(g, ordering);
    int f1 = ordering.faces[0];
    int f2 = ordering.faces[1];
    int e12 = g.shared_edge(f1, f2);
    if (e12 < 0) throw std::logic_error("coded_matchings: rank-2 face away from the root");

    // 00 holds the shared edge on both faces; 01 rotates the second face;
    // 10 is the remaining matching (the first face rotated)
    Matching m00 = face_alternation(g, f1, cycle_position(g.faces[f1], e12));
    {
        Matching other = face_alternation(g, f2, cycle_position(g.faces[f2], e12));
        for (int e : other.edge_list()) m00.insert(e);
    }
    std::vector<std::pair<std::string, Matching>> table = {
        {"00", m00},
        {"01", m00.symmetric_difference(face_edge_mask(g, f2))},
        {"10", m00.symmetric_difference(face_edge_mask(g, f1))},
    };

    for (const auto& step : plan) {
        int ek = g.shared_edge(step.anchor, step.face);
        const PlaneFace& fk = g.faces[step.face];
        int pos = cycle_position(fk, ek);
        // unique matching of the fresh path behind the shared edge
        std::vector<int> path_edges;
        for (int i = 2; i < fk.length(); i += 2)
            path_edges.push_back(fk.edge_cycle[(pos + i) % fk.length()]);
        Matching face_mask = face_edge_mask(g, step.face);

        std::vector<std::pair<std::string, Matching>> next;
        next.reserve(table.size() * 2);
        for (const auto& [code, matching] : table) {
            char anchor_bit = code[step.j - 1];
            bool eligible = step.regular ? anchor_bit == '0' : anchor_bit == '1';
            if (eligible != matching.contains(ek))
                throw std::logic_error(
                    "coded_matchings: code rule and shared-edge membership disagree at face " +
                    fk.id + " for code " + code);
            Matching extended = matching;
            for (int e : path_edges) extended.insert(e);
            next.push_back({code + '0', extended});
            if (eligible) next.push_back({code + '1', extended.symmetric_difference(face_mask)});
        }
        table = std::move(next);
    }

    std::sort(table.begin(), table.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.code_set.ordering = ordering;
    for (auto& [code, matching] : table) {
        out.code_set.codes.push_back(code);
        out.matchings.push_back(matching);
    }
    return out;
}

}  // namespace cers
