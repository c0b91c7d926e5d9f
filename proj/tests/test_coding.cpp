#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cers/coding.hpp"
#include "cers/generate.hpp"
#include "cers/matching.hpp"
#include "cers/plane.hpp"
#include "cers/resonance.hpp"
#include "support/catalog.hpp"

using cers::CodedMatchingMap;
using cers::coded_matchings;
using cers::OrderStrategy;
using cers::realize;
using cers::well_order_faces;

namespace {

std::vector<std::string> ids_in_order(const cers::PlaneCers& g, const cers::FaceOrdering& o) {
    std::vector<std::string> ids;
    for (int f : o.faces) ids.push_back(g.faces[f].id);
    return ids;
}

CodedMatchingMap code_with(const cers::CersSpec& s, OrderStrategy strategy = OrderStrategy::Bfs) {
    auto g = realize(s);
    return coded_matchings(g, well_order_faces(g, cers::default_coding_root(g), strategy));
}

/// one branch of the star stretched one face further, to tell bfs from dfs
cers::CersSpec star_extended() {
    cers::CersSpec s;
    s.root = "A";
    s.faces = {catalog::face("A", 6, {{"C", 0}}),
               catalog::face("C", 6, {{"A", 0}, {"B", 2}, {"D", 4}}),
               catalog::face("B", 6, {{"C", 0}, {"E", 3}}),
               catalog::face("D", 6, {{"C", 0}}),
               catalog::face("E", 6, {{"B", 0}})};
    return s;
}

}  // namespace

TEST_CASE("a lone face codes its two matchings as 0 and 1") {
    auto map = code_with(catalog::single_face());
    CHECK(map.code_set.codes == std::vector<std::string>{"0", "1"});
    auto g = realize(catalog::single_face());
    // 0 is the alternation holding the smallest-numbered edge
    int zero = map.index_of_code("0");
    CHECK(map.matchings[zero].contains(0));
    CHECK_FALSE(map.matchings[map.index_of_code("1")].contains(0));
}

TEST_CASE("two fused faces always code as 00, 01, 10") {
    for (int la : {4, 6, 8, 10})
        for (int lb : {4, 6, 8, 10}) {
            auto spec = catalog::two_faces(la, lb);
            auto map = code_with(spec);
            CHECK(map.code_set.codes == std::vector<std::string>{"00", "01", "10"});

            // 00 holds the shared edge, 01 flips the second face, 10 the first
            auto g = realize(spec);
            int shared = g.shared_edge(0, 1);
            const auto& m00 = map.matchings[map.index_of_code("00")];
            CHECK(m00.contains(shared));
            int rank1 = map.code_set.ordering.faces[0];
            int rank2 = map.code_set.ordering.faces[1];
            CHECK(map.matchings[map.index_of_code("01")] ==
                  m00.symmetric_difference(cers::face_edge_mask(g, rank2)));
            CHECK(map.matchings[map.index_of_code("10")] ==
                  m00.symmetric_difference(cers::face_edge_mask(g, rank1)));
        }
}

TEST_CASE("frozen codes for the three face chains") {
    CHECK(code_with(catalog::anthracene()).code_set.codes ==
          std::vector<std::string>{"000", "010", "011", "100"});
    CHECK(code_with(catalog::ladder3()).code_set.codes ==
          std::vector<std::string>{"000", "001", "010", "100", "101"});
    CHECK(code_with(catalog::phenanthrene()).code_set.codes ==
          std::vector<std::string>{"000", "001", "010", "100", "101"});
}

TEST_CASE("face orderings start at a terminal face and differ by strategy") {
    auto g = realize(star_extended());
    auto bfs = well_order_faces(g, 0, OrderStrategy::Bfs);
    CHECK(ids_in_order(g, bfs) == std::vector<std::string>{"A", "C", "B", "D", "E"});
    auto dfs = well_order_faces(g, 0, OrderStrategy::Dfs);
    CHECK(ids_in_order(g, dfs) == std::vector<std::string>{"A", "C", "B", "E", "D"});

    CHECK(bfs.rank(0) == 1);
    CHECK(bfs.rank(1) == 2);
    CHECK(bfs.rank(3) == 4);
    CHECK(dfs.rank(3) == 5);

    // the hub is not terminal
    CHECK_THROWS_AS(well_order_faces(g, 1, OrderStrategy::Bfs), std::invalid_argument);
    // other terminals are fine as roots
    CHECK(ids_in_order(g, well_order_faces(g, 3, OrderStrategy::Bfs)) ==
          std::vector<std::string>{"D", "C", "A", "B", "E"});
}

TEST_CASE("default root is the spec root when terminal, else the smallest terminal") {
    auto g = realize(catalog::star());
    CHECK(cers::default_coding_root(g) == 0);  // root A is terminal
    auto rooted_inside = catalog::star();
    rooted_inside.root = "C";
    // child attachments keep C at position 0 and stay valid: rotate C's own list
    rooted_inside.faces[1].attachments = {{"A", 0}, {"B", 2}, {"D", 4}};
    auto g2 = realize(rooted_inside);
    CHECK(g2.faces[cers::default_coding_root(g2)].id == "A");
}

TEST_CASE("codes biject with the matchings") {
    auto specs = cers::random_corpus(23, 15, 7, 10);
    specs.push_back(catalog::star());
    specs.push_back(catalog::octagon_branched());
    for (const auto& s : specs) {
        auto g = realize(s);
        auto matchings = cers::enumerate_perfect_matchings(g);
        for (auto strategy : {OrderStrategy::Bfs, OrderStrategy::Dfs}) {
            auto map = coded_matchings(g, well_order_faces(g, cers::default_coding_root(g), strategy));
            REQUIRE(map.code_set.codes.size() == matchings.size());
            CHECK(std::is_sorted(map.code_set.codes.begin(), map.code_set.codes.end()));
            std::set<std::string> distinct(map.code_set.codes.begin(), map.code_set.codes.end());
            CHECK(distinct.size() == matchings.size());

            auto sorted = map.matchings;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == matchings);
        }
    }
}

TEST_CASE("adjacent matchings differ in exactly the flipped face's bit") {
    auto specs = cers::random_corpus(29, 10, 6, 8);
    specs.push_back(catalog::star());
    specs.push_back(star_extended());
    for (const auto& s : specs) {
        auto g = realize(s);
        auto matchings = cers::enumerate_perfect_matchings(g);
        auto r = cers::build_resonance_graph(g, matchings);
        auto map = code_with(s);
        for (const auto& e : r.edges) {
            int iu = map.index_of_matching(r.vertices[e.u]);
            int iv = map.index_of_matching(r.vertices[e.v]);
            REQUIRE(iu >= 0);
            REQUIRE(iv >= 0);
            const auto& cu = map.code_set.codes[iu];
            const auto& cv = map.code_set.codes[iv];
            int bit = map.code_set.ordering.rank(e.face) - 1;
            for (int k = 0; k < static_cast<int>(cu.size()); ++k)
                CHECK((cu[k] != cv[k]) == (k == bit));
        }
    }
}

TEST_CASE("bfs and dfs codes describe the same graph") {
    for (const auto& s : cers::random_corpus(31, 10, 7, 10)) {
        auto g = realize(s);
        int root = cers::default_coding_root(g);
        auto bfs = cers::binary_codes(g, well_order_faces(g, root, OrderStrategy::Bfs));
        auto dfs = cers::binary_codes(g, well_order_faces(g, root, OrderStrategy::Dfs));
        CHECK(bfs.codes.size() == dfs.codes.size());
        CHECK(cers::graph_isomorphic(cers::code_graph(bfs), cers::code_graph(dfs)));
    }
}

TEST_CASE("code graph matches the resonance graph") {
    for (const auto& s :
         {catalog::anthracene(), catalog::ladder3(), catalog::star(), star_extended()}) {
        auto g = realize(s);
        auto matchings = cers::enumerate_perfect_matchings(g);
        auto rs = cers::build_resonance_graph(g, matchings).skeleton();
        auto map = code_with(s);
        CHECK(cers::graph_isomorphic(cers::code_graph(map.code_set), rs));

        // stronger: the code assignment itself is the isomorphism
        std::vector<std::string> codes;
        for (const auto& m : matchings) {
            int at = map.index_of_matching(m);
            REQUIRE(at >= 0);
            codes.push_back(map.code_set.codes[at]);
        }
        CHECK(cers::verify_isometric_embedding(rs, codes));
    }
}

TEST_CASE("lookups return minus one when absent") {
    auto map = code_with(catalog::naphthalene());
    CHECK(map.index_of_code("11") == -1);
    CHECK(map.index_of_code("00") >= 0);
    cers::Matching stranger(map.matchings[0].width());
    CHECK(map.index_of_matching(stranger) == -1);
}
