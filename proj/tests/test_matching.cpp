#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cers/generate.hpp"
#include "cers/matching.hpp"
#include "cers/plane.hpp"
#include "support/catalog.hpp"

using cers::enumerate_perfect_matchings;
using cers::Matching;
using cers::realize;

TEST_CASE("matching counts for the small systems") {
    CHECK(enumerate_perfect_matchings(realize(catalog::single_face())).size() == 2);
    CHECK(enumerate_perfect_matchings(realize(catalog::naphthalene())).size() == 3);
    CHECK(enumerate_perfect_matchings(realize(catalog::anthracene())).size() == 4);
    CHECK(enumerate_perfect_matchings(realize(catalog::phenanthrene())).size() == 5);
    CHECK(enumerate_perfect_matchings(realize(catalog::ladder3())).size() == 5);
}

TEST_CASE("straight hexagon chains have one matching per face plus one") {
    for (int n = 1; n <= 8; ++n) {
        auto g = realize(catalog::para_hexagon_chain(n));
        CHECK(enumerate_perfect_matchings(g).size() == static_cast<std::size_t>(n) + 1);
    }
}

TEST_CASE("square ladders count matchings like Fibonacci") {
    std::size_t prev = 1, cur = 2;  // ladder(1) = 2, ladder(2) = 3, ...
    for (int n = 1; n <= 8; ++n) {
        auto g = realize(catalog::square_ladder(n));
        CHECK(enumerate_perfect_matchings(g).size() == cur);
        std::size_t next = prev + cur;
        prev = cur;
        cur = next;
    }
}

TEST_CASE("every enumerated matching is perfect and they are distinct") {
    for (const auto& s : cers::random_corpus(11, 20, 7, 10)) {
        auto g = realize(s);
        auto matchings = enumerate_perfect_matchings(g);
        CHECK(!matchings.empty());
        std::set<std::vector<int>> seen;
        for (const auto& m : matchings) {
            CHECK(cers::is_perfect_matching(g, m));
            CHECK(m.width() == g.edge_count());
            CHECK(seen.insert(m.edge_list()).second);
        }
        CHECK(std::is_sorted(matchings.begin(), matchings.end()));
    }
}

TEST_CASE("matchings are ordered by their lowest differing edge") {
    Matching a(8), b(8);
    a.insert(3);
    b.insert(5);
    // edges 0..2 agree; at edge 3 only a has the edge, and an absent edge
    // sorts first, so b comes before a
    CHECK(b < a);
    CHECK_FALSE(a < b);
    Matching c(8);
    c.insert(3);
    c.insert(5);
    CHECK(a < c);
    CHECK_FALSE(c < a);
    CHECK(b < c);
}

TEST_CASE("symmetric difference flips a face alternation") {
    auto g = realize(catalog::single_face());
    auto matchings = enumerate_perfect_matchings(g);
    REQUIRE(matchings.size() == 2);
    auto diff = matchings[0].symmetric_difference(matchings[1]);
    CHECK(diff.size() == 6);
    CHECK(diff == cers::face_edge_mask(g, 0));
}

TEST_CASE("face edge masks cover each face exactly") {
    auto g = realize(catalog::star());
    for (int f = 0; f < g.face_count(); ++f) {
        auto mask = cers::face_edge_mask(g, f);
        CHECK(mask.size() == g.faces[f].length());
        for (int e : g.faces[f].edge_cycle) CHECK(mask.contains(e));
    }
}

TEST_CASE("adjacent faces never both alternate against a matching") {
    for (const auto& s : {catalog::anthracene(), catalog::star(), catalog::octagon_branched()}) {
        auto g = realize(s);
        for (const auto& m : enumerate_perfect_matchings(g)) CHECK(cers::check_link_property(g, m));
    }
    for (const auto& s : cers::random_corpus(13, 10, 7, 8)) {
        auto g = realize(s);
        for (const auto& m : enumerate_perfect_matchings(g)) CHECK(cers::check_link_property(g, m));
    }
}

TEST_CASE("link property rejects non-perfect matchings") {
    auto g = realize(catalog::single_face());
    Matching empty(g.edge_count());
    CHECK_THROWS_AS(cers::check_link_property(g, empty), std::invalid_argument);
}
