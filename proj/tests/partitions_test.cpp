#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dcp/partitions.hpp"

using namespace dcp;

TEST_CASE("partition basics") {
    Partition p{2, 3, 1};
    CHECK(p.parts == std::vector<long>{3, 2, 1});
    CHECK(p.n() == 6);
    CHECK(p.str() == "(3,2,1)");
    CHECK(Partition::parse("(3,2,1)") == p);
    CHECK(all_partitions(8).size() == 22);
    CHECK_THROWS_AS(Partition{0}, std::invalid_argument);
}

TEST_CASE("building partitions") {
    CHECK(is_building_partition(Partition{6}));
    CHECK(is_building_partition(Partition{2, 2, 1}));
    CHECK_FALSE(is_building_partition(Partition{3, 1, 1}));
    CHECK_FALSE(is_building_partition(Partition{}));
}

TEST_CASE("A moves") {
    CHECK(admissible_moves_A(Partition{1, 1, 1, 1}).empty());
    CHECK(admissible_moves_A(Partition{2, 2}) == std::set<Partition>{Partition{4}});
    CHECK(admissible_moves_A(Partition{3, 2, 2}) ==
          std::set<Partition>{Partition{5, 2}, Partition{4, 3}});
}

TEST_CASE("A order") {
    CHECK(leq_A(Partition{4, 3, 2, 2, 1, 1, 1}, Partition{7, 4, 2, 1}));
    CHECK(leq_A(Partition{5}, Partition{5}));
    CHECK_FALSE(leq_A(Partition{4, 3}, Partition{5, 2}));
    CHECK_FALSE(leq_A(Partition{5, 2}, Partition{4, 3}));
    CHECK_THROWS_AS(leq_A(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("dominance") {
    // comparable under dominance but not under the move order
    CHECK(dominance_leq(Partition{4, 3}, Partition{5, 2}));
    CHECK(dominance_leq(Partition{3, 1}, Partition{3, 1}));
    // the move order refines into dominance on all of Lambda_7
    for (auto& mu : all_partitions(7))
        for (auto& lam : all_partitions(7))
            if (leq_A(mu, lam)) CHECK(dominance_leq(mu, lam));
}

TEST_CASE("minimal upper bounds need not be unique") {
    Partition a{8, 4, 4}, b{7, 5, 3, 1};
    std::set<Partition> upper;
    for (auto& x : upset_A(a))
        if (upset_A(b).count(x)) upper.insert(x);
    std::set<Partition> minimal;
    for (auto& x : upper) {
        bool least = true;
        for (auto& y : upper)
            if (y != x && leq_A(y, x)) { least = false; break; }
        if (least) minimal.insert(x);
    }
    CHECK(minimal == std::set<Partition>{Partition{12, 4}, Partition{8, 8}});
}

TEST_CASE("singular partitions") {
    SingularPartition sp(2, Partition{4, 3, 1, 1, 1});
    CHECK(sp.n() == 12);
    CHECK(sp.str() == "(2|4,3,1,1,1)");
    CHECK(SingularPartition::parse("(2|4,3,1,1,1)") == sp);
    CHECK(SingularPartition::parse("(0|2,2)+").sign == 1);
    CHECK(SingularPartition::parse("(4|0)").lambda.parts.empty());
}

TEST_CASE("B moves") {
    CHECK(admissible_moves_B(SingularPartition(0, Partition{1, 1, 1, 1})).empty());
    CHECK(admissible_moves_B(SingularPartition(0, Partition{5})) ==
          std::set<SingularPartition>{SingularPartition(5, Partition{})});
    auto up = admissible_moves_B(SingularPartition(2, Partition{4, 3, 1, 1, 1}));
    CHECK(up.count(SingularPartition(6, Partition{3, 1, 1, 1})));
    CHECK(up.count(SingularPartition(2, Partition{7, 1, 1, 1})));
    CHECK_THROWS_AS(admissible_moves_B(SingularPartition(0, Partition{2, 2}, +1)),
                    std::invalid_argument);
}

TEST_CASE("singular order") {
    SingularPartition x(1, Partition{2});
    CHECK(leq_singular(x, x, PosetKind::B));
    // (2,1) has a single part >= 2, so (0,(2,1)) is not a building partition and
    // its only upward moves lead through (0,(3)) to (3,(0)), never to (1,(2))
    CHECK_FALSE(leq_singular(SingularPartition(0, Partition{2, 1}), x, PosetKind::B));
    // signed D classes are incomparable across signs
    SingularPartition plus(0, Partition{2, 2}, +1), minus(0, Partition{2, 2}, -1);
    CHECK_FALSE(leq_singular(plus, minus, PosetKind::D));
    CHECK_FALSE(leq_singular(minus, plus, PosetKind::D));
    CHECK(leq_singular(plus, plus, PosetKind::D));
    CHECK_THROWS_AS(leq_singular(SingularPartition(1, Partition{3}),
                                 SingularPartition(4, Partition{}), PosetKind::D),
                    std::invalid_argument);
}

TEST_CASE("singular building predicate") {
    CHECK(is_singular_building(SingularPartition(2, Partition{2}), PosetKind::B));
    CHECK_FALSE(is_singular_building(SingularPartition(2, Partition{1, 1}), PosetKind::B));
    CHECK_FALSE(is_singular_building(SingularPartition(1, Partition{3}), PosetKind::D));
    CHECK_FALSE(is_singular_building(SingularPartition(0, Partition{3, 1}), PosetKind::B));
    CHECK(is_singular_building(SingularPartition(0, Partition{2, 2}), PosetKind::D));
}

TEST_CASE("posets") {
    auto a4 = building_poset(PosetKind::A, 4);
    REQUIRE(a4.elements.size() == 2);
    CHECK(a4.label(0) == "(2,2)");
    CHECK(a4.label(1) == "(4)");
    CHECK(a4.less(0, 1));
    CHECK(a4.covers == std::vector<std::pair<size_t, size_t>>{{0, 1}});

    CHECK(building_poset(PosetKind::A, 3).elements.size() == 1);

    auto a8 = building_poset(PosetKind::A, 8);
    CHECK(a8.elements.size() == 15);  // (8) plus the 14 with two parts >= 2
    // (2,2,1,1,1,1) sits below everything
    size_t bottom = 0;
    while (a8.label(bottom) != "(2,2,1,1,1,1)") ++bottom;
    for (size_t j = 0; j < a8.elements.size(); ++j) CHECK(a8.leq[bottom][j]);

    // order axioms on the largest posets the suite touches
    for (auto poset : {building_poset(PosetKind::A, 8), building_poset(PosetKind::B, 6),
                       building_poset(PosetKind::D, 6)}) {
        size_t m = poset.elements.size();
        for (size_t i = 0; i < m; ++i) {
            CHECK(poset.leq[i][i]);
            for (size_t j = 0; j < m; ++j) {
                if (i != j && poset.leq[i][j]) CHECK_FALSE(poset.leq[j][i]);
                for (size_t k = 0; k < m; ++k)
                    if (poset.leq[i][j] && poset.leq[j][k]) CHECK(poset.leq[i][k]);
            }
        }
    }
}

TEST_CASE("antichains") {
    CHECK(antichains(building_poset(PosetKind::A, 4)).size() == 2);
    CHECK(antichains(building_poset(PosetKind::A, 3)).size() == 1);
    auto a6 = building_poset(PosetKind::A, 6);
    auto all = antichains(a6);
    bool found = false;
    for (auto& c : all) {
        if (c.size() != 2) continue;
        std::set<std::string> labels{a6.label(c[0]), a6.label(c[1])};
        if (labels == std::set<std::string>{"(4,2)", "(3,3)"}) found = true;
    }
    CHECK(found);
}

TEST_CASE("hasse dot output") {
    std::string dot = hasse_dot(building_poset(PosetKind::A, 4));
    CHECK(dot == "digraph hasse {\n  n0 [label=\"(2,2)\"];\n  n1 [label=\"(4)\"];\n"
                 "  n0 -> n1;\n}\n");
    // covers are a transitive reduction: no cover is implied by two others
    auto b5 = building_poset(PosetKind::B, 5);
    for (auto& [lo, hi] : b5.covers)
        for (size_t k = 0; k < b5.elements.size(); ++k)
            CHECK_FALSE((b5.less(lo, k) && b5.less(k, hi)));
}
