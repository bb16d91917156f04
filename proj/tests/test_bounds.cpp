#include <catch2/catch_amalgamated.hpp>

#include "shg/bounds.hpp"
#include "shg/report_json.hpp"
#include "shg/solver.hpp"

using namespace shg;

TEST_CASE("cover and clique bounds on pinned points", "[bounds]") {
    CHECK(cover_bound(9, 3, 2) == u128{28});
    CHECK(clique_bound(3, 2) == u128{10});
    CHECK(cover_bound(6, 2, 3) == u128{9});
    CHECK(clique_bound(2, 3) == u128{10});
    CHECK(cover_bound(5, 2, 2) == u128{4});
    CHECK(clique_bound(2, 2) == u128{3});
    CHECK(cover_bound(8, 3, 1) == u128{0});
    CHECK(clique_bound(4, 1) == u128{0});  // complete 4-uniform family on [3]
}

TEST_CASE("bound calculators validate their domain", "[bounds]") {
    CHECK_THROWS_AS(cover_bound(3, 5, 1), precondition_error);
    CHECK_THROWS_AS(cover_bound(4, 2, 5), precondition_error);
    CHECK_THROWS_AS(cover_bound(4, 0, 2), precondition_error);
    CHECK_THROWS_AS(clique_bound(0, 2), precondition_error);
    CHECK_THROWS_AS(rainbow_threshold(4, 5, 2), precondition_error);
    CHECK_THROWS_AS(degree_sum_gap_check(5, 1, 2), precondition_error);
}

TEST_CASE("combined bound report picks the larger side", "[bounds]") {
    BoundReport a = erdos_bound(9, 3, 2);
    CHECK(a.erdos == u128{28});
    CHECK(a.regime == Regime::CoverDominant);
    CHECK(a.in_conjecture_range);

    BoundReport b = erdos_bound(6, 2, 3);
    CHECK(b.erdos == u128{10});
    CHECK(b.regime == Regime::CliqueDominant);
    CHECK(b.in_conjecture_range);   // kt = 6 <= 6
    CHECK_FALSE(b.in_cover_range);  // t(k+1) = 9 > 6
    CHECK_FALSE(b.in_theorem_range);

    BoundReport c = erdos_bound(5, 2, 2);
    CHECK(c.erdos == u128{4});
    CHECK(c.regime == Regime::CoverDominant);

    BoundReport d = erdos_bound(5, 1, 3);
    CHECK(d.erdos == u128{2});
    CHECK(d.regime == Regime::Tie);

    BoundReport e = erdos_bound(200, 2, 2);
    CHECK(e.in_theorem_range);  // 3*4*2 = 24 < 200
}

TEST_CASE("rainbow threshold values", "[bounds]") {
    CHECK(rainbow_threshold(9, 3, 2) == u128{28});
    CHECK(rainbow_threshold(6, 2, 3) == u128{10});
    CHECK(rainbow_threshold(12, 1, 3) == u128{2});
    CHECK(rainbow_threshold(7, 3, 1) == u128{0});
    // The t = 2 threshold coincides with the cover bound.
    for (int n = 2; n <= 40; ++n)
        for (int k = 1; k <= n; ++k)
            REQUIRE(rainbow_threshold(n, k, 2) == cover_bound(n, k, 2));
}

TEST_CASE("degree-sum gap check at pinned points", "[bounds]") {
    GapCheck g = degree_sum_gap_check(25, 2, 2);
    CHECK(g.holds);
    CHECK(g.lhs == u128{4});
    CHECK(g.rhs == u128{24});

    // At n = 5 the two sides tie, so the strict inequality fails.
    GapCheck tie = degree_sum_gap_check(5, 2, 2);
    CHECK_FALSE(tie.holds);
    CHECK(tie.lhs == u128{4});
    CHECK(tie.rhs == u128{4});

    // t = 1 degenerates to 0 < 0.
    GapCheck one = degree_sum_gap_check(10, 3, 1);
    CHECK_FALSE(one.holds);
    CHECK(one.lhs == u128{0});
    CHECK(one.rhs == u128{0});

    GapCheck big = degree_sum_gap_check(55, 3, 2);
    CHECK(big.holds);
    CHECK(big.lhs == u128{7 * 53});
    CHECK(big.rhs == cover_bound(55, 3, 2));
}

TEST_CASE("constructions attain their bounds", "[bounds]") {
    SetFamily cover = gen_cover_construction(6, 2, 3);
    CHECK(u128{cover.size()} == cover_bound(6, 2, 3));
    CHECK(max_matching(cover).nu == 2);

    SetFamily clique = gen_clique_construction(9, 3, 2);
    CHECK(u128{clique.size()} == clique_bound(3, 2));
    CHECK(max_matching(clique).nu == 1);
    for (const Edge& e : clique.edges())
        for (Vertex v : e) REQUIRE(v <= 5);  // lives inside [kt-1]

    ColoredFamilies stars = gen_star_families(6, 2, 3);
    REQUIRE(stars.t() == 3);
    for (const SetFamily& s : stars.families()) {
        CHECK(u128{s.size()} == binom(5, 1));
        CHECK(u128{s.size()} == rainbow_threshold(6, 2, 3) / 2);
    }

    // t = 1 corner: the cover construction is empty, the clique construction
    // is the complete family on [k-1]... which is also empty.
    CHECK(gen_cover_construction(8, 3, 1).empty());
    CHECK(gen_clique_construction(8, 3, 1).empty());
    CHECK_THROWS_AS(gen_clique_construction(4, 2, 3), precondition_error);
}

TEST_CASE("bound report serializes exact values", "[bounds]") {
    nlohmann::json j = to_json(erdos_bound(9, 3, 2));
    CHECK(j["schema"] == 1);
    CHECK(j["n"] == 9);
    CHECK(j["erdos_bound"] == 84 - 56);
    CHECK(j["regime"] == "cover_dominant");
    CHECK(j["in_conjecture_range"] == true);
}

TEST_CASE("oversized counts serialize as decimal strings", "[bounds]") {
    u128 big = checked_mul(u128{UINT64_MAX}, u128{UINT64_MAX});
    nlohmann::json j = json_count(big);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == to_decimal(big));
    CHECK(json_count(u128{7}) == 7);
}
