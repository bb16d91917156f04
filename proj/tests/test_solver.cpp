#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "shg/bounds.hpp"
#include "shg/rng.hpp"
#include "shg/solver.hpp"

using namespace shg;

namespace {

// Unpruned exhaustive maximum matching, the reference for the branch-and-bound.
int naive_nu(const std::vector<Edge>& edges, std::size_t from, std::vector<bool>& used) {
    int best = 0;
    for (std::size_t i = from; i < edges.size(); ++i) {
        bool free = true;
        for (Vertex v : edges[i])
            if (used[static_cast<std::size_t>(v)]) free = false;
        if (!free) continue;
        for (Vertex v : edges[i]) used[static_cast<std::size_t>(v)] = true;
        best = std::max(best, 1 + naive_nu(edges, i + 1, used));
        for (Vertex v : edges[i]) used[static_cast<std::size_t>(v)] = false;
    }
    return best;
}

int naive_nu(const SetFamily& f) {
    std::vector<bool> used(static_cast<std::size_t>(f.n()) + 1, false);
    return naive_nu(f.edges(), 0, used);
}

SetFamily relabeled(const SetFamily& f, const std::vector<Vertex>& perm) {
    std::vector<Edge> out;
    for (const Edge& e : f.edges()) {
        std::vector<Vertex> vs;
        for (Vertex v : e) vs.push_back(perm[static_cast<std::size_t>(v) - 1]);
        out.emplace_back(std::move(vs));
    }
    return make_family(f.n(), f.k(), std::move(out));
}

}  // namespace

TEST_CASE("maximum matching on hand-checked families", "[solver]") {
    std::vector<Edge> k4;
    for (const Edge& e : KSubsetRange(4, 2)) k4.push_back(e);
    CHECK(max_matching(make_family(4, 2, k4)).nu == 2);

    CHECK(max_matching(gen_star_families(6, 2, 1)[0]).nu == 1);
    CHECK(max_matching(gen_cover_construction(6, 2, 3)).nu == 2);
    CHECK(max_matching(make_family(5, 2, std::vector<Edge>{})).nu == 0);
}

TEST_CASE("maximum matching witness is a valid matching of the right size", "[solver]") {
    SetFamily f = make_family(9, 3, {{1, 2, 3}, {3, 4, 5}, {4, 5, 6}, {7, 8, 9}, {1, 8, 9}});
    MaxMatchingResult r = max_matching(f);
    CHECK(r.nu == 3);
    CHECK(r.witness.size() == 3);
    CHECK_FALSE(matching_violation(f, r.witness).has_value());
    CHECK(r.nodes > 0);
}

TEST_CASE("branch and bound agrees with the unpruned search", "[solver]") {
    Xorshift64Star rng(4242);
    for (int c = 0; c < 250; ++c) {
        int n = rng.range(4, 8);
        int k = rng.range(1, 3);
        std::uint64_t m = rng.next_below(std::min<std::uint64_t>(to_u64(binom(n, k)), 12) + 1);
        SetFamily f = random_family({n, k, m, {}, rng.next()});
        MaxMatchingResult r = max_matching(f);
        REQUIRE(r.nu == naive_nu(f));
        REQUIRE(r.witness.size() == static_cast<std::size_t>(r.nu));
        REQUIRE_FALSE(matching_violation(f, r.witness).has_value());
        REQUIRE(greedy_matching(f).size() <= static_cast<std::size_t>(r.nu));
    }
}

TEST_CASE("matching number is invariant under vertex relabeling", "[solver]") {
    Xorshift64Star rng(808);
    for (int c = 0; c < 100; ++c) {
        int n = rng.range(4, 8);
        int k = rng.range(2, 3);
        std::uint64_t m = rng.next_below(std::min<std::uint64_t>(to_u64(binom(n, k)), 12) + 1);
        SetFamily f = random_family({n, k, m, {}, rng.next()});
        // Draw a permutation of [n] by repeated distinct sampling.
        std::vector<Vertex> perm;
        for (std::uint64_t r : sample_distinct(rng, static_cast<std::uint64_t>(n),
                                               static_cast<std::uint64_t>(n)))
            perm.push_back(static_cast<Vertex>(r) + 1);
        for (std::uint64_t i = perm.size(); i-- > 1;)
            std::swap(perm[i], perm[rng.next_below(i + 1)]);
        REQUIRE(max_matching(relabeled(f, perm)).nu == max_matching(f).nu);
    }
}

TEST_CASE("t-matching decision matches the optimum", "[solver]") {
    Xorshift64Star rng(1618);
    for (int c = 0; c < 150; ++c) {
        int n = rng.range(4, 8);
        int k = rng.range(1, 3);
        std::uint64_t m = rng.next_below(std::min<std::uint64_t>(to_u64(binom(n, k)), 12) + 1);
        SetFamily f = random_family({n, k, m, {}, rng.next()});
        int nu = max_matching(f).nu;
        for (int t = 0; t <= nu + 1; ++t) {
            TMatchingResult r = has_t_matching(f, t);
            REQUIRE(r.found == (t <= nu));
            if (r.found) {
                REQUIRE(r.witness.size() == static_cast<std::size_t>(t));
                REQUIRE_FALSE(matching_violation(f, r.witness).has_value());
            }
        }
    }
    CHECK_THROWS_AS(has_t_matching(make_family(4, 2, {{1, 2}}), -1), validation_error);
}

TEST_CASE("rainbow search on identical families reduces to plain matching", "[solver]") {
    Xorshift64Star rng(2718);
    for (int c = 0; c < 80; ++c) {
        int n = rng.range(4, 8);
        int k = rng.range(1, 3);
        int t = rng.range(2, 3);
        std::uint64_t m = rng.next_below(std::min<std::uint64_t>(to_u64(binom(n, k)), 12) + 1);
        SetFamily f = random_family({n, k, m, {}, rng.next()});
        ColoredFamilies cf(n, std::vector<SetFamily>(static_cast<std::size_t>(t), f));
        RainbowResult r = rainbow_matching(cf);
        REQUIRE(r.matching.has_value() == has_t_matching(f, t).found);
        if (r.matching) {
            REQUIRE_FALSE(matching_violation(cf, *r.matching, MatchingKind::Rainbow).has_value());
            // Entries come back sorted by family index.
            for (std::size_t i = 0; i + 1 < r.matching->entries.size(); ++i)
                REQUIRE(r.matching->entries[i].family < r.matching->entries[i + 1].family);
        }
    }
}

TEST_CASE("rainbow search handles empty and mixed-uniformity families", "[solver]") {
    ColoredFamilies cf(5, {make_family(5, 2, {{1, 2}, {3, 4}}), make_family(5, 3, {{3, 4, 5}})});
    RainbowResult r = rainbow_matching(cf);
    REQUIRE(r.matching.has_value());
    CHECK(r.matching->entries[0].edge == Edge{1, 2});
    CHECK(r.matching->entries[1].edge == Edge{3, 4, 5});

    ColoredFamilies blocked(5, {make_family(5, 2, {{3, 4}}), make_family(5, 3, {{3, 4, 5}})});
    CHECK_FALSE(rainbow_matching(blocked).matching.has_value());

    ColoredFamilies with_empty(5, {make_family(5, 2, std::vector<Edge>{}),
                                   make_family(5, 2, {{1, 2}})});
    CHECK_FALSE(rainbow_matching(with_empty).matching.has_value());
}

TEST_CASE("extremal search on tiny grounds matches hand counts", "[solver]") {
    ExtremalResult a = max_edges_no_t_matching(5, 2, 2);
    CHECK(a.max_edges == 4);
    CHECK(max_matching(a.extremal).nu == 1);

    ExtremalResult b = max_edges_no_t_matching(4, 2, 2);
    CHECK(b.max_edges == 3);
    CHECK(max_matching(b.extremal).nu == 1);

    // t = 1 forbids any edge at all.
    CHECK(max_edges_no_t_matching(4, 2, 1).max_edges == 0);
}

TEST_CASE("extremal search result is itself t-matching-free and unbeatable", "[solver]") {
    ExtremalResult r = max_edges_no_t_matching(6, 2, 3);
    CHECK(r.max_edges == 10);
    CHECK_FALSE(has_t_matching(r.extremal, 3).found);
    CHECK(r.extremal.size() == 10);
}

TEST_CASE("extremal search refuses large enumerations", "[solver]") {
    CHECK_THROWS_AS(max_edges_no_t_matching(10, 3, 2), resource_error);
    // C(7,2)=21 is inside the 24-candidate cap, C(8,2)=28 is not.
    CHECK_NOTHROW(max_edges_no_t_matching(7, 2, 2));
    CHECK_THROWS_AS(max_edges_no_t_matching(8, 2, 2), resource_error);
}

TEST_CASE("budgets produce resource errors, not wrong answers", "[solver]") {
    // Proving that no 6-matching exists here forces an exhaustive walk over
    // every matching of the 5-cover family, far beyond any tiny budget.
    SetFamily f = gen_cover_construction(22, 2, 6);
    SolverLimits tiny_nodes{5, 60'000};
    CHECK_THROWS_AS(has_t_matching(f, 6, tiny_nodes), resource_error);
    SolverLimits no_time{500'000'000, 0};
    CHECK_THROWS_AS(has_t_matching(f, 6, no_time), resource_error);
}
