#include <catch2/catch_amalgamated.hpp>

#include "shg/io.hpp"

using namespace shg;

TEST_CASE("single-family text round trip", "[io]") {
    SetFamily f = make_family(5, 2, {{1, 2}, {1, 3}, {4, 5}});
    std::string text = to_shg_string(f);
    CHECK(text == "SHG 1\nn=5 k=2\n1 2\n1 3\n4 5\n");
    CHECK(parse_shg_string(text) == f);
}

TEST_CASE("multicolor text round trip", "[io]") {
    ColoredFamilies cf(6, {make_family(6, 2, {{1, 2}}), make_family(6, 3, {{1, 2, 3}, {4, 5, 6}})});
    std::string text = to_shgm_string(cf);
    CHECK(text == "SHGM 1\nn=6 t=2\nfamily k=2\n1 2\nfamily k=3\n1 2 3\n4 5 6\n");
    CHECK(parse_shgm_string(text) == cf);
}

TEST_CASE("comments and blank lines are skipped", "[io]") {
    SetFamily f = parse_shg_string("# header comment\nSHG 1\n\nn=4 k=2\n  # indented comment\n1 2\n\n3 4\n");
    CHECK(f.n() == 4);
    CHECK(f.size() == 2);
}

TEST_CASE("an empty family is representable", "[io]") {
    SetFamily f = parse_shg_string("SHG 1\nn=7 k=3\n");
    CHECK(f.n() == 7);
    CHECK(f.k() == 3);
    CHECK(f.empty());
}

TEST_CASE("parse errors carry 1-based line numbers", "[io]") {
    CHECK_THROWS_WITH(parse_shg_string(""), Catch::Matchers::StartsWith("line 1:"));
    CHECK_THROWS_WITH(parse_shg_string("SHGX 1\n"),
                      Catch::Matchers::ContainsSubstring("line 1: expected 'SHG 1' header"));
    CHECK_THROWS_WITH(parse_shg_string("SHG 1\nn=4\n"),
                      Catch::Matchers::StartsWith("line 2: expected 'n=<int> k=<int>'"));
    CHECK_THROWS_WITH(parse_shg_string("SHG 1\nn=4 k=two\n"),
                      Catch::Matchers::ContainsSubstring("line 2: expected integer k"));
    CHECK_THROWS_WITH(parse_shg_string("SHG 1\nn=4 k=2\n1 2 3\n"),
                      Catch::Matchers::ContainsSubstring("line 3: expected 2 vertices, got 3"));
    CHECK_THROWS_WITH(parse_shg_string("SHG 1\nn=4 k=2\n1 2\n2 1\n"),
                      Catch::Matchers::ContainsSubstring("line 4: vertices must be strictly increasing"));
    CHECK_THROWS_WITH(parse_shg_string("SHG 1\n\n# pad\nn=4 k=2\n1 5\n"),
                      Catch::Matchers::ContainsSubstring("line 5: vertex 5 outside 1..n"));
    CHECK_THROWS_WITH(parse_shg_string("SHG 1\nn=4 k=0\n"),
                      Catch::Matchers::ContainsSubstring("k must be at least 1"));
}

TEST_CASE("multicolor parse errors", "[io]") {
    CHECK_THROWS_WITH(parse_shgm_string("SHGM 1\nn=4 t=2\nfamily k=2\n1 2\n"),
                      Catch::Matchers::ContainsSubstring("declared t=2 but found 1"));
    CHECK_THROWS_WITH(parse_shgm_string("SHGM 1\nn=4 t=1\n1 2\n"),
                      Catch::Matchers::ContainsSubstring("line 3: edge line before any 'family"));
    CHECK_THROWS_WITH(parse_shgm_string("SHGM 1\nn=4 t=1\nfamily j=2\n"),
                      Catch::Matchers::ContainsSubstring("line 3: expected 'k=<int>', got 'j=2'"));
    CHECK_THROWS_WITH(parse_shgm_string("SHGM 1\nn=4 t=1\nfamily k=2 extra\n"),
                      Catch::Matchers::ContainsSubstring("line 3: expected 'family k=<int>'"));
    CHECK_THROWS_AS(parse_shgm_string("SHG 1\nn=4 k=2\n"), parse_error);
}

TEST_CASE("duplicate edges collapse on parse", "[io]") {
    SetFamily f = parse_shg_string("SHG 1\nn=4 k=2\n1 2\n1 2\n3 4\n");
    CHECK(f.size() == 2);
}
