#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "shg/suites.hpp"

using namespace shg;

namespace {

void expect_clean(const SuiteReport& r) {
    for (const SuiteFailure& f : r.failures)
        UNSCOPED_INFO("case " << f.case_index << ": " << f.reason << "\n" << f.instance);
    REQUIRE(r.failures.empty());
}

}  // namespace

TEST_CASE("shift-invariance suite holds on a sample", "[suites]") {
    SuiteReport r = run_suite("lemma1", 42, 60);
    CHECK(r.suite == "lemma1");
    CHECK(r.cases_run == 60);
    expect_clean(r);
}

TEST_CASE("side-assignment suite holds on a sample", "[suites]") {
    SuiteReport r = run_suite("lemma2", 42, 12);
    CHECK(r.cases_run == 12);
    expect_clean(r);
}

TEST_CASE("pullback and lift suite holds on a sample", "[suites]") {
    SuiteReport r = run_suite("pullback", 42, 30);
    CHECK(r.cases_run == 30);
    expect_clean(r);
}

TEST_CASE("rainbow extraction suite holds on a sample", "[suites]") {
    SuiteReport r = run_suite("lemma3", 42, 25);
    CHECK(r.cases_run == 25);
    expect_clean(r);
}

TEST_CASE("center extraction suite holds on a sample", "[suites]") {
    SuiteReport r = run_suite("cor1", 42, 15);
    expect_clean(r);
}

TEST_CASE("single-family theorem suite holds on a sample", "[suites]") {
    SuiteReport r = run_suite("thm1", 42, 6);
    expect_clean(r);
}

TEST_CASE("multicolor theorem suite holds on a sample", "[suites]") {
    SuiteReport r = run_suite("thm2", 42, 5);
    expect_clean(r);
}

TEST_CASE("bounds suite runs its fixed grids clean", "[suites]") {
    SuiteReport r = run_suite("bounds", 42, 0);
    CHECK(r.cases_run > 1000);
    expect_clean(r);
}

TEST_CASE("oracle suite ties the exhaustive search to the bound", "[suites]") {
    SuiteReport r = run_suite("oracle", 42, 0);
    CHECK(r.cases_run == 5);
    expect_clean(r);
}

TEST_CASE("unknown suites are rejected", "[suites]") {
    CHECK_THROWS_AS(run_suite("lemma9", 42, 1), validation_error);
    CHECK(suite_names().size() == 9);
}

TEST_CASE("suite reports serialize deterministically", "[suites]") {
    std::string a = to_json(run_suite("lemma1", 7, 40)).dump(2);
    std::string b = to_json(run_suite("lemma1", 7, 40)).dump(2);
    REQUIRE(a == b);
    std::string c = to_json(run_suite("pullback", 11, 25)).dump(2);
    std::string d = to_json(run_suite("pullback", 11, 25)).dump(2);
    REQUIRE(c == d);

    // Different seeds explore different instances but keep the shape.
    nlohmann::json j = to_json(run_suite("lemma2", 3, 6));
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "lemma2");
    CHECK(j["seed"] == 3);
    CHECK_FALSE(j.contains("wall_millis"));
}
