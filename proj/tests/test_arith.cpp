#include <catch2/catch_amalgamated.hpp>

#include "shg/arith.hpp"

using namespace shg;

TEST_CASE("binomial coefficients on known values", "[arith]") {
    CHECK(binom(9, 3) == u128{84});
    CHECK(binom(5, 0) == u128{1});
    CHECK(binom(0, 0) == u128{1});
    CHECK(binom(3, 5) == u128{0});
    CHECK(binom(6, 2) == u128{15});
    CHECK(binom(52, 5) == u128{2598960});
    CHECK(to_decimal(binom(120, 60)) == "96614908840363322603893139521372656");
}

TEST_CASE("binomial rejects negative arguments", "[arith]") {
    CHECK_THROWS_AS(binom(-1, 2), validation_error);
    CHECK_THROWS_AS(binom(4, -2), validation_error);
}

TEST_CASE("binomial satisfies the Pascal recurrence", "[arith]") {
    for (int n = 1; n <= 60; ++n)
        for (int k = 1; k <= n; ++k)
            REQUIRE(binom(n, k) == checked_add(binom(n - 1, k - 1), binom(n - 1, k)));
}

TEST_CASE("binomial overflow is detected, not wrapped", "[arith]") {
    CHECK_THROWS_AS(binom(200, 100), arithmetic_error);
    CHECK_THROWS_AS(binom(1000, 500), arithmetic_error);
}

TEST_CASE("checked operations guard the 128-bit boundary", "[arith]") {
    CHECK(checked_add(1, 2) == u128{3});
    CHECK(checked_sub(7, 7) == u128{0});
    CHECK(checked_mul(u128{1} << 64, 2) == u128{1} << 65);
    CHECK_THROWS_AS(checked_add(u128_max, 1), arithmetic_error);
    CHECK_THROWS_AS(checked_sub(3, 5), arithmetic_error);
    CHECK_THROWS_AS(checked_mul(u128_max / 2 + 1, 2), arithmetic_error);
    CHECK(checked_mul(0, u128_max) == u128{0});
}

TEST_CASE("decimal rendering covers the full range", "[arith]") {
    CHECK(to_decimal(0) == "0");
    CHECK(to_decimal(12345) == "12345");
    CHECK(to_decimal(u128{UINT64_MAX}) == "18446744073709551615");
    CHECK(to_decimal(u128_max) == "340282366920938463463374607431768211455");
}

TEST_CASE("64-bit narrowing is checked", "[arith]") {
    CHECK(fits_u64(u128{UINT64_MAX}));
    CHECK_FALSE(fits_u64(u128{UINT64_MAX} + 1));
    CHECK(to_u64(u128{42}) == 42);
    CHECK_THROWS_AS(to_u64(u128{UINT64_MAX} + 1), arithmetic_error);
}
