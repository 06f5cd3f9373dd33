#include <catch2/catch_amalgamated.hpp>

#include "qhowe/dimension.hpp"

using namespace qhowe;

TEST_CASE("binomial coefficients") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(60, 30) == Int("118264581564861424"));
}

TEST_CASE("fixed point counts") {
    CHECK(count_fixed_points(2, 2) == 3);
    CHECK(count_fixed_points(3, 2) == 6);
    CHECK(count_fixed_points(1, 7) == 1);
    CHECK(count_fixed_points(4, 0) == 1);
    CHECK_THROWS_AS(count_fixed_points(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_fixed_points(2, -1), std::invalid_argument);
}

TEST_CASE("weight space dimensions") {
    CHECK(weight_dim(Flavor::sym, {1, 1}, 2) == 4);
    CHECK(weight_dim(Flavor::skew, {1, 1}, 2) == 4);
    CHECK(weight_dim(Flavor::sym, {3}, 2) == 4);
    CHECK(weight_dim(Flavor::skew, {3}, 2) == 0);
    CHECK(weight_dim(Flavor::sym, {2, -1}, 3) == 0);
    CHECK(weight_dim(Flavor::sym, {}, 5) == 1);
}

TEST_CASE("graded totals match the closed forms") {
    const Report r = total_dim_check(2, 2, 2);
    CHECK(r.failures() == 0);
    REQUIRE(r.cases.size() == 2);
    CHECK(r.cases[0].name == "total sym n=2 m=2 N=2");

    // spot values behind those cases: 10 for sym, 6 for skew
    Int sym(0), skew(0);
    for (const Weight& k : weights_with_sum(2, 2)) {
        sym += weight_dim(Flavor::sym, k, 2);
        skew += weight_dim(Flavor::skew, k, 2);
    }
    CHECK(sym == 10);
    CHECK(skew == 6);
    CHECK(sym == binom(5, 2));
    CHECK(skew == binom(4, 2));

    CHECK_THROWS_AS(total_dim_check(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(total_dim_check(1, 1, -1), std::invalid_argument);
}

TEST_CASE("full dimension suite is green") {
    const Report r = check_dims();
    CHECK(r.failures() == 0);
    CHECK(r.cases.size() > 100);
}
