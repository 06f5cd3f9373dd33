#include <catch2/catch_amalgamated.hpp>

#include "qhowe/rickard.hpp"

using namespace qhowe;

TEST_CASE("frozen one-dimensional blocks") {
    // nonnegative pairing: only the bare divided power survives
    const OperatorBlock t02 = rickard_block(1, {0, 2}, Flavor::sym, 1, BraidVariant::T);
    REQUIRE(t02.rows() == 1);
    CHECK(t02.target == Weight{2, 0});
    CHECK(t02.entries[0][0] == RatFun(1));

    // zero pairing at (1,1): alternating sum collapses to -q^{-2}
    const OperatorBlock t11 = rickard_block(1, {1, 1}, Flavor::sym, 1, BraidVariant::T);
    REQUIRE(t11.rows() == 1);
    CHECK(t11.entries[0][0] == RatFun(-LaurentPoly::q(-2)));

    // the primed variant differs by (-q)^{k_i}: here (-q)^1
    const OperatorBlock tp11 = rickard_block(1, {1, 1}, Flavor::sym, 1, BraidVariant::Tprime);
    CHECK(tp11.entries[0][0] == RatFun(LaurentPoly::q(-1)));

    // negative pairing: mirrored sum with the q^lambda prefactor
    const OperatorBlock t20 = rickard_block(1, {2, 0}, Flavor::sym, 1, BraidVariant::T);
    REQUIRE(t20.rows() == 1);
    CHECK(t20.target == Weight{0, 2});
    CHECK(t20.entries[0][0] == RatFun(LaurentPoly::q(-2)));
}

TEST_CASE("blocks are invertible with unit determinant") {
    for (const Weight& k : {Weight{1, 1}, Weight{0, 2}, Weight{2, 1}}) {
        const OperatorBlock t = rickard_block(1, k, Flavor::sym, 2, BraidVariant::T);
        const OperatorBlock inv = invert_block(t);
        CHECK(inv.compose(t).is_identity());
        CHECK(t.compose(inv).is_identity());
        const RatFun d = t.det();
        CHECK(d.den().is_one());
        CHECK(d.num().terms().size() == 1);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(rickard_block(2, {1, 1}, Flavor::sym, 1, BraidVariant::T),
                    std::invalid_argument);
    CHECK_THROWS_AS(rickard_block(0, {1, 1}, Flavor::sym, 1, BraidVariant::T),
                    std::invalid_argument);
    // empty weight space (skew with an entry above m)
    CHECK_THROWS_AS(rickard_block(1, {3, 0}, Flavor::skew, 2, BraidVariant::T),
                    std::invalid_argument);
}

TEST_CASE("braid suite at the criterion envelope") {
    for (Flavor f : {Flavor::sym, Flavor::skew}) {
        CAPTURE(flavor_str(f));
        const Report adj = check_braid(BraidCheckParams{3, 2, 4, f});
        CHECK(adj.failures() == 0);
        CHECK(adj.cases.size() > 100);
        const Report dist = check_braid(BraidCheckParams{4, 1, 3, f});
        CHECK(dist.failures() == 0);
    }
}

TEST_CASE("T and T-prime braid identically") {
    // spot check beyond the suite: conjugating one step along s_1 s_2 s_1
    // agrees with s_2 s_1 s_2 on a non-symmetric weight, both variants
    const Weight k{2, 0, 1};
    for (BraidVariant v : {BraidVariant::T, BraidVariant::Tprime}) {
        auto path = [&](std::initializer_list<int> word) {
            Weight at = k;
            OperatorBlock acc = OperatorBlock::identity(Flavor::sym, 2, k);
            for (int i : word) {
                acc = rickard_block(i, at, Flavor::sym, 2, v).compose(acc);
                at = weyl_act(i, at);
            }
            return acc;
        };
        CHECK(path({1, 2, 1}) == path({2, 1, 2}));
    }
}
