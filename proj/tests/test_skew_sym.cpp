#include <catch2/catch_amalgamated.hpp>

#include "qhowe/skew_sym.hpp"

using namespace qhowe;

TEST_CASE("basis identification at all-ones weights") {
    const auto common = identify_bases(2, 2);
    REQUIRE(common.size() == 4);
    CHECK(common[0].str() == "[[0,0],[1,1]]");
    CHECK(common[1].str() == "[[0,1],[1,0]]");
    CHECK(common[2].str() == "[[1,0],[0,1]]");
    CHECK(common[3].str() == "[[1,1],[0,0]]");

    // a single column admits exactly m unit vectors
    CHECK(identify_bases(1, 3).size() == 3);

    CHECK_THROWS_AS(identify_bases(Weight{2, 0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(identify_bases(Weight{}, 2), std::invalid_argument);
    CHECK_THROWS_AS(identify_bases(0, 2), std::invalid_argument);
}

TEST_CASE("dumbbell blocks at n=2, m=2") {
    const Weight ones{1, 1};
    const std::vector<Gen> word{Gen::E(1), Gen::F(1)};
    const OperatorBlock sym = operator_block(word, ones, Flavor::sym, 2);
    const OperatorBlock skew = operator_block(word, ones, Flavor::skew, 2);

    const RatFun two(qint(2));
    const RatFun one(1);
    const RatFun zero;
    const RatFun qq(LaurentPoly::q());
    const RatFun qi(LaurentPoly::q(-1));

    // basis order [[0,0],[1,1]], [[0,1],[1,0]], [[1,0],[0,1]], [[1,1],[0,0]]:
    // the two one-column-per-row matrices sit in the middle
    const std::vector<std::vector<RatFun>> want_sym{{two, zero, zero, zero},
                                                    {zero, qq, one, zero},
                                                    {zero, one, qi, zero},
                                                    {zero, zero, zero, two}};
    CHECK(sym.entries == want_sym);

    // repeated rows die on the skew side, so the corners vanish
    const std::vector<std::vector<RatFun>> want_skew{{zero, zero, zero, zero},
                                                     {zero, qq, one, zero},
                                                     {zero, one, qi, zero},
                                                     {zero, zero, zero, zero}};
    CHECK(skew.entries == want_skew);

    // sigma flips q to -q^-1; the difference lands [2] on the diagonal
    const OperatorBlock sig = skew.substitute_neg_inv();
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c)
            CHECK(sym.entries[r][c] - sig.entries[r][c] == (r == c ? two : zero));
}

TEST_CASE("dumbbell identity across the grid") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) {
            const Report r = dumbbell_check(n, m);
            CAPTURE(n, m);
            CHECK(r.failures() == 0);
        }
    CHECK_THROWS_AS(dumbbell_check(0, 1), std::invalid_argument);
}

TEST_CASE("corrupted coproduct breaks the identity") {
    ApplyOptions opts;
    opts.flip_coproduct_sign = true;
    const Report r = dumbbell_check(2, 2, opts);
    CHECK(r.failures() == 2);
}
