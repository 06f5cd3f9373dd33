#include <catch2/catch_amalgamated.hpp>

#include "qhowe/weights.hpp"

using namespace qhowe;

TEST_CASE("weight formatting") {
    CHECK(weight_str(Weight{2, 1, 3}) == "[2,1,3]");
    CHECK(weight_str(Weight{}) == "[]");
    CHECK(weight_str(Weight{-1}) == "[-1]");
}

TEST_CASE("simple roots in the ambient coordinates") {
    // convention: alpha_i = e_{i+1} - e_i, so stepping "up" by alpha_i moves
    // one unit from slot i to slot i+1, matching the module action
    const RootVector a1 = RootVector::simple(1, 3);
    CHECK(a1.ambient() == std::vector<long>{-1, 1, 0});
    CHECK(RootVector::simple(2, 3).ambient() == std::vector<long>{0, -1, 1});
    CHECK(RootVector::zero(3).is_zero());
    CHECK((-a1).ambient() == std::vector<long>{1, -1, 0});
    const RootVector sum = a1 + RootVector::simple(2, 3);
    CHECK(sum.ambient() == std::vector<long>{-1, 0, 1});
}

TEST_CASE("reflections act on roots") {
    const RootVector a1 = RootVector::simple(1, 3);
    const RootVector a2 = RootVector::simple(2, 3);
    CHECK(a1.reflect(1).ambient() == (-a1).ambient());
    CHECK(a2.reflect(1).ambient() == (a1 + a2).ambient());
    CHECK(a1.reflect(2).ambient() == (a1 + a2).ambient());
    // s_i is an involution
    CHECK(a2.reflect(1).reflect(1).ambient() == a2.ambient());
}

TEST_CASE("pairings") {
    // Cartan matrix pattern on simple roots
    const int n = 4;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            const long want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            CHECK(root_pairing(RootVector::simple(i, n), RootVector::simple(j, n)) == want);
        }
    CHECK(pairing(Weight{0, 2}, RootVector::simple(1, 2)) == 2);
    CHECK(pairing(Weight{1, 1}, RootVector::simple(1, 2)) == 0);
    CHECK(pairing(Weight{3, 1}, RootVector::simple(1, 2)) == -2);
}

TEST_CASE("Weyl action on weights") {
    CHECK(weyl_act(1, Weight{5, 7, 2}) == Weight{7, 5, 2});
    CHECK(weyl_act(2, Weight{5, 7, 2}) == Weight{5, 2, 7});
    CHECK(weyl_act(1, weyl_act(1, Weight{5, 7, 2})) == Weight{5, 7, 2});
    CHECK_THROWS_AS(weyl_act(3, Weight{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_act(0, Weight{1, 2}), std::invalid_argument);
}

TEST_CASE("permutations and weighted length") {
    CHECK(is_permutation(Permutation{2, 1, 3}));
    CHECK_FALSE(is_permutation(Permutation{1, 1}));
    CHECK_FALSE(is_permutation(Permutation{0, 2}));
    CHECK(weighted_length(Permutation{1, 2, 3}, Weight{4, 5, 6}) == 0);
    CHECK(weighted_length(Permutation{2, 1}, Weight{3, 7}) == 21);
    // longest element of S_3: all three inversions
    CHECK(weighted_length(Permutation{3, 2, 1}, Weight{1, 1, 1}) == 3);
    CHECK(weighted_length(Permutation{3, 2, 1}, Weight{2, 3, 5}) == 2 * 3 + 2 * 5 + 3 * 5);
    CHECK_THROWS_AS(weighted_length(Permutation{1, 1}, Weight{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_length(Permutation{1, 2}, Weight{1}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_length(Permutation{2, 1}, Weight{-1, 1}), std::invalid_argument);
}

TEST_CASE("weight enumeration is ascending lexicographic") {
    const auto w = weights_with_sum(2, 2);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Weight{0, 2});
    CHECK(w[1] == Weight{1, 1});
    CHECK(w[2] == Weight{2, 0});
    CHECK(weights_with_sum(1, 5) == std::vector<Weight>{Weight{5}});
    CHECK(weights_with_sum(3, 0) == std::vector<Weight>{Weight{0, 0, 0}});
    // C(N + n - 1, n - 1) compositions
    CHECK(weights_with_sum(3, 4).size() == 15);
}
