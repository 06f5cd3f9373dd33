#include <catch2/catch_amalgamated.hpp>

#include "qhowe/laurent.hpp"

using namespace qhowe;

TEST_CASE("quantum integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1).is_one());
    CHECK(qint(2) == LaurentPoly::q(-1) + LaurentPoly::q(1));
    CHECK(qint(3) == LaurentPoly::q(-2) + LaurentPoly::term(1, 0) + LaurentPoly::q(2));
    for (long n = 0; n <= 8; ++n) CHECK(qint(-n) == -qint(n));
    for (long n = 0; n <= 10; ++n) CHECK(qint(n).eval_one() == n);
}

TEST_CASE("two-step qint identity") {
    // [k'-1][k] - [k'][k-1] = [k'-k]
    for (long k = 0; k <= 10; ++k)
        for (long kp = 0; kp <= 10; ++kp)
            CHECK(qint(kp - 1) * qint(k) - qint(kp) * qint(k - 1) == qint(kp - k));
}

TEST_CASE("factorials and binomials") {
    CHECK(qfact(0).is_one());
    CHECK(qfact(3) == qint(1) * qint(2) * qint(3));
    CHECK(qbinom(2, 1) == qint(2));
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k) {
            const LaurentPoly b = qbinom(n, k);
            CHECK(b == qbinom(n, n - k));
            CHECK(b == b.substitute_neg_inv() * LaurentPoly::term((k * (n - k)) % 2 ? -1 : 1, 0));
            CHECK(b * qfact(k) * qfact(n - k) == qfact(n));
            Int choose;
            mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(k));
            CHECK(b.eval_one() == choose);
            for (const auto& [e, c] : b.terms()) CHECK(c > 0);
        }
}

TEST_CASE("exact division") {
    CHECK(div_exact(qint(4) * qint(3), qint(3)) == qint(4));
    CHECK(div_exact(LaurentPoly(), qint(2)).is_zero());
    CHECK_THROWS_AS(div_exact(qint(3), qint(2)), NotDivisible);
    CHECK_THROWS_AS(div_exact(qint(1), LaurentPoly()), NotDivisible);
}

TEST_CASE("gcd normalization") {
    const LaurentPoly g = gcd(LaurentPoly::term(2, 2), LaurentPoly::term(4, 5));
    CHECK(g == LaurentPoly::term(2, 0));
    CHECK(gcd(LaurentPoly(), qint(2)) == gcd(qint(2), qint(2)));
    // gcd output is divisible into both arguments
    const LaurentPoly a = qint(2) * qint(3);
    const LaurentPoly b = qint(2) * qint(2);
    const LaurentPoly g2 = gcd(a, b);
    CHECK(div_exact(a, g2) * g2 == a);
    CHECK(div_exact(b, g2) * g2 == b);
}

TEST_CASE("text format") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(qint(2).str() == "q^-1 + q");
    CHECK(LaurentPoly::term(-1, -1).str() == "-q^-1");
    CHECK(LaurentPoly::term(2, 3).str() == "2*q^3");
    CHECK((LaurentPoly::term(1, 0) + LaurentPoly::q()).str() == "1 + q");
    CHECK((LaurentPoly::q(-1) - LaurentPoly::q(1)).str() == "q^-1 - q");
    CHECK(RatFun(qint(2)).str() == "q^-1 + q");
}

TEST_CASE("q -> -q^-1 substitution") {
    CHECK(LaurentPoly::q().substitute_neg_inv() == -LaurentPoly::q(-1));
    CHECK(qint(2).substitute_neg_inv() == -qint(2));
    CHECK(qint(3).substitute_neg_inv() == qint(3));
    const LaurentPoly p = LaurentPoly::term(3, -2) + LaurentPoly::term(-5, 1);
    CHECK(p.substitute_neg_inv().substitute_neg_inv() == p);
}

TEST_CASE("rational functions normalize canonically") {
    const RatFun r(LaurentPoly::q(), qint(2));
    CHECK(r.den().min_exp() == 0);
    CHECK(r.str() == "q^2 / 1 + q^2");
    CHECK(RatFun(LaurentPoly::q()).inverse().str() == "q^-1");
    // common factors cancel regardless of how the fraction is presented
    const LaurentPoly c = qint(3) * LaurentPoly::q(-2);
    CHECK(RatFun(LaurentPoly::q() * c, qint(2) * c) == r);
    CHECK(r * RatFun(qint(2)) == RatFun(LaurentPoly::q()));
    CHECK(r.substitute_neg_inv().substitute_neg_inv() == r);
    CHECK(RatFun(qint(4)).eval_one() == 4);
    CHECK_THROWS_AS(RatFun(qint(1), LaurentPoly()), Singular);
    CHECK_THROWS_AS(RatFun(LaurentPoly()).inverse(), Singular);
}
