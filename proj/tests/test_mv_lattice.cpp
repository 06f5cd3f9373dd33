#include <catch2/catch_amalgamated.hpp>

#include "qhowe/mv_lattice.hpp"

using namespace qhowe;

namespace {

QPoly zp(long e = 1) { return QPoly::z(e); }

PolyMatrix diag2(const QPoly& a, const QPoly& b) {
    return {{a, QPoly()}, {QPoly(), b}};
}

} // namespace

TEST_CASE("polynomial arithmetic and printing") {
    CHECK(QPoly().str() == "0");
    CHECK(QPoly().deg() == -1);
    CHECK(QPoly(5).str() == "5");
    CHECK(zp().str() == "1*z");
    CHECK(zp(2).str() == "1*z^2");
    CHECK((zp() - QPoly(3)).str() == "-3 + 1*z");
    CHECK(QPoly(std::vector<Rat>{Rat(1, 2)}).str() == "1/2");

    // (z^2 + 1) = (z + 1)(z - 1) + 2
    const QPoly f = zp(2) + QPoly(1);
    const QPoly d = zp() - QPoly(1);
    const auto [q, r] = f.divmod(d);
    CHECK(q == zp() + QPoly(1));
    CHECK(r == QPoly(2));
    CHECK(q * d + r == f);
    CHECK_THROWS_AS(f.div_exact(d), NotDivisible);
    CHECK((zp(2) - QPoly(1)).div_exact(d) == zp() + QPoly(1));

    CHECK_THROWS_AS(QPoly().monic(), Singular);
    CHECK_THROWS_AS(f.divmod(QPoly()), Singular);

    // gcd is monic regardless of input scaling
    const QPoly a = QPoly(std::vector<Rat>{Rat(-2), Rat(0), Rat(2)}); // 2z^2 - 2
    const QPoly b = QPoly(std::vector<Rat>{Rat(4), Rat(4)});          // 4z + 4
    CHECK(gcd(a, b) == zp() + QPoly(1));
}

TEST_CASE("determinant of polynomial matrices") {
    CHECK(det_poly({{zp(), QPoly(1)}, {QPoly(), zp()}}) == zp(2));
    CHECK(det_poly({{zp(), zp()}, {QPoly(1), QPoly(1)}}).is_zero());
    // rank-deficient generators do not span a full lattice
    CHECK_THROWS_AS(Lattice({{zp(), zp()}, {QPoly(1), QPoly(1)}}), Singular);
}

TEST_CASE("column normal form") {
    // already normalized: stays put
    const Lattice L(diag2(zp(2), QPoly(1)));
    CHECK(L.gens() == diag2(zp(2), QPoly(1)));

    // column operations reach the same normal form
    CHECK(Lattice({{zp(), QPoly()}, {QPoly(1), QPoly(1)}}) == Lattice(diag2(zp(), QPoly(1))));

    // unimodular generators give the standard lattice
    CHECK(Lattice({{QPoly(1), zp()}, {QPoly(), QPoly(1)}}) == Lattice::standard(2));
}

TEST_CASE("codimension two ways") {
    const Lattice L(diag2(zp(2), QPoly(1)));
    CHECK(L.codim() == 2);
    CHECK(L.codim_via_det() == 2);
    const Lattice M({{zp(), QPoly()}, {QPoly(1), QPoly(1)}});
    CHECK(M.codim() == 1);
    CHECK(M.codim_via_det() == 1);
    CHECK(Lattice::standard(3).codim() == 0);
}

TEST_CASE("membership and reduction") {
    const Lattice L(diag2(zp(2), QPoly(1)));
    CHECK(L.member({zp(2), QPoly()}));
    CHECK(L.member({QPoly(), QPoly(7)}));
    CHECK_FALSE(L.member({zp(), QPoly()}));
    CHECK(L.reduce({zp(2) + zp(), QPoly(3)}) == PolyVec{zp(), QPoly()});
    CHECK_THROWS_AS(L.member({QPoly(1)}), std::invalid_argument);
}

TEST_CASE("quotient action of z") {
    const Lattice L(diag2(zp(2), QPoly(1)));
    const QuotientAction qa = L.quotient_action();
    REQUIRE(qa.basis.size() == 2);
    CHECK(qa.basis[0] == std::pair<int, long>{0, 0});
    CHECK(qa.basis[1] == std::pair<int, long>{0, 1});
    // z e_1 = z e_1, z (z e_1) = 0 in the quotient
    CHECK(qa.z_mat == std::vector<std::vector<Rat>>{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}});
    CHECK(L.ch() == zp(2));
    CHECK(L.ch().str() == "1*z^2");
}

TEST_CASE("characteristic polynomials") {
    // nilpotent Jordan block
    CHECK(charpoly({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}) == zp(2));
    // companion matrix of z^2 - 5z + 6
    CHECK(charpoly({{Rat(0), Rat(-6)}, {Rat(1), Rat(5)}}).str() == "6 + -5*z + 1*z^2");
    CHECK(charpoly({}) == QPoly(1));
    CHECK(Lattice({{zp() - QPoly(3), QPoly()}, {QPoly(), QPoly(1)}}).ch().str() == "-3 + 1*z");
}

TEST_CASE("open stratum test") {
    CHECK(in_X0(2, Lattice(diag2(zp(), zp()))));
    CHECK_FALSE(in_X0(2, Lattice(diag2(zp(2), QPoly(1)))));
    CHECK(in_X0(3, Lattice({{zp(3)}})));
    CHECK_THROWS_AS(in_X0(1, Lattice(diag2(zp(), zp()))), std::invalid_argument);
}

TEST_CASE("coordinate matrices") {
    CHECK(MVMatrix::free_count({3, 2}) == 9);
    CHECK(MVMatrix::free_count({1}) == 1);

    CHECK_THROWS_AS(MVMatrix::from_free({1, 1}, {Rat(1)}), std::invalid_argument);

    MVMatrix bad;
    bad.mu = {1, 1};
    bad.p.assign(2, std::vector<QPoly>(2, QPoly()));
    bad.p[0][0] = zp(); // degree 1 entry where only constants fit
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    const MVMatrix a =
        MVMatrix::from_free({2, 1}, {Rat(1), Rat(-2), Rat(1, 2), Rat(3), Rat(0)});
    CHECK(a.total() == 3);
    CHECK(a.str() == "([2,1], [1,-2,1/2,3,0])");
    CHECK(MVMatrix::from_free({2, 1}, a.free_entries()) == a);
}

TEST_CASE("chart round trip") {
    SECTION("rank one") {
        const MVMatrix a = MVMatrix::from_free({1}, {Rat(-2)});
        const Lattice L = mv_to_lattice(a);
        CHECK(L.gens() == PolyMatrix{{zp() + QPoly(2)}});
        CHECK(in_X_mu({1}, L));
        CHECK(lattice_to_mv({1}, L) == a);
        CHECK(L.ch() == zp() + QPoly(2));
    }
    SECTION("rank two") {
        const std::vector<long> mu{2, 1};
        const MVMatrix a =
            MVMatrix::from_free(mu, {Rat(1), Rat(-2), Rat(1, 2), Rat(3), Rat(0)});
        const Lattice L = mv_to_lattice(a);
        CHECK(L.codim() == 3);
        CHECK(in_X_mu(mu, L));
        CHECK(lattice_to_mv(mu, L) == a);
        // same polynomial from the quotient action, the scalar matrix, and
        // the determinant of the generators
        CHECK(L.ch() == charpoly(a.matrix()));
        CHECK(L.ch() == det_poly(L.raw_gens()).monic());
    }
    SECTION("outside the chart") {
        const Lattice L(diag2(zp(2), QPoly(1)));
        CHECK_FALSE(in_X_mu({1, 1}, L));
        CHECK_THROWS_AS(lattice_to_mv({1, 1}, L), NotInChart);
        CHECK_THROWS_WITH(lattice_to_mv({1, 1}, L),
                          Catch::Matchers::ContainsSubstring(
                              "designated classes do not form a quotient basis"));
        CHECK_THROWS_WITH(lattice_to_mv({1}, L),
                          Catch::Matchers::ContainsSubstring("composition length"));
        CHECK_THROWS_WITH(lattice_to_mv({1, 0}, L),
                          Catch::Matchers::ContainsSubstring("codim"));
    }
}

TEST_CASE("dual lattices") {
    const Lattice L({{zp() - QPoly(2)}});
    const RatLattice D = perp(L);
    CHECK(D.str() == "(1/(-2 + 1*z)) * [[1]]");
    CHECK(perp(D) == embed(L));

    const Lattice M(diag2(zp(2), QPoly(1)));
    CHECK(perp(perp(M)) == embed(M));
    CHECK(perp(Lattice::standard(2)) == embed(Lattice::standard(2)));
}

TEST_CASE("flag validation") {
    CHECK(validate_flag({}, {}));
    CHECK_FALSE(validate_flag({}, {1}));

    const Lattice top = Lattice::standard(2);
    const Lattice mid(diag2(zp(), QPoly(1)));
    const Lattice bot(diag2(zp(), zp()));

    CHECK(validate_flag({top}, {}));
    CHECK(validate_flag({top, mid}, {1}));
    CHECK(validate_flag({top, mid, bot}, {1, 1}));
    CHECK_FALSE(validate_flag({top, mid}, {2}));
    CHECK_FALSE(validate_flag({top, mid}, {}));
    // inner lattice not contained in the outer one
    CHECK_FALSE(validate_flag({mid, top}, {-1}));
    CHECK_THROWS_AS(validate_flag({top, Lattice({{zp()}})}, {1}), std::invalid_argument);
}

TEST_CASE("sampled chart checks stay green") {
    MVCheckParams p;
    p.m_max = 2;
    p.mu_max = 3;
    p.samples = 3;
    p.perp_samples = 3;
    p.seed = 777;
    const Report r = check_mv(p);
    CHECK(r.failures() == 0);
    CHECK(r.cases.size() > 0);
}
