#include "doctest.h"
#include "toric_zeta/zeta.hpp"

#include "corpus.hpp"

using namespace toric_zeta;

namespace {

ZetaFactorization cusp_factors() {
    ZetaFactorization z = zeta_one();
    mul_cyclotomic(z, 2, 1);
    mul_cyclotomic(z, 3, 1);
    mul_cyclotomic(z, 6, -1);
    return z;
}

ZetaFactorization random_factorization(corpus::Rng& rng) {
    ZetaFactorization z = zeta_one();
    int cyc = corpus::rand_in(rng, 0, 3);
    for (int i = 0; i < cyc; ++i) {
        Int d = corpus::rand_in(rng, 1, 6);
        Int e = corpus::rand_in(rng, -3, 3);
        if (e != 0) mul_cyclotomic(z, d, e);
    }
    if (corpus::rand_in(rng, 0, 1)) {
        RatMat b;
        do {
            b = {{corpus::random_nonzero_rat(rng), Rat(corpus::rand_in(rng, 0, 2))},
                 {Rat(corpus::rand_in(rng, 0, 2)), corpus::random_nonzero_rat(rng)}};
        } while (rat_det(b) == 0);
        Int d = corpus::rand_in(rng, 1, 3);
        Int e = corpus::rand_in(rng, -2, 2);
        if (e != 0) mul_matrix_factor(z, det_factor(b, d), e);
    }
    return z;
}

// Fraction equality by cross-multiplication.
bool same_fraction(const RationalFunction& a, const RationalFunction& b) {
    return poly_mul(a.num, b.den) == poly_mul(b.num, a.den);
}

RationalFunction mul_fractions(const RationalFunction& a,
                               const RationalFunction& b) {
    return {poly_mul(a.num, b.num), poly_mul(a.den, b.den)};
}

}  // namespace

TEST_CASE("zeta_one") {
    ZetaFactorization one = zeta_one();
    CHECK(one.cyclotomic.empty());
    CHECK(one.matrix_factors.empty());
    CHECK(degree(one) == 0);
    RationalFunction r = to_rational(one);
    CHECK(r.num == Poly{Rat(1)});
    CHECK(r.den == Poly{Rat(1)});
    CHECK(multiply(one, cusp_factors()) == cusp_factors());
}

TEST_CASE("multiply examples") {
    ZetaFactorization a = zeta_one();
    mul_cyclotomic(a, 2, 1);
    ZetaFactorization b = zeta_one();
    mul_cyclotomic(b, 2, -1);
    CHECK(multiply(a, b) == zeta_one());

    ZetaFactorization c = zeta_one();
    mul_cyclotomic(c, 2, 1);
    mul_cyclotomic(c, 3, 1);
    ZetaFactorization d = zeta_one();
    mul_cyclotomic(d, 6, -1);
    CHECK(multiply(c, d) == cusp_factors());

    ZetaFactorization e2 = zeta_one(), e3 = zeta_one();
    mul_cyclotomic(e2, 1, 2);
    mul_cyclotomic(e3, 1, 3);
    ZetaFactorization e5 = multiply(e2, e3);
    REQUIRE(e5.cyclotomic.size() == 1);
    CHECK(e5.cyclotomic.at(1) == 5);
}

TEST_CASE("to_rational examples") {
    RationalFunction cusp = to_rational(cusp_factors());
    CHECK(cusp.num == Poly{Rat(1), Rat(-1)});
    CHECK(cusp.den == Poly{Rat(1), Rat(-1), Rat(1)});

    ZetaFactorization lin = zeta_one();
    mul_cyclotomic(lin, 1, 1);
    RationalFunction rl = to_rational(lin);
    CHECK(rl.num == Poly{Rat(1), Rat(-1)});
    CHECK(rl.den == Poly{Rat(1)});

    // det(id - t*[[0,1],[1,0]]) = 1 - t^2.
    Poly det = det_factor({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, 1);
    CHECK(det == Poly{Rat(1), Rat(0), Rat(-1)});
    ZetaFactorization swap = zeta_one();
    mul_matrix_factor(swap, det, 1);
    RationalFunction rs = to_rational(swap);
    CHECK(rs.num == Poly{Rat(1), Rat(0), Rat(-1)});
    CHECK(rs.den == Poly{Rat(1)});
}

TEST_CASE("det_factor") {
    CHECK(det_factor({{Rat(5)}}, 3) ==
          Poly{Rat(1), Rat(0), Rat(0), Rat(-5)});
    CHECK(det_factor({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2) ==
          Poly{Rat(1), Rat(0), Rat(-2), Rat(0), Rat(1)});
    Rat half(1, 2);
    CHECK(det_factor({{half}}, 1) == Poly{Rat(1), -half});
}

TEST_CASE("two-term determinants fold into cyclotomic factors") {
    ZetaFactorization z = zeta_one();
    mul_matrix_factor(z, det_factor({{Rat(1)}}, 4), 1);
    CHECK(z.matrix_factors.empty());
    REQUIRE(z.cyclotomic.size() == 1);
    CHECK(z.cyclotomic.at(4) == 1);

    // Identity systems reduce the sheaf pipeline to the basic one, so the
    // fold must also merge with existing cyclotomic content.
    ZetaFactorization w = cusp_factors();
    mul_matrix_factor(w, det_factor({{Rat(1)}}, 6), 1);
    CHECK(w.cyclotomic.count(6) == 0);  // -1 + 1 cancels
}

TEST_CASE("degree examples") {
    CHECK(degree(cusp_factors()) == -1);
    ZetaFactorization lin = zeta_one();
    mul_cyclotomic(lin, 1, 1);
    CHECK(degree(lin) == 1);
    ZetaFactorization quad = zeta_one();
    mul_cyclotomic(quad, 1, 2);
    mul_cyclotomic(quad, 1, -2);
    CHECK(degree(quad) == 0);
    CHECK(quad == zeta_one());

    ZetaFactorization sheaf = zeta_one();
    mul_matrix_factor(sheaf, det_factor({{Rat(5)}}, 3), 1);
    CHECK(degree(sheaf) == 3);
}

TEST_CASE("algebra properties on random factorizations") {
    corpus::Rng rng(501);
    for (int iter = 0; iter < 40; ++iter) {
        ZetaFactorization a = random_factorization(rng);
        ZetaFactorization b = random_factorization(rng);
        ZetaFactorization c = random_factorization(rng);

        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, zeta_one()) == a);
        CHECK(degree(multiply(a, b)) == degree(a) + degree(b));
        CHECK(same_fraction(to_rational(multiply(a, b)),
                            mul_fractions(to_rational(a), to_rational(b))));

        // Reduced form: coprime, denominator constant term 1.
        RationalFunction r = to_rational(a);
        CHECK(poly_degree(poly_gcd(r.num, r.den)) == 0);
        REQUIRE(!r.den.empty());
        CHECK(r.den[0] == 1);
    }
}

TEST_CASE("display formats") {
    CHECK(zeta_to_string(cusp_factors()) ==
          "(1 - t^2)^1 (1 - t^3)^1 (1 - t^6)^-1");
    CHECK(zeta_to_string(zeta_one()) == "1");
    CHECK(rational_to_string(to_rational(cusp_factors())) ==
          "(1 - t)/(1 - t + t^2)");
    CHECK(rational_to_string(to_rational(zeta_one())) == "1");

    ZetaFactorization lin = zeta_one();
    mul_cyclotomic(lin, 1, 1);
    CHECK(zeta_to_string(lin) == "(1 - t)^1");
    CHECK(rational_to_string(to_rational(lin)) == "1 - t");

    ZetaFactorization sheaf = zeta_one();
    mul_matrix_factor(sheaf, det_factor({{Rat(9, 8)}}, 6), -1);
    CHECK(zeta_to_string(sheaf) == "(1 - 9/8 t^6)^-1");

    CHECK(poly_to_string(Poly{Rat(1), Rat(0), Rat(-2), Rat(1, 3)}) ==
          "1 - 2 t^2 + 1/3 t^3");
}
