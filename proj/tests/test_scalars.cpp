#include "doctest.h"
#include "ybeforge/matrix.hpp"
#include "ybeforge/ratfunc.hpp"

using namespace ybeforge;

TEST_CASE("rationals parse and print in wire format") {
    CHECK(rat_str(rat_parse("3/6")) == "1/2");
    CHECK(rat_str(rat_parse("-14/7")) == "-2");
    CHECK(rat_str(rat_parse("5")) == "5");
    CHECK(rat_parse("0/9") == 0);
    CHECK_THROWS_AS(rat_parse("1/0"), usage_error);
    CHECK_THROWS_AS(rat_parse("x"), usage_error);
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
}

TEST_CASE("deformation parameter guards and powers") {
    CHECK_THROWS_AS(DeformParam(Rat(1)), degenerate_error);
    CHECK_THROWS_AS(DeformParam(Rat(0)), degenerate_error);
    CHECK_THROWS_AS(DeformParam(Rat(-1)), degenerate_error);
    DeformParam dp(rat(6, 5));
    CHECK(dp.q() == rat(36, 25));
    CHECK(dp.q_pow_half(3) == rat(216, 125));
    CHECK(dp.t_pow(-70) == rat_pow(rat(6, 5), -70));
}

TEST_CASE("polynomial gcd and normal form") {
    // (z^2 - 1) and (z - 1) -> gcd z - 1 monic
    Poly a({rat(-1), rat(0), rat(1)});
    Poly b({rat(-1), rat(1)});
    Poly g = poly_gcd(a, b);
    CHECK(g == b);
    CHECK(poly_divexact(a, b) == Poly({rat(1), rat(1)}));
    CHECK_THROWS(poly_divexact(Poly({rat(1), rat(1)}), Poly({rat(0), rat(1)})));
}

TEST_CASE("bracket identity cases") {
    DeformParam dp(rat(6, 5));
    SUBCASE("a = 0 collapses to constants") {
        CHECK(bracket(0, +1, dp) == RatFunc::constant(Rat(1)));
        CHECK(bracket(0, -1, dp) == RatFunc::constant(Rat(-1)));
    }
    SUBCASE("direct substitution, q = 4") {
        DeformParam dp2(Rat(2));  // q = t^2 = 4
        CHECK(bracket(2, +1, dp2).eval(Rat(3)) == rat(49, 19));
    }
    SUBCASE("evaluation") {
        CHECK(bracket(0, +1, dp).eval(rat(17, 3)) == 1);
        // (z - q^2)/(1 - z q^2) at z=0 is -q^2
        Rat q2 = dp.q_pow(2);
        RatFunc f(Poly({-q2, Rat(1)}), Poly({Rat(1), -q2}));
        CHECK(f.eval(Rat(0)) == -q2);
        CHECK(f.is_pole(Rat(1) / q2));
        CHECK_THROWS_AS(f.eval(Rat(1) / q2), pole_error);
    }
}

TEST_CASE("bracket unitarity identity <a>(z) <a>(1/z) == 1") {
    DeformParam dp(rat(6, 5));
    for (long a = -6; a <= 6; ++a) {
        for (int sign : {+1, -1}) {
            RatFunc f = bracket(a, sign, dp);
            CHECK((f * f.recip_arg()).is_one());
        }
    }
}

TEST_CASE("bracket at z = 1 is 1 away from the constant case") {
    DeformParam dp(rat(6, 5));
    for (long a = -5; a <= 5; ++a) {
        CHECK(bracket(a, +1, dp).eval(Rat(1)) == 1);
        if (a != 0) CHECK(bracket(a, -1, dp).eval(Rat(1)) == 1);
    }
    // q^a = 1 makes the minus bracket the constant -1
    CHECK(bracket(0, -1, dp).eval(Rat(1)) == -1);
}

TEST_CASE("reduction canonicality under factor reordering") {
    DeformParam dp(rat(6, 5));
    RatFunc a = bracket(2, +1, dp), b = bracket(-3, -1, dp), c = bracket(1, -1, dp);
    RatFunc p1 = (a * b) * c;
    RatFunc p2 = c * (b * a);
    CHECK(p1.num == p2.num);
    CHECK(p1.den == p2.den);
    CHECK(p1.den.lead() == 1);
}

TEST_CASE("degenerate bracket rejected") {
    // t = 1 is rejected at construction; a root-of-unity style degeneracy
    // cannot arise for rational |t| != 1, but the guard is exercised via
    // the a = 0 path staying legal.
    DeformParam dp(rat(6, 5));
    CHECK_NOTHROW(bracket(0, -1, dp));
}

TEST_CASE("exact matrix kernels and inverse") {
    RatMat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    CHECK(rank(m) == 1);
    RatMat k = kernel(m);
    CHECK(k.rows == 2);
    for (int r = 0; r < k.rows; ++r) {
        RatVec v = k.col(0);  // silence unused warnings path
        (void)v;
        RatVec x(3);
        for (int c = 0; c < 3; ++c) x[c] = k.at(r, c);
        RatVec img = m.apply(x);
        for (const auto& e : img) CHECK(e == 0);
    }
    RatMat a(2, 2);
    a.at(0, 0) = rat(1, 2);
    a.at(0, 1) = rat(3, 7);
    a.at(1, 0) = rat(-2, 9);
    a.at(1, 1) = rat(5, 11);
    RatMat id = a * inverse(a);
    CHECK(id == RatMat::identity(2));
}

TEST_CASE("subspace RREF basis is insertion-order independent") {
    Subspace s1(3), s2(3);
    RatVec u{rat(1), rat(2), rat(3)};
    RatVec v{rat(0), rat(1), rat(1)};
    RatVec w{rat(1), rat(3), rat(4)};  // u + v
    s1.add(u);
    s1.add(v);
    s1.add(w);
    s2.add(w);
    s2.add(u);
    s2.add(v);
    REQUIRE(s1.dim() == 2);
    REQUIRE(s2.dim() == 2);
    CHECK(s1.basis() == s2.basis());
    CHECK(s1.contains(w));
    RatVec c = s1.coords(w);
    CHECK(c.size() == 2);
}
