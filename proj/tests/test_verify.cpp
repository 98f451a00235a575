#include "doctest.h"
#include "ybeforge/jsonio.hpp"

using namespace ybeforge;

TEST_CASE("commutant dimensions") {
    DeformParam dp;
    SUBCASE("three components at (2,4), a=b=1") {
        AlgebraSignature sig(2, 4);
        Representation v = vector_rep(sig, dp);
        TensorRep t = coproduct_rep(v, v);
        CHECK(commutant_dimension(t) == 3);
        // restricted to one irreducible component: Schur gives 1
        auto g = build_extended_ttpg(sig, 1, 1);
        ProjectorFamily fam = projectors(t, g);
        RatMat p = fam.P.at({0, 0});
        CHECK(commutant_dimension(t, &p) == 1);
    }
    SUBCASE("indecomposable block at (4,4) has a 2-dimensional commutant") {
        AlgebraSignature sig(4, 4);
        Representation v = vector_rep(sig, dp);
        TensorRep t = coproduct_rep(v, v);
        auto g = build_extended_ttpg(sig, 1, 1);
        ProjectorFamily fam = projectors(t, g);
        CHECK(commutant_dimension(t, &fam.P_V) == 2);
        CHECK(commutant_dimension(t) == 3);
    }
}

TEST_CASE("composition series of the indecomposable block") {
    DeformParam dp;
    AlgebraSignature sig(4, 4);
    Representation v = vector_rep(sig, dp);
    TensorRep t = coproduct_rep(v, v);
    auto g = build_extended_ttpg(sig, 1, 1);
    ProjectorFamily fam = projectors(t, g);
    auto rep = composition_series_check(t, fam);
    CHECK(rep.pass);
    CHECK(rep.params.count("skipped") == 0);
}

TEST_CASE("composition series reported as skipped when semisimple") {
    DeformParam dp;
    AlgebraSignature sig(2, 4);
    Representation v = vector_rep(sig, dp);
    TensorRep t = coproduct_rep(v, v);
    auto g = build_extended_ttpg(sig, 1, 1);
    ProjectorFamily fam = projectors(t, g);
    auto rep = composition_series_check(t, fam);
    CHECK(rep.pass);
    CHECK(rep.params.count("skipped") == 1);
}

TEST_CASE("projected e0 identities around the nilpotent invariant") {
    DeformParam dp;
    AlgebraSignature sig(4, 4);
    Representation v = vector_rep(sig, dp);
    TensorRep t = coproduct_rep(v, v);
    auto g = build_extended_ttpg(sig, 1, 1);
    ProjectorFamily fam = projectors(t, g);
    const RatMat& N = fam.N;
    for (const auto& [node, P] : fam.P) {
        CHECK((P * t.e0_l * N).is_zero());
        CHECK((P * t.e0_r * N).is_zero());
    }
    CHECK((N * t.e0_l * N).is_zero());
    CHECK((N * t.e0_r * N).is_zero());
    CHECK((fam.P_V * N) == N);
    CHECK((N * fam.P_V) == N);
}

TEST_CASE("scaled R-matrix fails unitarity (negative control)") {
    DeformParam dp;
    AlgebraSignature sig(2, 4);
    SpectralRMatrix R = assemble(1, 1, sig, dp);
    SpectralRMatrix doubled = R;
    for (auto& term : doubled.terms) term.P = term.P.scaled(Rat(2));
    CHECK(check_unitarity(R, R, rat(9, 7)).pass);
    CHECK_FALSE(check_unitarity(doubled, doubled, rat(9, 7)).pass);
}

TEST_CASE("identity in place of Rcheck fails the Jimbo relation away from z=1") {
    DeformParam dp;
    AlgebraSignature sig(2, 4);
    SpectralRMatrix R = assemble(1, 1, sig, dp);
    Representation v = vector_rep(sig, dp);
    TensorRep t = coproduct_rep(v, v);
    SpectralRMatrix id = R;
    id.terms.clear();
    SpectralTerm term;
    term.node = {0, 0};
    term.rho = RatFunc::one();
    term.P = RatMat::identity(36);
    id.terms.push_back(term);
    CHECK_FALSE(check_jimbo(id, t, t, rat(5, 3)).pass);
    // at z = 1 the true Rcheck(1) = I does satisfy the relation
    CHECK(check_jimbo(id, t, t, Rat(1)).pass);
}

TEST_CASE("check reports carry parameters and serialize") {
    DeformParam dp;
    AlgebraSignature sig(2, 4);
    SpectralRMatrix R = assemble(1, 1, sig, dp);
    auto rep = check_unitarity(R, R, rat(9, 7));
    CHECK(rep.params.at("z") == "9/7");
    CHECK(rep.residual == "0");
    ojson j = report_json({rep});
    CHECK(j.at(0).at("name") == "unitarity");
    CHECK(j.at(0).at("pass") == true);
}

TEST_CASE("rational sampler is deterministic and in range") {
    RationalSampler s1(42), s2(42);
    for (int i = 0; i < 50; ++i) {
        Rat a = s1.next(), b = s2.next();
        CHECK(a == b);
        CHECK(a != 0);
        Int num = abs(a.get_num()), den = a.get_den();
        CHECK(num <= 100);
        CHECK(den <= 100);
    }
}
