#include <random>

#include "doctest.h"
#include "ybeforge/graded.hpp"

using namespace ybeforge;

namespace {

GradedSpace sp(std::vector<int> par) { return GradedSpace(std::move(par)); }

GradedOp random_op(const GradedSpace& dom, const GradedSpace& cod, std::mt19937_64& rng,
                   int want_parity /* 0, 1, or -1 for any */) {
    std::uniform_int_distribution<int> num(-4, 4);
    RatMat m(cod.dim(), dom.dim());
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            if (want_parity >= 0 && ((cod.parity[r] + dom.parity[c]) & 1) != want_parity) continue;
            m.at(r, c) = Rat(num(rng));
        }
    return GradedOp(dom, cod, std::move(m));
}

}  // namespace

TEST_CASE("tensor space parities") {
    GradedSpace v = sp({0, 0, 1});
    GradedSpace t = tensor_space(v, v);
    CHECK(t.parity == std::vector<int>{0, 0, 1, 0, 0, 1, 1, 1, 0});
    GradedSpace one = sp({0});
    CHECK(tensor_space(v, one).parity == v.parity);
    // osp(2|4) vector space: 20 even, 16 odd pairs
    GradedSpace v24 = sp({0, 0, 1, 1, 1, 1});
    GradedSpace sq = tensor_space(v24, v24);
    int even = 0, odd = 0;
    for (int p : sq.parity) (p ? odd : even)++;
    CHECK(even == 20);
    CHECK(odd == 16);
}

TEST_CASE("graded permutation squares to identity and swaps with signs") {
    GradedSpace v = sp({0, 1});
    GradedOp p = graded_permutation(v, v);
    CHECK((p * p) == GradedOp::identity(tensor_space(v, v)));
    CHECK(p.parity() == HomogParity::Even);
    // odd (x) odd component picks up the -1
    CHECK(p.m.at(1 * 2 + 1, 1 * 2 + 1) == -1);
    // supertrace of P equals the superdimension m - n
    GradedSpace v24 = sp({0, 0, 1, 1, 1, 1});
    CHECK(supertrace(graded_permutation(v24, v24)) == -2);
    GradedSpace v44 = sp({0, 0, 0, 0, 1, 1, 1, 1});
    CHECK(supertrace(graded_permutation(v44, v44)) == 0);
}

TEST_CASE("Koszul rule (A(x)B)(C(x)D) = (-1)^{[B][C]} AC (x) BD") {
    std::mt19937_64 rng(7);
    GradedSpace v = sp({0, 1, 1});
    for (int pb : {0, 1}) {
        for (int pc : {0, 1}) {
            GradedOp a = random_op(v, v, rng, -1);
            GradedOp b = random_op(v, v, rng, pb);
            GradedOp c = random_op(v, v, rng, pc);
            GradedOp d = random_op(v, v, rng, -1);
            GradedOp lhs = graded_op_tensor(a, b) * graded_op_tensor(c, d);
            GradedOp rhs = graded_op_tensor(a * c, b * d).scaled(Rat((pb && pc) ? -1 : 1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("odd 1x1 operators anticommute across the tensor sign") {
    GradedSpace pt = sp({1});
    RatMat m11(1, 1);
    m11.at(0, 0) = rat(2);
    GradedOp a(pt, pt, m11);  // parity of the single entry: 1+1 = even...
    // a genuinely odd operator needs an odd-to-even map; build on (0|1)
    GradedSpace v = sp({0, 1});
    RatMat ma(2, 2), mb(2, 2);
    ma.at(0, 1) = rat(1);  // odd
    mb.at(1, 0) = rat(1);  // odd
    GradedOp A(v, v, ma), B(v, v, mb);
    REQUIRE(A.parity() == HomogParity::Odd);
    GradedOp sq = graded_op_tensor(A, B) * graded_op_tensor(A, B);
    GradedOp expect = graded_op_tensor(A * A, B * B).scaled(Rat(-1));
    CHECK(sq == expect);
}

TEST_CASE("supertrace is multiplicative under the graded tensor") {
    std::mt19937_64 rng(11);
    GradedSpace v = sp({0, 1, 1});
    GradedSpace w = sp({0, 0, 1});
    for (int trial = 0; trial < 4; ++trial) {
        GradedOp a = random_op(v, v, rng, -1);
        GradedOp b = random_op(w, w, rng, -1);
        CHECK(supertrace(graded_op_tensor(a, b)) == supertrace(a) * supertrace(b));
    }
}

TEST_CASE("embed_leg identities") {
    GradedSpace v = sp({0, 1});
    GradedOp I2 = GradedOp::identity(tensor_space(v, v));
    GradedSpace v3 = tensor_space(tensor_space(v, v), v);
    CHECK(embed_leg(I2, Leg::L12, v, v, v) == GradedOp::identity(v3));
    CHECK(embed_leg(I2, Leg::L13, v, v, v) == GradedOp::identity(v3));
    GradedOp p = graded_permutation(v, v);
    GradedOp p13 = embed_leg(p, Leg::L13, v, v, v);
    CHECK((p13 * p13) == GradedOp::identity(v3));
    // composition respected on leg 13
    std::mt19937_64 rng(3);
    GradedOp a = random_op(tensor_space(v, v), tensor_space(v, v), rng, 0);
    GradedOp b = random_op(tensor_space(v, v), tensor_space(v, v), rng, 0);
    CHECK(embed_leg(a * b, Leg::L13, v, v, v) ==
          embed_leg(a, Leg::L13, v, v, v) * embed_leg(b, Leg::L13, v, v, v));
}

TEST_CASE("graded commutator basics") {
    GradedSpace v = sp({0, 0});
    RatMat e12(2, 2), e21(2, 2);
    e12.at(0, 1) = 1;
    e21.at(1, 0) = 1;
    GradedOp A(v, v, e12), B(v, v, e21);
    GradedOp c = graded_commutator(A, B);
    RatMat want(2, 2);
    want.at(0, 0) = 1;
    want.at(1, 1) = -1;
    CHECK(c.m == want);
    // [A, A] = 0 for even A
    CHECK(graded_commutator(A, A).is_zero());
    // mixed parity input rejected
    GradedSpace w = sp({0, 1});
    RatMat mixed(2, 2);
    mixed.at(0, 0) = 1;
    mixed.at(0, 1) = 1;
    CHECK_THROWS(graded_commutator(GradedOp(w, w, mixed), GradedOp::identity(w)));
}
