#pragma once

#include <optional>

#include "ybeforge/matrix.hpp"
#include "ybeforge/weights.hpp"

namespace ybeforge {

// Z2-graded vector space: a parity per basis vector, plus optional weight
// labels (set for representation spaces, empty otherwise).
struct GradedSpace {
    std::vector<int> parity;
    std::vector<Weight> weights;  // empty or same length as parity

    GradedSpace() = default;
    explicit GradedSpace(std::vector<int> par) : parity(std::move(par)) {}

    int dim() const { return (int)parity.size(); }
    bool operator==(const GradedSpace& o) const { return parity == o.parity; }
};

// Basis ordered lexicographically, left index major; parity of (u,v) is
// parity(u) + parity(v) mod 2, weights add when both factors carry them.
GradedSpace tensor_space(const GradedSpace& a, const GradedSpace& b);

enum class HomogParity { Even, Odd, Mixed };

// Matrix of an operator between graded spaces, entries Rat.
struct GradedOp {
    GradedSpace dom, cod;
    RatMat m;

    GradedOp() = default;
    GradedOp(GradedSpace d, GradedSpace c, RatMat mat);

    static GradedOp identity(const GradedSpace& s);
    static GradedOp zero(const GradedSpace& dom, const GradedSpace& cod);

    GradedOp operator*(const GradedOp& o) const;  // composition
    GradedOp operator+(const GradedOp& o) const;
    GradedOp operator-(const GradedOp& o) const;
    GradedOp scaled(const Rat& s) const;
    bool is_zero() const { return m.is_zero(); }
    bool operator==(const GradedOp& o) const { return dom == o.dom && cod == o.cod && m == o.m; }

    HomogParity parity() const;
};

// Koszul tensor product. Entry ((i,j),(k,l)) carries the sign
// (-1)^{(parity_cod_B(j)+parity_dom_B(l)) * parity_dom_A(k)}, which for
// homogeneous B is (-1)^{[B][u]} of the textbook rule and handles
// mixed-parity B by summing its homogeneous parts.
GradedOp graded_op_tensor(const GradedOp& a, const GradedOp& b);

// P(u (x) v) = (-1)^{[u][v]} v (x) u
GradedOp graded_permutation(const GradedSpace& a, const GradedSpace& b);

enum class Leg { L12, L13, L23 };

// Embedding of a two-space operator into a triple tensor product:
// A_12 = A (x) I, A_23 = I (x) A, A_13 = (P12 (x) I)(I (x) A)(P12 (x) I).
GradedOp embed_leg(const GradedOp& a, Leg leg, const GradedSpace& v1, const GradedSpace& v2,
                   const GradedSpace& v3);

// [A,B] = AB - (-1)^{[A][B]} BA; both operators must be homogeneous.
GradedOp graded_commutator(const GradedOp& a, const GradedOp& b);

Rat supertrace(const GradedOp& a);

}  // namespace ybeforge
