#pragma once

#include "ybeforge/reps.hpp"
#include "ybeforge/tpg.hpp"

namespace ybeforge {

// One irreducible component of a tensor product module: the cyclic
// submodule of a highest weight vector under the finite lowering
// operators, with the generating words recorded so the same submodule can
// be transported to the flipped tensor order.
struct Component {
    NodeKey node;
    Weight hw_weight;
    RatVec hw_vec;
    std::vector<RatVec> raw_basis;          // hw and its f-word images
    std::vector<std::vector<int>> words;    // f-index word per raw vector
    Subspace span;

    Component() : span(0) {}
};

// Projection data of V(lambda_a) (x) V(lambda_b). In the indecomposable
// case (m = n, a = b) the two merged grid slots carry the block V with
// its maximal submodule Vbar, the invariant line v0, the quotient
// generator xi, the projector P_V and the nilpotent invariant N
// (normalized N xi = v0 before any scale fit).
struct ProjectorFamily {
    std::vector<Component> comps;        // non-merged components, grid order
    std::map<NodeKey, RatMat> P;
    bool indecomposable = false;
    RatMat P_V, N;
    RatVec v0, xi;
    Subspace vbar, vblock;
    RatMat S, S_inv;  // global change of basis (component columns)

    ProjectorFamily() : vbar(0), vblock(0) {}
};

ProjectorFamily projectors(const TensorRep& t, const TwistedTPG& g);

struct SpectralTerm {
    NodeKey node;
    RatFunc rho;
    RatMat P;  // already carries the relative sign / intertwiner scale
};

// Check-form spectral R-matrix: Rcheck(z): V_a (x) V_b -> V_b (x) V_a.
struct SpectralRMatrix {
    AlgebraSignature sig{2, 4};
    int a = 0, b = 0;
    Rat tparam;
    GradedSpace dom, cod;
    GradedSpace fac_a, fac_b;  // the two tensor factors
    std::vector<SpectralTerm> terms;
    bool indecomposable = false;
    RatFunc rho_V, rho_N;  // set in the indecomposable case
    RatMat P_V, N;
    Rat n_const_fit;       // constant of the fitted rho_N shape
    Rat n_const_formula;   // (-1)^a q^{-a^2}
    Rat rho_v0_value;      // rho_V(0) of the assembled coefficient
    Rat rho_v0_formula;    // eps_V q^{-C(lambda_a)}; reported, not enforced

    int dim() const { return dom.dim(); }
    RatMat eval(const Rat& z) const;
    // evaluation after clearing all coefficient denominators; the right
    // tool at spectral points where some coefficient has a pole
    RatMat eval_cleared(const Rat& z) const;
    // zeros and poles of the coefficient functions (fusion candidates)
    std::vector<Rat> special_points() const;
};

// Assembles Rcheck^{lambda_a lambda_b}(z). For a = b the intertwining
// projectors are the signed projectors (-1)^c P; for a != b the component
// intertwiners are transported along f-words and scaled against the
// direct Jimbo solution at one generic point.
SpectralRMatrix assemble(int a, int b, const AlgebraSignature& sig, const DeformParam& dp);

// Direct solver of the Jimbo equation at a fixed generic z0: the unique
// (up to scale) X with X Delta^{ab}(x) = Delta^{ba}(x) X for the finite
// generators and the twisted e0 relation. Weight-blocked exact nullspace;
// normalized so the top weight vector maps with coefficient 1.
RatMat solve_jimbo_direct(const TensorRep& ab, const TensorRep& ba, const Rat& z0);

// The e0 side operators of the Jimbo equation in checked form.
RatMat jimbo_lhs_e0(const TensorRep& ab, const Rat& z);  // z e0 (x) K0 + K0^-1 (x) e0
RatMat jimbo_rhs_e0(const TensorRep& ba, const Rat& z);  // e0 (x) K0 + z K0^-1 (x) e0

}  // namespace ybeforge
