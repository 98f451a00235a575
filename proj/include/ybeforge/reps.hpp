#pragma once

#include <map>
#include <optional>
#include <string>

#include "ybeforge/liealg.hpp"

namespace ybeforge {

// A finite-dimensional module of U_q[gl(m|n)^(2)] in a weight basis.
// Slot i = 1..s holds the finite generators, slot 0 the affine triple;
// for representations obtained by fusion the affine action is already
// evaluated at the recorded fusion point.
struct Representation {
    AlgebraSignature sig;
    DeformParam dp;
    GradedSpace space;  // carries weight labels
    std::vector<RatMat> e, f;           // index 0..s
    std::vector<RatMat> hhalf, hhalf_inv;  // q^{+-h_i/2}
    std::vector<RatVec> hdiag;          // eigenvalues of h_i (integers here)
    Weight highest;
    std::string label;
    std::optional<Rat> fusion_z;

    int dim() const { return space.dim(); }
};

// The (m+n)-dimensional vector module V(lambda_1); undeformed apart from
// the Cartan exponentials.
Representation vector_rep(const AlgebraSignature& sig, const DeformParam& dp);

// Tensor product module with the coproduct action
//   Delta(e_i) = q^{-h_i/2} (x) e_i + e_i (x) q^{h_i/2}
// and the spectral twist multiplying the left e_0 (f_0) term by z (1/z).
struct TensorRep {
    Representation left, right;
    GradedSpace space;
    std::vector<RatMat> e, f, hhalf, hhalf_inv;  // finite part, slots 1..s
    std::vector<RatVec> hdiag;
    RatMat e0_l, e0_r, f0_l, f0_r;  // e0(z) = z*e0_l + e0_r, f0(z) = (1/z)*f0_l + f0_r
    RatMat h0half, h0half_inv;
    RatVec h0diag;

    RatMat e0_at(const Rat& z) const;
    RatMat f0_at(const Rat& z) const;
    // full Representation at a fixed spectral value
    Representation at_z(const Rat& z) const;

    const AlgebraSignature& sig() const { return left.sig; }
    const DeformParam& dp() const { return left.dp; }
    int dim() const { return space.dim(); }
};

TensorRep coproduct_rep(const Representation& a, const Representation& b);

// One named exact relation check.
struct RelationIssue {
    std::string what;
};

// Verifies the defining relations on a representation: Cartan conjugation
// q^{h_i/2} x q^{-h_i/2} = q^{+-(alpha_i,alpha_j)/2} x for x = e_j, f_j,
// [e_i, f_j] = delta_ij [h_i]_q, the q-Serre relations for non-isotropic
// rows, and x^2 = 0 for isotropic odd rows. Returns all failures (empty =>
// the module passes).
std::vector<RelationIssue> relation_issues(const Representation& rep);
bool relations_hold(const Representation& rep);

// Simultaneous eigenspaces of the Cartan action, keyed by weight.
std::map<Weight, std::vector<int>> weight_decomposition(const GradedSpace& space);

struct HighestWeightVector {
    Weight weight;
    RatVec vec;  // canonical: first nonzero coordinate 1
    int parity;
};

// Basis of the joint kernel of the finite raising operators e_1..e_s,
// organized by weight (descending by the deterministic weight order).
std::vector<HighestWeightVector> highest_weight_vectors(const GradedSpace& space,
                                                        const std::vector<RatMat>& e_finite);
std::vector<HighestWeightVector> highest_weight_vectors(const TensorRep& t);

// Cyclic submodule closure of seed under the given operators.
Subspace cyclic_closure(const RatVec& seed, const std::vector<const RatMat*>& ops);

// Compression of an ambient operator to an invariant subspace (throws if
// the subspace is not invariant).
RatMat compress(const RatMat& op, const Subspace& sub);

// V(lambda_a) for a >= 1, built recursively by fusion inside
// V(lambda_1) (x) V(lambda_{a-1}); a = 1 returns the vector module.
Representation fuse_minimal(int a, const AlgebraSignature& sig, const DeformParam& dp);

}  // namespace ybeforge
