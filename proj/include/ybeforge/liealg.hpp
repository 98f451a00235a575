#pragma once

#include "ybeforge/deform.hpp"
#include "ybeforge/graded.hpp"

namespace ybeforge {

// The pair (m, n) with n = 2r even, n > 2, m <= n, plus the derived
// quantities h = floor(m/2) and s = h + r (number of finite simple roots).
struct AlgebraSignature {
    int m = 0, n = 0, r = 0, h = 0, s = 0;

    AlgebraSignature() = default;
    AlgebraSignature(int m_, int n_);

    int dim() const { return m + n; }

    // 0-based basis positions: 0..m-1 even sector (index i = pos+1),
    // m..m+n-1 odd sector (index mu = pos-m+1).
    int parity(int pos) const { return pos < m ? 0 : 1; }
    int bar(int pos) const;
    int xi(int pos) const;  // +1 or -1

    Weight basis_weight(int pos) const;
    GradedSpace vector_space() const;  // parities + weight labels
};

// gl(m|n) matrix unit E^a_b acting on the vector space; a, b are 0-based
// basis positions.
GradedOp gl_generator(const AlgebraSignature& sig, int a, int b);

// The order-2 automorphism on generator labels:
// omega(E^a_b) = -(-1)^{[a]([a]+[b])} xi_a xi_b E^{bbar}_{abar}.
struct OmegaImage {
    int a, b;  // target label positions
    int sign;  // +1 or -1
};
OmegaImage omega(const AlgebraSignature& sig, int a, int b);

// osp Cartan-Weyl generator sigma^a_b = E^a_b + omega(E^a_b) and the
// complementary T^a_b = E^a_b - omega(E^a_b).
GradedOp sigma_op(const AlgebraSignature& sig, int a, int b);
GradedOp t_op(const AlgebraSignature& sig, int a, int b);

// lower-index generators sigma_{ab} = g_{ac} E^c_b - (-1)^{[a][b]} g_{bc} E^c_a
// and the metric g_{ab} = xi_a delta_{a,bbar}
GradedOp sigma_lower(const AlgebraSignature& sig, int a, int b);
Rat metric_g(const AlgebraSignature& sig, int a, int b);

// One Chevalley row of U_q[gl(m|n)^(2)] in the vector representation.
// h is the matrix of nu^{-1}(alpha) (it acts on a weight-w vector by
// (alpha, w)); f carries the sign that makes [e, f] = h exact in the
// chosen form convention.
struct ChevalleyRow {
    Weight alpha;   // root (alpha_0 stores the finite part -theta)
    RatMat e, f;
    RatVec h;       // diagonal of nu^{-1}(alpha)
    bool odd = false;
    bool isotropic = false;
    int kappa = 1;  // sign applied to the raw lowering generator
};

// Rows 0..s; row 0 is the affine triple (E_0 minimal vector of T).
std::vector<ChevalleyRow> chevalley_rows(const AlgebraSignature& sig);

struct RootDatum {
    std::vector<Weight> simple;  // alpha_1..alpha_s
    Weight alpha0;               // finite part -theta = -(delta_1+delta_2)
    Weight theta;
    std::vector<std::vector<Rat>> cartan;  // (s+1)x(s+1), row/col 0 = affine
    std::vector<Rat> sym;                  // (alpha_i, alpha_i)/2, index 0..s
};
RootDatum root_datum(const AlgebraSignature& sig);

// Graded half-sum of the positive roots.
Weight half_sum_rho(const AlgebraSignature& sig);

// Casimir eigenvalue C(lambda) = (lambda, lambda + 2 rho). delta_sign = +1
// is only used as the negative control fixing the form convention.
Rat casimir_eigenvalue(const AlgebraSignature& sig, const Weight& lam, int delta_sign = -1);

// Highest weight of the grid node (c,k) inside V(lambda_a) (x) V(lambda_b):
// (a+b-2c+k) delta_1 + k delta_2.
Weight grid_weight(const AlgebraSignature& sig, int a, int b, int c, int k);

// Verifies the two Casimir-difference identities on the whole (c,k) grid:
// the row-difference identity including its closed value
//   C(c,k) - C(c,k-1) = 2(rho,delta1+delta2) - 2(a+b-1) + 4(c-k),
// and the diagonal-difference loop identity
//   C(c,k) - C(c+1,k+1) = C(c,k-1) - C(c+1,k).
bool casimir_diff_check(const AlgebraSignature& sig, int a, int b, int delta_sign = -1);

// dim V(lambda_a): graded antisymmetric a-tensors of the vector space.
long minimal_module_dim(const AlgebraSignature& sig, int a);

}  // namespace ybeforge
