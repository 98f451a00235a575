#pragma once

#include <map>

#include "ybeforge/liealg.hpp"
#include "ybeforge/ratfunc.hpp"

namespace ybeforge {

using NodeKey = std::pair<int, int>;  // (c, k)

struct TPGNode {
    int c = 0, k = 0;
    Weight weight;
    Rat casimir;
    int parity_class = 0;  // c mod 2, the relative parity epsilon
    bool indecomposable_member = false;
};

struct TPGEdge {
    NodeKey from, to;
    int sign;  // epsilon_nu epsilon_nu': +1 same row, -1 diagonal
};

struct TwistedTPG {
    AlgebraSignature sig;
    int a = 0, b = 0;  // a <= b
    std::vector<TPGNode> nodes;
    std::vector<TPGEdge> edges;          // between non-merged nodes
    bool has_vnode = false;
    std::vector<TPGEdge> vnode_edges;    // from = the merged node's grid slot

    const TPGNode& node(const NodeKey& key) const;
    bool is_merged(const NodeKey& key) const;
};

// Nodes {(c,k) : 0 <= k <= c <= a} with weights (a+b-2c+k) d1 + k d2; for
// m = n, a = b the pair (a,0),(a,1) is flagged as the indecomposable.
std::vector<TPGNode> decomposition_grid(const AlgebraSignature& sig, int a, int b);

// Edges: same-row (c,k)-(c,k+1) with sign +1, diagonal (c,k)-(c+1,k+1)
// with sign -1; in the merged case the vNode attaches to (a-1,0) with
// opposite parity and, when a >= 2, to (a,2) with equal parity.
TwistedTPG build_extended_ttpg(const AlgebraSignature& sig, int a, int b);

// Coefficients by the edge recursion rho_nu = <(C(nu')-C(nu))/2>_{sign}
// rho_nu', normalized to 1 at (0,0). Merged nodes are excluded (their
// coefficients are rho_V, rho_N). Loop inconsistency is an error naming
// the failing edge.
std::map<NodeKey, RatFunc> solve_coefficients(const TwistedTPG& g, const DeformParam& dp);

// The closed product form read off the graph:
//   rho(c,k) = prod_{j=1}^{c-k} <m-n+2j-a-b>_+  prod_{i=1}^{c} <2i-a-b-2>_-.
// The minus-product exponents are the exact Casimir differences along the
// diagonal edges.
std::map<NodeKey, RatFunc> closed_form_coefficients(const AlgebraSignature& sig, int a, int b,
                                                    const DeformParam& dp);

// rho_V and rho_N for the indecomposable case m = n, a = b:
//   rho_V(z) = (z-q^2)/(1-z q^2) * rho_{(a-1,0)}(z),
//   rho_N(z) = (-1)^a q^{-a^2} (1-z)/(1+z) rho_V(z).
struct IndecomposableCoefficients {
    RatFunc rho_V, rho_N;
    RatFunc ratio;  // rho_N / rho_V, the (1-z)/(1+z) shape times constant
};
IndecomposableCoefficients rho_V_N(int a, const AlgebraSignature& sig, const DeformParam& dp);

// Deterministic DOT rendering; the merged node is double-circled.
std::string emit_dot(const TwistedTPG& g);

// Aborts with degenerate_error if q^k = 1 for any |k| <= 4(a+b+m+n) or a
// recursion bracket degenerates.
void genericity_guard(const AlgebraSignature& sig, int a, int b, const DeformParam& dp);

}  // namespace ybeforge
