#include "ybeforge/tpg.hpp"

#include <algorithm>
#include <sstream>

namespace ybeforge {

const TPGNode& TwistedTPG::node(const NodeKey& key) const {
    for (const auto& n : nodes)
        if (n.c == key.first && n.k == key.second) return n;
    throw forge_error("no such TPG node");
}

bool TwistedTPG::is_merged(const NodeKey& key) const {
    if (!has_vnode) return false;
    return key.first == a && (key.second == 0 || key.second == 1);
}

std::vector<TPGNode> decomposition_grid(const AlgebraSignature& sig, int a, int b) {
    if (a < 1 || a > b) throw usage_error("decomposition grid needs 1 <= a <= b");
    const bool merged = (sig.m == sig.n) && (a == b);
    std::vector<TPGNode> nodes;
    for (int c = 0; c <= a; ++c) {
        for (int k = 0; k <= c; ++k) {
            TPGNode n;
            n.c = c;
            n.k = k;
            n.weight = grid_weight(sig, a, b, c, k);
            n.casimir = casimir_eigenvalue(sig, n.weight);
            n.parity_class = c % 2;
            n.indecomposable_member = merged && c == a && k <= 1;
            nodes.push_back(std::move(n));
        }
    }
    return nodes;
}

TwistedTPG build_extended_ttpg(const AlgebraSignature& sig, int a, int b) {
    TwistedTPG g;
    g.sig = sig;
    g.a = a;
    g.b = b;
    g.nodes = decomposition_grid(sig, a, b);
    g.has_vnode = (sig.m == sig.n) && (a == b);
    auto live = [&](int c, int k) { return !(g.has_vnode && c == a && k <= 1); };
    for (int c = 0; c <= a; ++c) {
        for (int k = 0; k < c; ++k) {  // same-row (c,k)-(c,k+1)
            if (live(c, k) && live(c, k + 1))
                g.edges.push_back(TPGEdge{{c, k}, {c, k + 1}, +1});
        }
    }
    for (int c = 0; c < a; ++c) {
        for (int k = 0; k <= c; ++k) {  // diagonal (c,k)-(c+1,k+1)
            if (live(c, k) && live(c + 1, k + 1))
                g.edges.push_back(TPGEdge{{c, k}, {c + 1, k + 1}, -1});
        }
    }
    if (g.has_vnode) {
        g.vnode_edges.push_back(TPGEdge{{a, 1}, {a - 1, 0}, -1});  // weight 2 d1, opposite parity
        if (a >= 2) g.vnode_edges.push_back(TPGEdge{{a, 1}, {a, 2}, +1});  // 2(d1+d2), same parity
    }
    return g;
}

std::map<NodeKey, RatFunc> solve_coefficients(const TwistedTPG& g, const DeformParam& dp) {
    genericity_guard(g.sig, g.a, g.b, dp);
    std::map<NodeKey, RatFunc> rho;
    rho[{0, 0}] = RatFunc::one();
    // breadth-first over edges until stable; extra edges close loops and
    // must reproduce the stored value exactly
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : g.edges) {
            const TPGNode& nf = g.node(e.from);
            const TPGNode& nt = g.node(e.to);
            Rat diff_to = (nf.casimir - nt.casimir) / 2;  // exponent toward e.to
            diff_to.canonicalize();
            auto have_f = rho.find(e.from), have_t = rho.find(e.to);
            if (have_f != rho.end() && have_t == rho.end()) {
                rho[e.to] = bracket(rat_to_long(diff_to), e.sign, dp) * have_f->second;
                grew = true;
            } else if (have_t != rho.end() && have_f == rho.end()) {
                rho[e.from] = bracket(-rat_to_long(diff_to), e.sign, dp) * have_t->second;
                grew = true;
            } else if (have_f != rho.end() && have_t != rho.end()) {
                RatFunc expect = bracket(rat_to_long(diff_to), e.sign, dp) * have_f->second;
                if (!(expect == have_t->second)) {
                    std::ostringstream os;
                    os << "inconsistent twisted TPG loop at edge (" << e.from.first << ","
                       << e.from.second << ")-(" << e.to.first << "," << e.to.second << ")";
                    throw forge_error(os.str());
                }
            }
        }
    }
    for (const auto& n : g.nodes) {
        if (n.indecomposable_member) continue;
        if (!rho.count({n.c, n.k})) throw forge_error("twisted TPG is not connected");
    }
    return rho;
}

std::map<NodeKey, RatFunc> closed_form_coefficients(const AlgebraSignature& sig, int a, int b,
                                                    const DeformParam& dp) {
    if (a > b) std::swap(a, b);
    genericity_guard(sig, a, b, dp);
    const bool merged = (sig.m == sig.n) && (a == b);
    std::map<NodeKey, RatFunc> rho;
    for (int c = 0; c <= a; ++c) {
        for (int k = 0; k <= c; ++k) {
            if (merged && c == a && k <= 1) continue;
            RatFunc v = RatFunc::one();
            for (int j = 1; j <= c - k; ++j) v = v * bracket(sig.m - sig.n + 2 * j - a - b, +1, dp);
            for (int i = 1; i <= c; ++i) v = v * bracket(2 * i - a - b - 2, -1, dp);
            rho[{c, k}] = v;
        }
    }
    return rho;
}

IndecomposableCoefficients rho_V_N(int a, const AlgebraSignature& sig, const DeformParam& dp) {
    if (sig.m != sig.n) throw usage_error("rho_V/rho_N exist only for m = n");
    Rat q2 = dp.q_pow(2);
    // (z - q^2)/(1 - z q^2) times the (a-1,0) node coefficient
    RatFunc pre(Poly({-q2, Rat(1)}), Poly({Rat(1), -q2}));
    RatFunc v = pre;
    for (int j = 1; j <= a - 1; ++j) v = v * bracket(2 * j - 2 * a, +1, dp);
    for (int i = 1; i <= a - 1; ++i) v = v * bracket(2 * i - 2 * a - 2, -1, dp);
    // (-1)^a q^{-a^2} (1-z)/(1+z)
    RatFunc shape(Poly({Rat(1), Rat(-1)}), Poly({Rat(1), Rat(1)}));
    Rat cst = dp.q_pow(-(long)a * a);
    if (a % 2 == 1) cst = -cst;
    IndecomposableCoefficients out{v, shape * v * RatFunc::constant(cst), shape * RatFunc::constant(cst)};
    return out;
}

std::string emit_dot(const TwistedTPG& g) {
    std::ostringstream os;
    os << "graph ttpg {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=circle fontsize=10];\n";
    auto nid = [](int c, int k) {
        std::ostringstream s;
        s << "n" << c << "_" << k;
        return s.str();
    };
    for (const auto& n : g.nodes) {
        if (g.has_vnode && n.indecomposable_member) {
            if (n.k == 1) {
                os << "  " << nid(n.c, 1) << " [label=\"V\" peripheries=2];\n";
            }
            continue;  // (a,0) merges into the circled node
        }
        os << "  " << nid(n.c, n.k) << " [label=\"(" << n.c << "," << n.k << ") "
           << n.weight.str() << " " << (n.parity_class ? "-" : "+") << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  " << nid(e.from.first, e.from.second) << " -- " << nid(e.to.first, e.to.second)
           << ";\n";
    }
    for (const auto& e : g.vnode_edges) {
        os << "  " << nid(e.from.first, e.from.second) << " -- " << nid(e.to.first, e.to.second)
           << ";\n";
    }
    os << "}\n";
    return os.str();
}

void genericity_guard(const AlgebraSignature& sig, int a, int b, const DeformParam& dp) {
    long window = 4L * (a + b + sig.m + sig.n);
    Rat q = dp.q();
    Rat p(1);
    for (long k = 1; k <= window; ++k) {
        p *= q;
        p.canonicalize();
        if (p == 1)
            throw degenerate_error("q^" + std::to_string(k) + " = 1 inside the working window");
        if (p == -1)
            throw degenerate_error("q^" + std::to_string(k) + " = -1 inside the working window");
    }
}

}  // namespace ybeforge
