#include "ybeforge/graded.hpp"

namespace ybeforge {

GradedSpace tensor_space(const GradedSpace& a, const GradedSpace& b) {
    GradedSpace t;
    t.parity.reserve((size_t)a.dim() * b.dim());
    const bool wts = !a.weights.empty() && !b.weights.empty();
    if (wts) t.weights.reserve((size_t)a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < b.dim(); ++j) {
            t.parity.push_back((a.parity[i] + b.parity[j]) & 1);
            if (wts) t.weights.push_back(a.weights[i] + b.weights[j]);
        }
    }
    return t;
}

GradedOp::GradedOp(GradedSpace d, GradedSpace c, RatMat mat)
    : dom(std::move(d)), cod(std::move(c)), m(std::move(mat)) {
    if (m.rows != cod.dim() || m.cols != dom.dim()) throw forge_error("graded op shape mismatch");
}

GradedOp GradedOp::identity(const GradedSpace& s) {
    return GradedOp(s, s, RatMat::identity(s.dim()));
}

GradedOp GradedOp::zero(const GradedSpace& dom, const GradedSpace& cod) {
    return GradedOp(dom, cod, RatMat(cod.dim(), dom.dim()));
}

GradedOp GradedOp::operator*(const GradedOp& o) const {
    if (!(dom == o.cod)) throw forge_error("graded op composition mismatch");
    return GradedOp(o.dom, cod, m * o.m);
}

GradedOp GradedOp::operator+(const GradedOp& o) const { return GradedOp(dom, cod, m + o.m); }
GradedOp GradedOp::operator-(const GradedOp& o) const { return GradedOp(dom, cod, m - o.m); }
GradedOp GradedOp::scaled(const Rat& s) const { return GradedOp(dom, cod, m.scaled(s)); }

HomogParity GradedOp::parity() const {
    bool even_seen = false, odd_seen = false;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (m.at(r, c) == 0) continue;
            if (((cod.parity[r] + dom.parity[c]) & 1) == 0)
                even_seen = true;
            else
                odd_seen = true;
        }
    }
    if (odd_seen && even_seen) return HomogParity::Mixed;
    if (odd_seen) return HomogParity::Odd;
    return HomogParity::Even;
}

GradedOp graded_op_tensor(const GradedOp& a, const GradedOp& b) {
    GradedSpace dom = tensor_space(a.dom, b.dom);
    GradedSpace cod = tensor_space(a.cod, b.cod);
    RatMat m(cod.dim(), dom.dim());
    const int bd = b.dom.dim(), bc = b.cod.dim();
    for (int i = 0; i < a.cod.dim(); ++i) {
        for (int k = 0; k < a.dom.dim(); ++k) {
            const Rat& aik = a.m.at(i, k);
            if (aik == 0) continue;
            const int pk = a.dom.parity[k];
            for (int j = 0; j < bc; ++j) {
                for (int l = 0; l < bd; ++l) {
                    const Rat& bjl = b.m.at(j, l);
                    if (bjl == 0) continue;
                    int sign = ((b.cod.parity[j] + b.dom.parity[l]) & 1) && pk ? -1 : 1;
                    Rat v = aik * bjl;
                    if (sign < 0) v = -v;
                    v.canonicalize();
                    m.at(i * bc + j, k * bd + l) = v;
                }
            }
        }
    }
    return GradedOp(std::move(dom), std::move(cod), std::move(m));
}

GradedOp graded_permutation(const GradedSpace& a, const GradedSpace& b) {
    GradedSpace dom = tensor_space(a, b);
    GradedSpace cod = tensor_space(b, a);
    RatMat m(cod.dim(), dom.dim());
    const int da = a.dim(), db = b.dim();
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < db; ++j) {
            int sign = (a.parity[i] && b.parity[j]) ? -1 : 1;
            m.at(j * da + i, i * db + j) = sign;
        }
    }
    return GradedOp(std::move(dom), std::move(cod), std::move(m));
}

GradedOp embed_leg(const GradedOp& a, Leg leg, const GradedSpace& v1, const GradedSpace& v2,
                   const GradedSpace& v3) {
    switch (leg) {
        case Leg::L12: {
            if (!(a.dom == tensor_space(v1, v2))) throw forge_error("embed_leg: operator not on V1(x)V2");
            return graded_op_tensor(a, GradedOp::identity(v3));
        }
        case Leg::L23: {
            if (!(a.dom == tensor_space(v2, v3))) throw forge_error("embed_leg: operator not on V2(x)V3");
            return graded_op_tensor(GradedOp::identity(v1), a);
        }
        case Leg::L13: {
            if (!(a.dom == tensor_space(v1, v3))) throw forge_error("embed_leg: operator not on V1(x)V3");
            if (!(a.cod == a.dom)) throw forge_error("embed_leg 13 needs an endomorphism");
            // (P21 (x) I)(I (x) A)(P12 (x) I)
            GradedOp p_in = graded_op_tensor(graded_permutation(v1, v2), GradedOp::identity(v3));
            GradedOp mid = graded_op_tensor(GradedOp::identity(v2), a);
            GradedOp p_out = graded_op_tensor(graded_permutation(v2, v1), GradedOp::identity(v3));
            return p_out * mid * p_in;
        }
    }
    throw forge_error("unreachable");
}

GradedOp graded_commutator(const GradedOp& a, const GradedOp& b) {
    HomogParity pa = a.parity(), pb = b.parity();
    if (pa == HomogParity::Mixed || pb == HomogParity::Mixed)
        throw forge_error("graded_commutator needs homogeneous operators");
    int sign = (pa == HomogParity::Odd && pb == HomogParity::Odd) ? -1 : 1;
    GradedOp ab = a * b;
    GradedOp ba = b * a;
    return sign > 0 ? ab - ba : ab + ba;
}

Rat supertrace(const GradedOp& a) {
    if (!(a.dom == a.cod)) throw forge_error("supertrace of non-endomorphism");
    Rat s(0);
    for (int i = 0; i < a.m.rows; ++i) {
        if (a.dom.parity[i])
            s -= a.m.at(i, i);
        else
            s += a.m.at(i, i);
    }
    s.canonicalize();
    return s;
}

}  // namespace ybeforge
