#include "ybeforge/reps.hpp"

#include <algorithm>

namespace ybeforge {

namespace {

RatMat diag_from(const RatVec& d) {
    RatMat m((int)d.size(), (int)d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at((int)i, (int)i) = d[i];
    return m;
}

RatMat tpow_diag(const DeformParam& dp, const RatVec& exps, int sgn) {
    RatMat m((int)exps.size(), (int)exps.size());
    for (size_t i = 0; i < exps.size(); ++i) m.at((int)i, (int)i) = dp.t_pow(sgn * rat_to_long(exps[i]));
    return m;
}

}  // namespace

Representation vector_rep(const AlgebraSignature& sig, const DeformParam& dp) {
    Representation rep{sig, dp, sig.vector_space(), {}, {}, {}, {}, {}, Weight(), "vector", {}};
    auto rows = chevalley_rows(sig);
    const int s = sig.s;
    rep.e.resize(s + 1);
    rep.f.resize(s + 1);
    rep.hhalf.resize(s + 1);
    rep.hhalf_inv.resize(s + 1);
    rep.hdiag.resize(s + 1);
    for (int i = 0; i <= s; ++i) {
        rep.e[i] = rows[i].e;
        rep.f[i] = rows[i].f;
        rep.hdiag[i] = rows[i].h;
        rep.hhalf[i] = tpow_diag(dp, rows[i].h, +1);
        rep.hhalf_inv[i] = tpow_diag(dp, rows[i].h, -1);
    }
    rep.highest = Weight::unit_delta(sig.h, sig.r, 0);
    return rep;
}

RatMat TensorRep::e0_at(const Rat& z) const { return e0_l.scaled(z) + e0_r; }

RatMat TensorRep::f0_at(const Rat& z) const {
    if (z == 0) throw forge_error("f0 needs z != 0");
    return f0_l.scaled(Rat(1) / z) + f0_r;
}

Representation TensorRep::at_z(const Rat& z) const {
    Representation rep{left.sig, left.dp, space, e, f, hhalf, hhalf_inv, hdiag,
                       left.highest + right.highest, "tensor", z};
    rep.e[0] = e0_at(z);
    rep.f[0] = f0_at(z);
    rep.hhalf[0] = h0half;
    rep.hhalf_inv[0] = h0half_inv;
    rep.hdiag[0] = h0diag;
    return rep;
}

TensorRep coproduct_rep(const Representation& a, const Representation& b) {
    if (a.sig.m != b.sig.m || a.sig.n != b.sig.n || a.dp.t() != b.dp.t())
        throw forge_error("tensor factors over different algebras");
    TensorRep t;
    t.left = a;
    t.right = b;
    t.space = tensor_space(a.space, b.space);
    const int s = a.sig.s;
    t.e.resize(s + 1);
    t.f.resize(s + 1);
    t.hhalf.resize(s + 1);
    t.hhalf_inv.resize(s + 1);
    t.hdiag.resize(s + 1);
    auto odd_of = [&](const RatMat& mat, const Representation& rep) {
        return GradedOp(rep.space, rep.space, mat);
    };
    for (int i = 0; i <= s; ++i) {
        GradedOp ea = odd_of(a.e[i], a);
        GradedOp eb = odd_of(b.e[i], b);
        GradedOp fa = odd_of(a.f[i], a);
        GradedOp fb = odd_of(b.f[i], b);
        GradedOp ka_m = odd_of(a.hhalf_inv[i], a);
        GradedOp kb_p = odd_of(b.hhalf[i], b);
        if (i == 0) {
            t.e0_r = graded_op_tensor(ka_m, eb).m;
            t.e0_l = graded_op_tensor(ea, kb_p).m;
            t.f0_r = graded_op_tensor(ka_m, fb).m;
            t.f0_l = graded_op_tensor(fa, kb_p).m;
        } else {
            t.e[i] = (graded_op_tensor(ka_m, eb) + graded_op_tensor(ea, kb_p)).m;
            t.f[i] = (graded_op_tensor(ka_m, fb) + graded_op_tensor(fa, kb_p)).m;
        }
    }
    // Cartan data: h is primitive, exponentials are group-like
    for (int i = 0; i <= s; ++i) {
        RatVec hd;
        hd.reserve((size_t)t.space.dim());
        for (int p = 0; p < a.dim(); ++p)
            for (int q = 0; q < b.dim(); ++q) {
                Rat v = a.hdiag[i][p] + b.hdiag[i][q];
                v.canonicalize();
                hd.push_back(v);
            }
        if (i == 0) {
            t.h0diag = hd;
            t.h0half = tpow_diag(a.dp, hd, +1);
            t.h0half_inv = tpow_diag(a.dp, hd, -1);
        } else {
            t.hdiag[i] = hd;
            t.hhalf[i] = tpow_diag(a.dp, hd, +1);
            t.hhalf_inv[i] = tpow_diag(a.dp, hd, -1);
        }
    }
    return t;
}

namespace {

// symmetric q-integer [n]_q = (q^n - q^{-n})/(q - q^{-1}); qexp is the
// t-exponent of q (q_i = t^{qexp})
Rat q_int(const DeformParam& dp, long qexp, long n) {
    Rat num = dp.t_pow(qexp * n) - dp.t_pow(-qexp * n);
    Rat den = dp.t_pow(qexp) - dp.t_pow(-qexp);
    Rat v = num / den;
    v.canonicalize();
    return v;
}

Rat q_binom(const DeformParam& dp, long qexp, long n, long k) {
    Rat v(1);
    for (long i = 1; i <= k; ++i) {
        v *= q_int(dp, qexp, n - k + i) / q_int(dp, qexp, i);
        v.canonicalize();
    }
    return v;
}

// The q-Serre element sum_k (-1)^k [N choose k]_{q_i} x^{N-k} y x^k with
// N = 1 - a_ij. This is the convention-free algebra form, valid for even
// rows i, and therefore transports to every representation.
RatMat serre_element(const DeformParam& dp, long qexp, long N, const RatMat& x, const RatMat& y) {
    std::vector<RatMat> xp;  // x^0..x^N
    xp.push_back(RatMat::identity(x.rows));
    for (long k = 1; k <= N; ++k) xp.push_back(xp.back() * x);
    RatMat acc(x.rows, x.cols);
    for (long k = 0; k <= N; ++k) {
        Rat c = q_binom(dp, qexp, N, k);
        if (k % 2 == 1) c = -c;
        acc = acc + (xp[N - k] * y * xp[k]).scaled(c);
    }
    return acc;
}

}  // namespace

std::vector<RelationIssue> relation_issues(const Representation& rep) {
    std::vector<RelationIssue> bad;
    const auto& sig = rep.sig;
    const auto& dp = rep.dp;
    const int s = sig.s;
    auto rows = chevalley_rows(sig);
    auto note = [&](const std::string& w) { bad.push_back(RelationIssue{w}); };

    std::vector<Weight> alpha(s + 1);
    for (int i = 0; i <= s; ++i) alpha[i] = rows[i].alpha;
    std::vector<int> par(s + 1);
    for (int i = 0; i <= s; ++i) par[i] = rows[i].odd ? 1 : 0;

    // Cartan conjugation
    for (int i = 0; i <= s; ++i) {
        for (int j = 0; j <= s; ++j) {
            long aij = rat_to_long(weight_form(alpha[i], alpha[j]));
            RatMat lhs = rep.hhalf[i] * rep.e[j];
            RatMat rhs = (rep.e[j] * rep.hhalf[i]).scaled(dp.t_pow(aij));
            if (!(lhs - rhs).is_zero())
                note("cartan/e relation failed at i=" + std::to_string(i) + " j=" + std::to_string(j));
            RatMat lhsf = rep.hhalf[i] * rep.f[j];
            RatMat rhsf = (rep.f[j] * rep.hhalf[i]).scaled(dp.t_pow(-aij));
            if (!(lhsf - rhsf).is_zero())
                note("cartan/f relation failed at i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    }
    // [e_i, f_j] = delta_ij [h_i]_q
    Rat qq = dp.q();
    Rat denom = qq - Rat(1) / qq;
    for (int i = 0; i <= s; ++i) {
        for (int j = 0; j <= s; ++j) {
            int koszul = (par[i] && par[j]) ? -1 : 1;
            RatMat comm = rep.e[i] * rep.f[j] - (rep.f[j] * rep.e[i]).scaled(Rat(koszul));
            if (i == j) {
                RatVec box(rep.dim());
                for (int p = 0; p < rep.dim(); ++p) {
                    long x = rat_to_long(rep.hdiag[i][p]);
                    Rat v = (dp.q_pow(x) - dp.q_pow(-x)) / denom;
                    v.canonicalize();
                    box[p] = v;
                }
                if (!(comm - diag_from(box)).is_zero())
                    note("[e,f] != [h]_q at i=" + std::to_string(i));
            } else {
                if (!comm.is_zero())
                    note("[e_i,f_j] != 0 at i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
        }
    }
    // Serre relations. Isotropic odd rows contribute x^2 = 0; even rows the
    // q-binomial Serre sum. Odd non-isotropic rows (only m = 1) are outside
    // the checked set, matching the ignored higher-order relations.
    for (int i = 0; i <= s; ++i) {
        Rat aii = weight_form(alpha[i], alpha[i]);
        if (aii == 0) {
            if (!(rep.e[i] * rep.e[i]).is_zero()) note("e_i^2 != 0 on isotropic row " + std::to_string(i));
            if (!(rep.f[i] * rep.f[i]).is_zero()) note("f_i^2 != 0 on isotropic row " + std::to_string(i));
            continue;
        }
        if (par[i]) continue;
        long qexp = rat_to_long(aii);  // q_i = q^{(a_i,a_i)/2} = t^{(a_i,a_i)}
        for (int j = 0; j <= s; ++j) {
            if (j == i) continue;
            Rat aij_r = Rat(2) * weight_form(alpha[i], alpha[j]) / aii;
            aij_r.canonicalize();
            long aij = rat_to_long(aij_r);
            if (aij > 0) continue;
            long N = 1 - aij;
            if (!serre_element(dp, qexp, N, rep.e[i], rep.e[j]).is_zero())
                note("e-Serre failed at i=" + std::to_string(i) + " j=" + std::to_string(j));
            if (!serre_element(dp, qexp, N, rep.f[i], rep.f[j]).is_zero())
                note("f-Serre failed at i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    }
    return bad;
}

bool relations_hold(const Representation& rep) { return relation_issues(rep).empty(); }

std::map<Weight, std::vector<int>> weight_decomposition(const GradedSpace& space) {
    if (space.weights.empty()) throw forge_error("space carries no weight labels");
    std::map<Weight, std::vector<int>> blocks;
    for (int p = 0; p < space.dim(); ++p) blocks[space.weights[p]].push_back(p);
    return blocks;
}

std::vector<HighestWeightVector> highest_weight_vectors(const GradedSpace& space,
                                                        const std::vector<RatMat>& e_finite) {
    auto blocks = weight_decomposition(space);
    std::vector<HighestWeightVector> out;
    for (const auto& [w, idx] : blocks) {
        const int d = (int)idx.size();
        // stack the restrictions of every raising operator to this block
        std::vector<RatVec> rows;
        for (const auto& e : e_finite) {
            // nonzero rows of e * (block columns)
            for (int rrow = 0; rrow < e.rows; ++rrow) {
                RatVec row(d, Rat(0));
                bool nz = false;
                for (int c = 0; c < d; ++c) {
                    row[c] = e.at(rrow, idx[c]);
                    if (row[c] != 0) nz = true;
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
        RatMat sys((int)rows.size(), d);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < d; ++c) sys.at((int)r, c) = rows[r][c];
        RatMat ker = kernel(sys);
        for (int r = 0; r < ker.rows; ++r) {
            HighestWeightVector hw;
            hw.weight = w;
            hw.vec.assign(space.dim(), Rat(0));
            for (int c = 0; c < d; ++c) hw.vec[idx[c]] = ker.at(r, c);
            int first = -1;
            for (int p = 0; p < space.dim(); ++p)
                if (hw.vec[p] != 0) {
                    first = p;
                    break;
                }
            hw.parity = first >= 0 ? space.parity[first] : 0;
            out.push_back(std::move(hw));
        }
    }
    return out;
}

std::vector<HighestWeightVector> highest_weight_vectors(const TensorRep& t) {
    std::vector<RatMat> es(t.e.begin() + 1, t.e.end());
    return highest_weight_vectors(t.space, es);
}

Subspace cyclic_closure(const RatVec& seed, const std::vector<const RatMat*>& ops) {
    Subspace sub((int)seed.size());
    sub.add(seed);
    std::vector<RatVec> frontier{seed};
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& v : frontier) {
            for (const RatMat* op : ops) {
                RatVec img = op->apply(v);
                if (sub.add(img)) next.push_back(std::move(img));
            }
        }
        frontier = std::move(next);
    }
    return sub;
}

RatMat compress(const RatMat& op, const Subspace& sub) {
    const int d = sub.dim();
    RatMat out(d, d);
    for (int j = 0; j < d; ++j) {
        RatVec img = op.apply(sub.basis()[j]);
        RatVec c;
        try {
            c = sub.coords(img);
        } catch (const forge_error&) {
            throw forge_error("compress: subspace not invariant");
        }
        for (int i = 0; i < d; ++i) out.at(i, j) = c[i];
    }
    return out;
}

}  // namespace ybeforge
