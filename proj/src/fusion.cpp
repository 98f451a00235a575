#include <tuple>

#include "ybeforge/rmatrix.hpp"

namespace ybeforge {

namespace {

// fused modules are deterministic in (m, n, a, t); cache per process
std::map<std::tuple<int, int, int, std::string>, Representation>& fusion_cache() {
    static std::map<std::tuple<int, int, int, std::string>, Representation> cache;
    return cache;
}

Subspace column_span(const RatMat& m) {
    Subspace s(m.rows);
    for (int c = 0; c < m.cols; ++c) s.add(m.col(c));
    return s;
}

bool invariant_under(const RatMat& op, const Subspace& s) {
    for (const auto& b : s.basis())
        if (!s.contains(op.apply(b))) return false;
    return true;
}

Representation compress_to_rep(const TensorRep& amb, const Subspace& sub, const Rat& w, int a) {
    const auto& sig = amb.sig();
    const auto& dp = amb.dp();
    Representation rep;
    rep.sig = sig;
    rep.dp = dp;
    rep.label = "lambda_" + std::to_string(a);
    rep.fusion_z = w;
    rep.highest = Weight::unit_delta(sig.h, sig.r, 0).scaled(Rat(a));
    const int d = sub.dim();
    rep.space.parity.resize(d);
    rep.space.weights.resize(d);
    for (int i = 0; i < d; ++i) {
        int piv = sub.pivots()[i];
        rep.space.parity[i] = amb.space.parity[piv];
        rep.space.weights[i] = amb.space.weights[piv];
    }
    const int s = sig.s;
    rep.e.resize(s + 1);
    rep.f.resize(s + 1);
    rep.hhalf.resize(s + 1);
    rep.hhalf_inv.resize(s + 1);
    rep.hdiag.resize(s + 1);
    for (int i = 1; i <= s; ++i) {
        rep.e[i] = compress(amb.e[i], sub);
        rep.f[i] = compress(amb.f[i], sub);
        rep.hhalf[i] = compress(amb.hhalf[i], sub);
        rep.hhalf_inv[i] = compress(amb.hhalf_inv[i], sub);
        RatVec hd(d);
        for (int p = 0; p < d; ++p) hd[p] = amb.hdiag[i][sub.pivots()[p]];
        rep.hdiag[i] = hd;
    }
    // Canonical spectral gauge: the compressed affine action sits at the
    // multiplicative center sqrt(w) of the fused pair; dividing e0 by it
    // (and scaling f0 back) puts every fused module at spectral origin,
    // which is what makes mixed tensor products match the graph
    // coefficients on the nose.
    Rat gauge = rat_sqrt(w);
    rep.e[0] = compress(amb.e0_at(w), sub).scaled(Rat(1) / gauge);
    rep.f[0] = compress(amb.f0_at(w), sub).scaled(gauge);
    rep.hhalf[0] = compress(amb.h0half, sub);
    rep.hhalf_inv[0] = compress(amb.h0half_inv, sub);
    RatVec hd0(d);
    for (int p = 0; p < d; ++p) hd0[p] = amb.h0diag[sub.pivots()[p]];
    rep.hdiag[0] = hd0;
    return rep;
}

}  // namespace

Representation fuse_minimal(int a, const AlgebraSignature& sig, const DeformParam& dp) {
    if (a < 1) throw usage_error("fusion needs a >= 1");
    if (a == 1) return vector_rep(sig, dp);
    auto key = std::make_tuple(sig.m, sig.n, a, rat_str(dp.t()));
    auto& cache = fusion_cache();
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    Representation prev = fuse_minimal(a - 1, sig, dp);
    Representation v1 = vector_rep(sig, dp);
    // Rcheck: V(lambda_{a-1}) (x) V(lambda_1) -> V(lambda_1) (x) V(lambda_{a-1})
    SpectralRMatrix R = assemble(a - 1, 1, sig, dp);
    TensorRep amb = coproduct_rep(v1, prev);
    const long want_dim = minimal_module_dim(sig, a);

    for (const Rat& z0 : R.special_points()) {
        RatMat M = R.eval_cleared(z0);
        if (M.is_zero()) continue;
        Subspace img = column_span(M);
        if (img.dim() != want_dim) continue;
        Rat zinv = Rat(1) / z0;
        zinv.canonicalize();
        for (const Rat& w : {z0, zinv}) {
            if (!invariant_under(amb.e0_at(w), img)) continue;
            if (!invariant_under(amb.f0_at(w), img)) continue;
            // subrepresentation generated by the top weight vector
            Weight top = Weight::unit_delta(sig.h, sig.r, 0).scaled(Rat(a));
            RatVec seed;
            for (size_t bi = 0; bi < img.basis().size(); ++bi) {
                if (amb.space.weights[img.pivots()[bi]] == top) {
                    seed = img.basis()[bi];
                    break;
                }
            }
            if (seed.empty()) continue;
            std::vector<const RatMat*> fs;
            for (int i = 1; i <= sig.s; ++i) fs.push_back(&amb.f[i]);
            Subspace sub = cyclic_closure(seed, fs);
            if (sub.dim() != want_dim) continue;
            Representation fused = compress_to_rep(amb, sub, w, a);
            if (!relations_hold(fused)) continue;
            cache[key] = fused;
            return fused;
        }
    }
    throw forge_error("fusion point search failed for lambda_" + std::to_string(a));
}

}  // namespace ybeforge
