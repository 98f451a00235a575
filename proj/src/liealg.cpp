#include "ybeforge/liealg.hpp"

namespace ybeforge {

AlgebraSignature::AlgebraSignature(int m_, int n_) : m(m_), n(n_) {
    if (n <= 2 || n % 2 != 0) throw usage_error("need n even and n > 2");
    if (m < 1 || m > n) throw usage_error("need 1 <= m <= n");
    r = n / 2;
    h = m / 2;
    s = h + r;
}

int AlgebraSignature::bar(int pos) const {
    if (pos < m) return m - 1 - pos;
    return 2 * m + n - 1 - pos;
}

int AlgebraSignature::xi(int pos) const {
    if (pos < m) return 1;
    int mu = pos - m + 1;
    return (mu % 2 == 0) ? 1 : -1;
}

Weight AlgebraSignature::basis_weight(int pos) const {
    if (pos < m) {
        int i = pos + 1;
        if (i <= h) return Weight::unit_eps(h, r, i - 1);
        if (i > m - h) return -Weight::unit_eps(h, r, m - i);
        return Weight(h, r);  // middle vector for odd m
    }
    int mu = pos - m + 1;
    if (mu <= r) return Weight::unit_delta(h, r, mu - 1);
    return -Weight::unit_delta(h, r, n - mu);
}

GradedSpace AlgebraSignature::vector_space() const {
    GradedSpace v;
    v.parity.resize(m + n);
    for (int p = 0; p < m + n; ++p) v.parity[p] = parity(p);
    v.weights.reserve(m + n);
    for (int p = 0; p < m + n; ++p) v.weights.push_back(basis_weight(p));
    return v;
}

GradedOp gl_generator(const AlgebraSignature& sig, int a, int b) {
    if (a < 0 || b < 0 || a >= sig.dim() || b >= sig.dim())
        throw usage_error("generator index out of range");
    GradedSpace v = sig.vector_space();
    RatMat m(sig.dim(), sig.dim());
    m.at(a, b) = 1;
    return GradedOp(v, v, std::move(m));
}

OmegaImage omega(const AlgebraSignature& sig, int a, int b) {
    int pa = sig.parity(a), pb = sig.parity(b);
    int exp = pa * ((pa + pb) % 2);
    int sign = -(exp % 2 == 0 ? 1 : -1) * sig.xi(a) * sig.xi(b);
    return OmegaImage{sig.bar(b), sig.bar(a), sign};
}

GradedOp sigma_op(const AlgebraSignature& sig, int a, int b) {
    OmegaImage w = omega(sig, a, b);
    GradedOp e = gl_generator(sig, a, b);
    GradedOp img = gl_generator(sig, w.a, w.b).scaled(Rat(w.sign));
    return e + img;
}

GradedOp t_op(const AlgebraSignature& sig, int a, int b) {
    OmegaImage w = omega(sig, a, b);
    GradedOp e = gl_generator(sig, a, b);
    GradedOp img = gl_generator(sig, w.a, w.b).scaled(Rat(w.sign));
    return e - img;
}

Rat metric_g(const AlgebraSignature& sig, int a, int b) {
    return a == sig.bar(b) ? Rat(sig.xi(a)) : Rat(0);
}

GradedOp sigma_lower(const AlgebraSignature& sig, int a, int b) {
    // g_{ac} picks c = abar, g_{bc} picks c = bbar
    GradedOp first = gl_generator(sig, sig.bar(a), b).scaled(Rat(sig.xi(a)));
    int sign = (sig.parity(a) && sig.parity(b)) ? -1 : 1;
    GradedOp second = gl_generator(sig, sig.bar(b), a).scaled(Rat(sign * sig.xi(b)));
    return first - second;
}

namespace {

// even-sector 1-based index -> position
int epos(int i) { return i - 1; }
// odd-sector 1-based index -> position
int dpos(const AlgebraSignature& sig, int mu) { return sig.m + mu - 1; }

RatVec h_diagonal(const AlgebraSignature& sig, const Weight& alpha) {
    RatVec d(sig.dim());
    for (int p = 0; p < sig.dim(); ++p) d[p] = weight_form(alpha, sig.basis_weight(p));
    return d;
}

}  // namespace

std::vector<ChevalleyRow> chevalley_rows(const AlgebraSignature& sig) {
    const int h = sig.h, r = sig.r, m = sig.m, s = sig.s;
    std::vector<ChevalleyRow> rows(s + 1);
    GradedSpace V = sig.vector_space();

    auto put = [&](int idx, const Weight& alpha, const GradedOp& E, const GradedOp& Fraw) {
        ChevalleyRow& row = rows[idx];
        row.alpha = alpha;
        row.e = E.m;
        row.odd = alpha.parity() == 1;
        row.isotropic = weight_form(alpha, alpha) == 0;
        row.h = h_diagonal(sig, alpha);
        // fix the lowering sign so that [e, f] = h exactly
        RatMat hm(sig.dim(), sig.dim());
        for (int p = 0; p < sig.dim(); ++p) hm.at(p, p) = row.h[p];
        GradedOp cls = graded_commutator(E, Fraw);
        if (cls.m == hm) {
            row.kappa = 1;
            row.f = Fraw.m;
        } else if (cls.m == -hm) {
            row.kappa = -1;
            row.f = Fraw.scaled(Rat(-1)).m;
        } else {
            throw forge_error("classical [E,F] is not +-h on a Chevalley row");
        }
    };

    auto eps_w = [&](int i) { return Weight::unit_eps(h, r, i - 1); };
    auto del_w = [&](int mu) { return Weight::unit_delta(h, r, mu - 1); };

    // o(m) rows
    for (int i = 1; i + 1 <= h; ++i) {
        put(i, eps_w(i) - eps_w(i + 1), sigma_op(sig, epos(i), epos(i + 1)),
            sigma_op(sig, epos(i + 1), epos(i)));
    }
    if (h >= 1) {
        if (m % 2 == 1) {
            put(h, eps_w(h), sigma_op(sig, epos(h), epos(h + 1)), sigma_op(sig, epos(h + 1), epos(h)));
        } else if (h >= 2) {
            int hb = m + 1 - h;  // bar of index h, even sector
            put(h, eps_w(h - 1) + eps_w(h), sigma_op(sig, epos(h - 1), epos(hb)),
                sigma_op(sig, epos(hb), epos(h - 1)));
        } else {
            // m = 2: o(2) has no root; the missing slot is filled by the
            // second odd simple root delta_r + eps_1
            int e1b = epos(2);  // bar of eps-index 1
            put(1, del_w(r) + eps_w(1), sigma_op(sig, dpos(sig, r), e1b),
                sigma_op(sig, e1b, dpos(sig, r)));
        }
    }
    // gl(r) rows
    for (int mu = 1; mu + 1 <= r; ++mu) {
        put(h + mu, del_w(mu) - del_w(mu + 1), sigma_op(sig, dpos(sig, mu), dpos(sig, mu + 1)),
            sigma_op(sig, dpos(sig, mu + 1), dpos(sig, mu)));
    }
    // odd row s: alpha_s = delta_r - eps_1 (for m = 1, eps_1 = 0)
    {
        Weight alpha = del_w(r);
        if (h >= 1) alpha = alpha - eps_w(1);
        put(s, alpha, sigma_op(sig, dpos(sig, r), epos(1)), sigma_op(sig, epos(1), dpos(sig, r)));
    }
    // affine row: E_0 = T^{bar(1)}_2 (odd sector), F_0 = T^2_{bar(1)},
    // alpha_0 finite part -theta
    {
        int b1 = dpos(sig, sig.n);  // bar of delta-index 1
        int d2 = dpos(sig, 2);
        Weight alpha = -(del_w(1) + del_w(2));
        put(0, alpha, t_op(sig, b1, d2), t_op(sig, d2, b1));
    }
    return rows;
}

RootDatum root_datum(const AlgebraSignature& sig) {
    auto rows = chevalley_rows(sig);
    RootDatum rd;
    rd.theta = Weight::unit_delta(sig.h, sig.r, 0) + Weight::unit_delta(sig.h, sig.r, 1);
    rd.alpha0 = rows[0].alpha;
    for (int i = 1; i <= sig.s; ++i) rd.simple.push_back(rows[i].alpha);
    rd.cartan.assign(sig.s + 1, std::vector<Rat>(sig.s + 1, Rat(0)));
    rd.sym.resize(sig.s + 1);
    for (int i = 0; i <= sig.s; ++i) {
        const Weight& ai = rows[i].alpha;
        Rat aii = weight_form(ai, ai);
        rd.sym[i] = aii / 2;
        for (int j = 0; j <= sig.s; ++j) {
            Rat aij = weight_form(ai, rows[j].alpha);
            // isotropic rows keep the raw form value
            rd.cartan[i][j] = (aii == 0) ? aij : Rat(2) * aij / aii;
            rd.cartan[i][j].canonicalize();
        }
    }
    return rd;
}

Weight half_sum_rho(const AlgebraSignature& sig) {
    Weight rho(sig.h, sig.r);
    for (int i = 1; i <= sig.h; ++i) rho.eps[i - 1] = Rat(sig.m - 2 * i, 2);
    for (int mu = 1; mu <= sig.r; ++mu) rho.delta[mu - 1] = Rat(sig.n - sig.m + 2 - 2 * mu, 2);
    for (auto& x : rho.eps) x.canonicalize();
    for (auto& x : rho.delta) x.canonicalize();
    return rho;
}

Rat casimir_eigenvalue(const AlgebraSignature& sig, const Weight& lam, int delta_sign) {
    Weight rho = half_sum_rho(sig);
    Weight lam2rho = lam + rho + rho;
    return weight_form(lam, lam2rho, delta_sign);
}

Weight grid_weight(const AlgebraSignature& sig, int a, int b, int c, int k) {
    Weight w(sig.h, sig.r);
    w.delta[0] = a + b - 2 * c + k;
    w.delta[1] = k;
    return w;
}

bool casimir_diff_check(const AlgebraSignature& sig, int a, int b, int delta_sign) {
    Weight rho = half_sum_rho(sig);
    Weight d1 = Weight::unit_delta(sig.h, sig.r, 0);
    Weight d2 = Weight::unit_delta(sig.h, sig.r, 1);
    auto C = [&](int c, int k) {
        return casimir_eigenvalue(sig, grid_weight(sig, a, b, c, k), delta_sign);
    };
    Rat rho_theta = weight_form(rho, d1 + d2, delta_sign);
    for (int c = 0; c <= a; ++c) {
        for (int k = 0; k <= c; ++k) {
            if (k >= 1) {
                Rat lhs = C(c, k) - C(c, k - 1);
                Rat rhs = 2 * rho_theta - 2 * Rat(a + b - 1) + 4 * Rat(c - k);
                rhs.canonicalize();
                if (lhs != rhs) return false;
                if (c + 1 <= a) {
                    // row differences agree between adjacent rows
                    if (lhs != C(c + 1, k + 1) - C(c + 1, k)) return false;
                }
            }
            if (c + 1 <= a && k >= 1) {
                // diagonal loop identity
                if (C(c, k) - C(c + 1, k + 1) != C(c, k - 1) - C(c + 1, k)) return false;
            }
        }
    }
    return true;
}

long minimal_module_dim(const AlgebraSignature& sig, int a) {
    if (a < 0) throw usage_error("a must be >= 0");
    // sum over j even indices chosen antisymmetrically, a-j odd indices with
    // repetition
    auto binom = [](long n, long k) -> long {
        if (k < 0 || k > n) return 0;
        long r = 1;
        for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    long total = 0;
    for (int j = 0; j <= std::min<long>(a, sig.m); ++j)
        total += binom(sig.m, j) * binom(sig.n + (a - j) - 1, a - j);
    return total;
}

}  // namespace ybeforge
