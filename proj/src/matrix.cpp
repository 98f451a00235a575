#include "ybeforge/matrix.hpp"

namespace ybeforge {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows != o.rows || cols != o.cols) throw forge_error("matrix shape mismatch in +");
    RatMat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows != o.rows || cols != o.cols) throw forge_error("matrix shape mismatch in -");
    RatMat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

RatMat RatMat::operator-() const {
    RatMat r = *this;
    for (auto& x : r.a) x = -x;
    return r;
}

RatMat RatMat::scaled(const Rat& s) const {
    RatMat r = *this;
    for (auto& x : r.a) {
        x *= s;
        x.canonicalize();
    }
    return r;
}

// Clears denominators per row of the left factor and per column of the
// right factor, runs the inner products in mpz, and divides once at the
// end. Large exact products are ~10x faster this way than naive mpq.
RatMat RatMat::operator*(const RatMat& o) const {
    if (cols != o.rows) throw forge_error("matrix shape mismatch in *");
    const int m = rows, k = cols, n = o.cols;
    RatMat r(m, n);
    if (m == 0 || n == 0 || k == 0) return r;

    std::vector<Int> lhs((size_t)m * k), rhs((size_t)k * n);
    std::vector<Int> rden(m, Int(1)), cden(n, Int(1));
    for (int i = 0; i < m; ++i) {
        Int& d = rden[i];
        for (int l = 0; l < k; ++l) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), at(i, l).get_den().get_mpz_t());
        for (int l = 0; l < k; ++l) {
            const Rat& x = at(i, l);
            Int t;
            mpz_divexact(t.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
            lhs[(size_t)i * k + l] = t * x.get_num();
        }
    }
    for (int j = 0; j < n; ++j) {
        Int& d = cden[j];
        for (int l = 0; l < k; ++l) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), o.at(l, j).get_den().get_mpz_t());
        for (int l = 0; l < k; ++l) {
            const Rat& x = o.at(l, j);
            Int t;
            mpz_divexact(t.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
            rhs[(size_t)l * n + j] = t * x.get_num();
        }
    }
    Int acc, prod;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            acc = 0;
            for (int l = 0; l < k; ++l) {
                mpz_mul(prod.get_mpz_t(), lhs[(size_t)i * k + l].get_mpz_t(), rhs[(size_t)l * n + j].get_mpz_t());
                mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), prod.get_mpz_t());
            }
            if (acc != 0) {
                Rat v(acc, rden[i] * cden[j]);
                v.canonicalize();
                r.at(i, j) = v;
            }
        }
    }
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatVec RatMat::apply(const RatVec& v) const {
    if ((int)v.size() != cols) throw forge_error("matrix/vector shape mismatch");
    RatVec r(rows, Rat(0));
    for (int i = 0; i < rows; ++i) {
        Rat acc(0);
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
        acc.canonicalize();
        r[i] = acc;
    }
    return r;
}

RatVec RatMat::col(int c) const {
    RatVec r(rows);
    for (int i = 0; i < rows; ++i) r[i] = at(i, c);
    return r;
}

Int RatMat::max_abs_numerator() const {
    Int best(0);
    for (const auto& x : a) {
        Int n = abs(x.get_num());
        if (n > best) best = n;
    }
    return best;
}

std::vector<int> rref_inplace(RatMat& m) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != row)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) {
            m.at(row, c) *= inv;
            m.at(row, c).canonicalize();
        }
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            const Rat f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; ++c) {
                m.at(r, c) -= f * m.at(row, c);
                m.at(r, c).canonicalize();
            }
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

int rank(RatMat m) { return (int)rref_inplace(m).size(); }

RatMat kernel(RatMat m) {
    const int n = m.cols;
    std::vector<int> piv = rref_inplace(m);
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    RatMat ker((int)(n - piv.size()), n);
    int kr = 0;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        ker.at(kr, f) = 1;
        for (size_t r = 0; r < piv.size(); ++r) ker.at(kr, piv[r]) = -m.at((int)r, f);
        // canonical scale: first nonzero coordinate 1
        for (int c = 0; c < n; ++c) {
            if (ker.at(kr, c) != 0) {
                Rat inv = Rat(1) / ker.at(kr, c);
                for (int c2 = c; c2 < n; ++c2) {
                    ker.at(kr, c2) *= inv;
                    ker.at(kr, c2).canonicalize();
                }
                break;
            }
        }
        ++kr;
    }
    return ker;
}

RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) throw forge_error("inverse of non-square matrix");
    const int n = m.rows;
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto piv = rref_inplace(aug);
    if ((int)piv.size() != n) throw forge_error("singular matrix");
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

RatVec Subspace::reduce(const RatVec& v) const {
    if ((int)v.size() != dim_) throw forge_error("subspace ambient dimension mismatch");
    RatVec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& f = r[piv_[i]];
        if (f == 0) continue;
        const Rat coef = f;
        const RatVec& b = rows_[i];
        for (int c = piv_[i]; c < dim_; ++c) {
            if (b[c] != 0) {
                r[c] -= coef * b[c];
                r[c].canonicalize();
            }
        }
    }
    return r;
}

bool Subspace::contains(const RatVec& v) const {
    RatVec r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::add(const RatVec& v) {
    RatVec r = reduce(v);
    int p = -1;
    for (int c = 0; c < dim_; ++c) {
        if (r[c] != 0) {
            p = c;
            break;
        }
    }
    if (p < 0) return false;
    Rat inv = Rat(1) / r[p];
    for (int c = p; c < dim_; ++c) {
        r[c] *= inv;
        r[c].canonicalize();
    }
    // keep full RREF: clear column p in existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rat f = rows_[i][p];
        if (f == 0) continue;
        for (int c = p; c < dim_; ++c) {
            rows_[i][c] -= f * r[c];
            rows_[i][c].canonicalize();
        }
    }
    size_t pos = 0;
    while (pos < piv_.size() && piv_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    piv_.insert(piv_.begin() + pos, p);
    return true;
}

RatVec Subspace::coords(const RatVec& v) const {
    RatVec c(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
    // verify v is actually in the span
    RatVec chk = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (rows_[i][j] != 0) {
                chk[j] -= c[i] * rows_[i][j];
                chk[j].canonicalize();
            }
        }
    }
    for (const auto& x : chk)
        if (x != 0) throw forge_error("vector outside subspace in coords()");
    return c;
}

RatMat Subspace::basis_matrix() const {
    RatMat m(dim(), dim_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim_; ++j) m.at(i, j) = rows_[i][j];
    return m;
}

}  // namespace ybeforge
