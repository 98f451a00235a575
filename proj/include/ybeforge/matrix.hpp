#pragma once

#include <vector>

#include "ybeforge/rat.hpp"

namespace ybeforge {

using RatVec = std::vector<Rat>;

// Dense matrix over Rat. Row-major. All reductions pivot on the first
// nonzero entry in row order, so every derived basis is reproducible
// bit-for-bit.
struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Rat(0)) {}

    static RatMat identity(int n);

    Rat& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const Rat& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    bool is_zero() const;
    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator-() const;
    RatMat scaled(const Rat& s) const;
    // integer-cleared exact product; the workhorse
    RatMat operator*(const RatMat& o) const;

    RatMat transpose() const;

    RatVec apply(const RatVec& v) const;
    RatVec col(int c) const;

    // Largest |numerator| over nonzero entries; "0" when the matrix is zero.
    // Used as the residual magnitude in check reports.
    Int max_abs_numerator() const;
};

// In-place reduced row echelon form. Returns the pivot column of each pivot
// row (row order = pivot order).
std::vector<int> rref_inplace(RatMat& m);

int rank(RatMat m);

// Canonical kernel basis (one vector per free column, normalized so the
// first nonzero coordinate is 1). Returned as rows of a matrix with
// m.cols columns.
RatMat kernel(RatMat m);

RatMat inverse(const RatMat& m);

// Row span of a matrix in canonical (RREF) form. Supports incremental
// extension, membership tests and coordinate extraction relative to the
// canonical basis.
class Subspace {
  public:
    explicit Subspace(int ambient_dim) : dim_(ambient_dim) {}

    int ambient() const { return dim_; }
    int dim() const { return (int)rows_.size(); }

    // Reduce v against the basis; returns the residual.
    RatVec reduce(const RatVec& v) const;
    bool contains(const RatVec& v) const;

    // Insert v if independent; returns true if the dimension grew.
    bool add(const RatVec& v);

    // Coordinates of v in the canonical basis; throws if v is outside.
    RatVec coords(const RatVec& v) const;

    const std::vector<RatVec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    // Basis vectors as rows.
    RatMat basis_matrix() const;

  private:
    int dim_;
    std::vector<RatVec> rows_;  // RREF rows, pivot entry 1
    std::vector<int> piv_;      // pivot column per row, strictly increasing
};

}  // namespace ybeforge
