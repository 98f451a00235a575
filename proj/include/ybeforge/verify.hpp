#pragma once

#include "ybeforge/rmatrix.hpp"

namespace ybeforge {

// Result of one exact check. pass means the residual is the zero matrix;
// there are no tolerances anywhere. residual is "0" or the largest
// |numerator| over the nonzero residual entries.
struct CheckReport {
    std::string name;
    std::map<std::string, std::string> params;
    std::string residual = "0";
    bool pass = false;
    long runtime_ms = 0;
};

// R12(z) R13(zw) R23(w) = R23(w) R13(zw) R12(z) with R = P Rcheck on a
// triple product of one space (a = b case).
CheckReport check_graded_ybe(const SpectralRMatrix& R, const Rat& z, const Rat& w);

// Rcheck^{ab}(z) Rcheck^{ba}(1/z) = I.
CheckReport check_unitarity(const SpectralRMatrix& Rab, const SpectralRMatrix& Rba, const Rat& z);

// The e0 intertwining relation plus every finite generator, at fixed z.
CheckReport check_jimbo(const SpectralRMatrix& R, const TensorRep& ab, const TensorRep& ba,
                        const Rat& z);

// dim {X : [X, finite action] = 0}, optionally restricted to im(P_block).
int commutant_dimension(const TensorRep& t, const RatMat* p_block = nullptr);

// The composition series of the indecomposable block:
// V > Vbar(d1+d2) > trivial, with unique invariant line, Vbar maximal of
// codimension 1, and the quotient trivial.
CheckReport composition_series_check(const TensorRep& t, const ProjectorFamily& fam);

// Seeded generator of random rationals with |num|, den <= 100, avoiding
// 0, +-1 and the poles the caller screens.
class RationalSampler {
  public:
    explicit RationalSampler(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    Rat next();

  private:
    uint64_t state_;
    uint64_t step();
};

}  // namespace ybeforge
