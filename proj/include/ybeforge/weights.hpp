#pragma once

#include <vector>

#include "ybeforge/rat.hpp"

namespace ybeforge {

// Weight over the (eps_1..eps_h | delta_1..delta_r) basis. Coefficients are
// exact rationals (the half-sum rho has half-integer entries for odd m).
// The invariant bilinear form is (eps_i,eps_j) = +delta_ij,
// (delta_mu,delta_nu) = -delta_munu, (eps,delta) = 0.
struct Weight {
    std::vector<Rat> eps, delta;

    Weight() = default;
    Weight(int h, int r) : eps(h, Rat(0)), delta(r, Rat(0)) {}

    static Weight unit_eps(int h, int r, int i);    // eps_{i+1}, 0-based slot i
    static Weight unit_delta(int h, int r, int mu);

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(const Rat& s) const;
    bool operator==(const Weight& o) const { return eps == o.eps && delta == o.delta; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool is_zero() const;

    // strict total order (lexicographic), for deterministic map keys
    bool operator<(const Weight& o) const;

    // Z2 parity class: sum of delta coefficients mod 2. Defined for
    // integral weights, which is all this is ever called on.
    int parity() const;

    std::string str() const;
};

// The invariant form; delta_sign = -1 is the project convention. The +1
// variant exists only as the negative control for the Casimir identities.
Rat weight_form(const Weight& a, const Weight& b, int delta_sign = -1);

}  // namespace ybeforge
