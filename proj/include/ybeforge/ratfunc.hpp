#pragma once

#include "ybeforge/deform.hpp"
#include "ybeforge/poly.hpp"

namespace ybeforge {

// Rational function in the spectral parameter z. Normal form: gcd(num,den)=1
// and den monic, so identical functions have bit-identical representations
// no matter how they were assembled.
struct RatFunc {
    Poly num, den;

    RatFunc() : num(Poly::zero()), den(Poly::constant(Rat(1))) {}
    RatFunc(Poly n, Poly d);

    static RatFunc constant(const Rat& x) { return RatFunc(Poly::constant(x), Poly::constant(Rat(1))); }
    static RatFunc one() { return constant(Rat(1)); }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }

    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }

    RatFunc inverse() const;
    // f(1/z), again in normal form
    RatFunc recip_arg() const;

    // exact evaluation; throws pole_error if den(z0) = 0
    Rat eval(const Rat& z0) const;
    bool is_pole(const Rat& z0) const { return den.eval(z0) == 0; }

  private:
    void reduce();
};

// The bracket <a>_sign = (1 +- z q^a) / (z +- q^a), the atom from which all
// R-matrix coefficient functions are built. sign is +1 or -1.
// For a = 0 this is the constant +1 (resp. -1); a degenerate q (q^{2a} = 1
// with a != 0) is rejected.
RatFunc bracket(long a, int sign, const DeformParam& dp);

}  // namespace ybeforge
