#include "ybeforge/ratfunc.hpp"

namespace ybeforge {

RatFunc::RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw forge_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num.is_zero()) {
        den = Poly::constant(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    if (den.lead() != 1) {
        Rat inv = Rat(1) / den.lead();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
}

bool RatFunc::is_one() const {
    return num.degree() == 0 && den.degree() == 0 && num.c[0] == 1;
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw forge_error("division by zero rational function");
    return RatFunc(num * o.den, den * o.num);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num * o.den + o.num * den, den * o.den);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num * o.den - o.num * den, den * o.den);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw forge_error("inverse of zero rational function");
    return RatFunc(den, num);
}

RatFunc RatFunc::recip_arg() const {
    int d = std::max(num.degree(), den.degree());
    if (d < 0) return *this;
    return RatFunc(num.reversed(d), den.reversed(d));
}

Rat RatFunc::eval(const Rat& z0) const {
    Rat d = den.eval(z0);
    if (d == 0) throw pole_error("pole at z = " + rat_str(z0));
    Rat v = num.eval(z0) / d;
    v.canonicalize();
    return v;
}

RatFunc bracket(long a, int sign, const DeformParam& dp) {
    if (sign != 1 && sign != -1) throw forge_error("bracket sign must be +-1");
    Rat qa = dp.q_pow(a);
    Rat s = Rat(sign);
    if (a != 0 && qa * qa == 1)
        throw degenerate_error("bracket <" + std::to_string(a) + ">: q^{2a} = 1");
    // num = 1 + s*qa*z, den = s*qa + z
    Poly num({Rat(1), s * qa});
    Poly den({s * qa, Rat(1)});
    return RatFunc(std::move(num), std::move(den));
}

}  // namespace ybeforge
