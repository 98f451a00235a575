#pragma once

#include <vector>

#include "ybeforge/rat.hpp"

namespace ybeforge {

// Dense univariate polynomial in z over Rat. Coefficient i is the z^i term.
// Normal form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector. Degrees in this project stay small (< ~40), so
// dense storage and schoolbook multiplication are the right tools.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(const Rat& x);
    static Poly z();  // the monomial z

    void normalize();
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return (int)c.size() - 1; }
    const Rat& lead() const;

    Rat eval(const Rat& z0) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rat& s) const;
    bool operator==(const Poly& o) const { return c == o.c; }

    // z^n * p(1/z) with n >= degree; used for the z -> 1/z substitution.
    Poly reversed(int n) const;
};

// Remainder of a by b (b nonzero), standard long division over Q.
Poly poly_rem(const Poly& a, const Poly& b);

// Exact quotient; throws if the division leaves a remainder.
Poly poly_divexact(const Poly& a, const Poly& b);

// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace ybeforge
