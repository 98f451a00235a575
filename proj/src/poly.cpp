#include "ybeforge/poly.hpp"

namespace ybeforge {

Poly Poly::constant(const Rat& x) {
    Poly p;
    if (x != 0) p.c.push_back(x);
    return p;
}

Poly Poly::z() {
    Poly p;
    p.c = {Rat(0), Rat(1)};
    return p;
}

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rat& Poly::lead() const {
    if (c.empty()) throw forge_error("leading coefficient of zero polynomial");
    return c.back();
}

Rat Poly::eval(const Rat& z0) const {
    Rat acc(0);
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * z0 + c[i];
    }
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(const Rat& s) const {
    if (s == 0) return Poly::zero();
    Poly r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

Poly Poly::reversed(int n) const {
    if (n < degree()) throw forge_error("reversed(): n below degree");
    Poly r;
    r.c.assign(n + 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[n - i] = c[i];
    r.normalize();
    return r;
}

Poly poly_rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw forge_error("polynomial division by zero");
    Poly r = a;
    Rat inv_lead = Rat(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat q = r.c.back() * inv_lead;
        int shift = r.degree() - b.degree();
        for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= q * b.c[i];
        r.normalize();
    }
    return r;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw forge_error("polynomial division by zero");
    if (a.is_zero()) return Poly::zero();
    Poly r = a;
    Poly q;
    q.c.assign(std::max(0, a.degree() - b.degree()) + 1, Rat(0));
    Rat inv_lead = Rat(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat qc = r.c.back() * inv_lead;
        int shift = r.degree() - b.degree();
        q.c[shift] = qc;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= qc * b.c[i];
        r.normalize();
    }
    if (!r.is_zero()) throw forge_error("poly_divexact: nonzero remainder");
    q.normalize();
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lead() != 1) {
        Rat inv = Rat(1) / a.lead();
        for (auto& x : a.c) x *= inv;
    }
    return a;
}

}  // namespace ybeforge
