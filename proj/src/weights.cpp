#include "ybeforge/weights.hpp"

#include <sstream>

namespace ybeforge {

Weight Weight::unit_eps(int h, int r, int i) {
    Weight w(h, r);
    w.eps.at(i) = 1;
    return w;
}

Weight Weight::unit_delta(int h, int r, int mu) {
    Weight w(h, r);
    w.delta.at(mu) = 1;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    if (eps.size() != o.eps.size() || delta.size() != o.delta.size())
        throw forge_error("weight basis mismatch");
    Weight w = *this;
    for (size_t i = 0; i < eps.size(); ++i) w.eps[i] += o.eps[i];
    for (size_t i = 0; i < delta.size(); ++i) w.delta[i] += o.delta[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight w = *this;
    for (auto& x : w.eps) x = -x;
    for (auto& x : w.delta) x = -x;
    return w;
}

Weight Weight::scaled(const Rat& s) const {
    Weight w = *this;
    for (auto& x : w.eps) {
        x *= s;
        x.canonicalize();
    }
    for (auto& x : w.delta) {
        x *= s;
        x.canonicalize();
    }
    return w;
}

bool Weight::is_zero() const {
    for (const auto& x : eps)
        if (x != 0) return false;
    for (const auto& x : delta)
        if (x != 0) return false;
    return true;
}

bool Weight::operator<(const Weight& o) const {
    if (eps.size() != o.eps.size()) return eps.size() < o.eps.size();
    if (delta.size() != o.delta.size()) return delta.size() < o.delta.size();
    for (size_t i = 0; i < eps.size(); ++i)
        if (eps[i] != o.eps[i]) return eps[i] < o.eps[i];
    for (size_t i = 0; i < delta.size(); ++i)
        if (delta[i] != o.delta[i]) return delta[i] < o.delta[i];
    return false;
}

int Weight::parity() const {
    Int s(0);
    for (const auto& x : delta) {
        if (!rat_is_int(x)) throw forge_error("parity of non-integral weight");
        s += x.get_num();
    }
    return (int)mpz_odd_p(s.get_mpz_t());
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < eps.size(); ++i) os << (i ? "," : "") << rat_str(eps[i]);
    os << "|";
    for (size_t i = 0; i < delta.size(); ++i) os << (i ? "," : "") << rat_str(delta[i]);
    os << ")";
    return os.str();
}

Rat weight_form(const Weight& a, const Weight& b, int delta_sign) {
    if (a.eps.size() != b.eps.size() || a.delta.size() != b.delta.size())
        throw forge_error("weight basis mismatch in form");
    Rat s(0);
    for (size_t i = 0; i < a.eps.size(); ++i) s += a.eps[i] * b.eps[i];
    Rat d(0);
    for (size_t i = 0; i < a.delta.size(); ++i) d += a.delta[i] * b.delta[i];
    Rat res = s + Rat(delta_sign) * d;
    res.canonicalize();
    return res;
}

}  // namespace ybeforge
