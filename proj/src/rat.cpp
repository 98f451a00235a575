#include "ybeforge/rat.hpp"

namespace ybeforge {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw usage_error("empty rational literal");
    std::string t = s;
    if (t[0] == '+') t.erase(0, 1);
    for (char ch : t) {
        if (!(std::isdigit((unsigned char)ch) || ch == '-' || ch == '+' || ch == '/'))
            throw usage_error("bad rational literal: " + s);
    }
    Rat x;
    if (x.set_str(t, 10) != 0) throw usage_error("bad rational literal: " + s);
    if (x.get_den() == 0) throw usage_error("zero denominator: " + s);
    x.canonicalize();
    return x;
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw forge_error("0 raised to negative power");
        return Rat(0);
    }
    Int num, den;
    unsigned long ae = (unsigned long)(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), ae);
    Rat r;
    if (e > 0)
        r = Rat(num, den);
    else
        r = Rat(den, num);
    r.canonicalize();
    return r;
}

Rat rat_sqrt(const Rat& x) {
    if (x < 0) throw forge_error("square root of a negative rational");
    if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(x.get_den().get_mpz_t()))
        throw forge_error("rational " + rat_str(x) + " is not a perfect square");
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    return Rat(n, d);
}

long rat_to_long(const Rat& x) {
    if (!rat_is_int(x)) throw forge_error("expected integer, got " + rat_str(x));
    if (!x.get_num().fits_slong_p()) throw forge_error("integer too large: " + rat_str(x));
    return x.get_num().get_si();
}

}  // namespace ybeforge
