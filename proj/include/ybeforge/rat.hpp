#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ybeforge {

// All scalar arithmetic in this project is exact. Rationals are GMP-backed
// and kept canonical (reduced, positive denominator) by mpq_class itself.
using Rat = mpq_class;
using Int = mpz_class;

struct forge_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q (or a bracket denominator) degenerates for the requested exponents.
struct degenerate_error : forge_error {
    using forge_error::forge_error;
};

// Evaluation of a rational function at a zero of its denominator.
struct pole_error : forge_error {
    using forge_error::forge_error;
};

// Bad CLI/config input.
struct usage_error : forge_error {
    using forge_error::forge_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw forge_error("rational with zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

// Parses "p/q" or "p". This is the wire format used in every JSON artifact.
Rat rat_parse(const std::string& s);

// Inverse of rat_parse: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& x);

// x^e for integer e (negative allowed, x != 0 then).
Rat rat_pow(const Rat& x, long e);

inline bool rat_is_int(const Rat& x) { return x.get_den() == 1; }

// Exact square root of a perfect-square rational; throws otherwise.
Rat rat_sqrt(const Rat& x);

// Numerator as long; only for values known to be small integers.
long rat_to_long(const Rat& x);

}  // namespace ybeforge
