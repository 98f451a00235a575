#pragma once

#include <vector>

#include "ybeforge/rat.hpp"

namespace ybeforge {

// The deformation parameter. q = t^2 is represented through its exact
// rational square root t, because q^{h_i/2} on integer-weight spaces needs
// half-integer powers of q. Immutable after construction.
class DeformParam {
  public:
    // project default t = 6/5, q = 36/25
    DeformParam() : DeformParam(Rat(6, 5)) {}
    explicit DeformParam(const Rat& t);

    const Rat& t() const { return t_; }
    Rat q() const { return t_pow(2); }

    // t^k for any integer k.
    Rat t_pow(long k) const;
    // q^{k/2} = t^k; the natural exponent unit everywhere in this project.
    Rat q_pow_half(long k) const { return t_pow(k); }
    // q^k = t^{2k}.
    Rat q_pow(long k) const { return t_pow(2 * k); }

  private:
    Rat t_;
    // eagerly cached t^0..t^CACHE and t^-1..t^-CACHE
    static constexpr long kCache = 64;
    std::vector<Rat> pos_, neg_;
};

}  // namespace ybeforge
