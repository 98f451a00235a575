#include "ybeforge/deform.hpp"

namespace ybeforge {

DeformParam::DeformParam(const Rat& t) : t_(t) {
    if (t_ == 0 || t_ == 1 || t_ == -1)
        throw degenerate_error("deformation parameter t must not be 0 or +-1, got t=" + rat_str(t_));
    pos_.reserve(kCache + 1);
    neg_.reserve(kCache + 1);
    pos_.push_back(Rat(1));
    neg_.push_back(Rat(1));
    Rat tinv = Rat(1) / t_;
    for (long k = 1; k <= kCache; ++k) {
        Rat p = pos_.back() * t_;
        p.canonicalize();
        pos_.push_back(p);
        Rat m = neg_.back() * tinv;
        m.canonicalize();
        neg_.push_back(m);
    }
}

Rat DeformParam::t_pow(long k) const {
    if (k >= 0 && k <= kCache) return pos_[k];
    if (k < 0 && -k <= kCache) return neg_[-k];
    return rat_pow(t_, k);
}

}  // namespace ybeforge
