#pragma once

#include "nonarch/rational.hpp"

namespace nonarch {

// Value of a discrete valuation in exponent form: |x| = rho^v with
// 0 < rho < 1, so larger exponents mean smaller magnitudes. Zero is the
// valuation of the field's zero element.
struct Val {
    bool zero = true;
    long long v = 0;

    static Val zero_val() { return Val{}; }
    static Val finite(long long v) { return Val{false, v}; }

    bool is_zero() const { return zero; }

    friend bool operator==(const Val& a, const Val& b) {
        if (a.zero || b.zero) return a.zero == b.zero;
        return a.v == b.v;
    }
    friend bool operator!=(const Val& a, const Val& b) { return !(a == b); }
};

// |x| < |y| under the exponent convention; Zero is the smallest magnitude.
inline bool smaller_magnitude(const Val& a, const Val& b) {
    if (a.zero) return !b.zero;
    if (b.zero) return false;
    return a.v > b.v;
}

// rho^v as an exact rational; Zero maps to 0.
inline Rat magnitude(const Val& val, const Rat& rho) {
    if (val.zero) return Rat(0);
    return rat_pow(rho, val.v);
}

}  // namespace nonarch
