#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nonarch/errors.hpp"

namespace nonarch {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// rho^v for rational rho != 0 and any integer v.
inline Rat rat_pow(const Rat& base, long long v) {
    if (base == 0) {
        if (v <= 0) throw DivisionByZero();
        return Rat(0);
    }
    Rat b = base;
    unsigned long long e;
    if (v < 0) {
        b = Rat(rat_den(base), rat_num(base));
        e = static_cast<unsigned long long>(-(v + 1)) + 1;
    } else {
        e = static_cast<unsigned long long>(v);
    }
    Rat acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline std::string format_rat(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "n" or "n/d" with optional leading '-'.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational: " + s);
    }
}

// Exponent of p in the factorization of a nonzero integer.
inline long long int_ord_p(Int x, const Int& p) {
    if (x == 0) throw DivisionByZero();
    if (x < 0) x = -x;
    long long k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    return k;
}

inline int compare(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }

inline Rat coeff_inv(const Rat& c) {
    if (c == 0) throw DivisionByZero();
    return 1 / c;
}

}  // namespace nonarch
