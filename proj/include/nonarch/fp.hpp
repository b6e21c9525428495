#pragma once

#include <cstdint>
#include <string>

#include "nonarch/errors.hpp"

namespace nonarch {

// Element of the prime field F_p with runtime modulus. A value constructed
// without a modulus (p == 0) is the universal zero; it adopts the modulus of
// whatever it is combined with.
class Fp {
  public:
    Fp() = default;
    Fp(std::int64_t v, std::int64_t p) : p_(p) {
        if (p > 0) {
            v %= p;
            if (v < 0) v += p;
            v_ = v;
        } else {
            v_ = 0;
            p_ = 0;
        }
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        auto p = unify(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ + b.v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        auto p = unify(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto p = unify(a, b);
        if (p == 0) return Fp();
        return Fp(a.v_ * b.v_, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(-v_, p_); }

    Fp inverse() const {
        if (is_zero()) throw DivisionByZero();
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::swap(t -= q * new_t, new_t);
            std::swap(r -= q * new_r, new_r);
        }
        return Fp(t, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        return unify(a, b) != 0 && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

  private:
    static std::int64_t unify(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw PreconditionViolated("mixed F_p moduli");
        return a.p_;
    }

    std::int64_t v_ = 0;
    std::int64_t p_ = 0;
};

inline Fp coeff_inv(const Fp& c) { return c.inverse(); }

inline int compare(const Fp& a, const Fp& b) {
    return a.value() < b.value() ? -1 : (b.value() < a.value() ? 1 : 0);
}

}  // namespace nonarch
