#pragma once

#include <utility>

#include "nonarch/errors.hpp"
#include "nonarch/poly.hpp"

namespace nonarch {

// Element of the rational function field K0(t): a reduced fraction of
// polynomials with monic denominator. Equality is structural. The zero
// element is stored with empty numerator and denominator (read as 0/1);
// this avoids needing a coefficient "one" detached from any modulus.
template <class C>
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(Poly<C> num, Poly<C> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    explicit RatFunc(Poly<C> num) : num_(std::move(num)) {
        if (!num_.is_zero()) {
            C lc = num_.leading();
            den_ = Poly<C>::constant(lc * coeff_inv(lc));
        }
    }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return is_zero() || den_.degree() == 0; }

    // Operands are always reduced with monic denominators, so products and
    // sums can be re-reduced with gcds of the small cross factors instead of
    // one big gcd (gcd(n1 n2, d1 d2) = gcd(n1, d2) gcd(n2, d1), etc.).
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add_sub(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add_sub(a, b, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.degree() == 0 && b.den_.degree() == 0)
            return raw(a.num_ * b.num_, a.den_);  // both denominators are 1
        Poly<C> g1 = gcd(a.num_, b.den_);
        Poly<C> g2 = gcd(b.num_, a.den_);
        const Poly<C> n1 = g1.degree() > 0 ? divmod(a.num_, g1).first : a.num_;
        const Poly<C> n2 = g2.degree() > 0 ? divmod(b.num_, g2).first : b.num_;
        const Poly<C> d1 = g2.degree() > 0 ? divmod(a.den_, g2).first : a.den_;
        const Poly<C> d2 = g1.degree() > 0 ? divmod(b.den_, g1).first : b.den_;
        return raw(n1 * n2, d1 * d2);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (a.is_zero()) return RatFunc();
        return a * b.inverse();
    }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero();
        C li = coeff_inv(num_.leading());
        return raw(den_.scaled(li), num_.scaled(li));
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend int compare(const RatFunc& a, const RatFunc& b) {
        int c = compare(a.num_, b.num_);
        if (c != 0) return c;
        return compare(a.den_, b.den_);
    }

  private:
    // both pieces already reduced and the denominator monic
    static RatFunc raw(Poly<C> num, Poly<C> den) {
        RatFunc r;
        if (num.is_zero()) return r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    static RatFunc add_sub(const RatFunc& a, const RatFunc& b, bool sub) {
        if (a.is_zero()) return sub ? -b : b;
        if (b.is_zero()) return a;
        if (a.den_.degree() == 0 && b.den_.degree() == 0)
            return raw(sub ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
        const Poly<C> g = a.den_ == b.den_ ? a.den_ : gcd(a.den_, b.den_);
        if (g.degree() == 0) {  // coprime denominators: the sum is already reduced
            Poly<C> num =
                sub ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
            return raw(std::move(num), a.den_ * b.den_);
        }
        const Poly<C> d1r = divmod(a.den_, g).first;
        const Poly<C> d2r = divmod(b.den_, g).first;
        Poly<C> num = sub ? a.num_ * d2r - b.num_ * d1r : a.num_ * d2r + b.num_ * d1r;
        if (num.is_zero()) return RatFunc();
        // any common factor of num and the lcm denominator divides g
        const Poly<C> t = gcd(num, g);
        if (t.degree() > 0)
            return raw(divmod(num, t).first, divmod(a.den_, t).first * d2r);
        return raw(std::move(num), a.den_ * d2r);
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<C>();
            return;
        }
        if (den_.is_zero()) throw DivisionByZero();
        Poly<C> g = gcd(num_, den_);
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
        C lead_inv = coeff_inv(den_.leading());
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }

    Poly<C> num_;
    Poly<C> den_;
};

}  // namespace nonarch
