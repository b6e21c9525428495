#pragma once

#include <utility>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/fp.hpp"
#include "nonarch/rational.hpp"

namespace nonarch {

// Dense univariate polynomial over a coefficient field C. The zero polynomial
// is the empty coefficient vector; otherwise the leading coefficient is
// nonzero. Coefficients are stored lowest degree first.
template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(C c) {
        Poly p;
        p.c_.push_back(std::move(c));
        p.trim();
        return p;
    }

    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    // index of the lowest nonzero coefficient; -1 for zero
    long long ord() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero_coeff(c_[i])) return static_cast<long long>(i);
        return -1;
    }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_coeff(); }
    C leading() const {
        if (is_zero()) throw DivisionByZero();
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), a.any_zero(b));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), a.any_zero(b));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<C> r = c_;
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, a.c_[0] - a.c_[0]);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly scaled(const C& k) const {
        std::vector<C> r = c_;
        for (auto& x : r) x = x * k;
        return Poly(std::move(r));
    }
    // multiply by t^k
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<C> r(c_.size() + k, c_[0] - c_[0]);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    // quotient and remainder; divisor must be nonzero
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero();
        Poly rem = a;
        Poly quo;
        const C lead_inv = coeff_inv(b.leading());
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
            const C q = rem.leading() * lead_inv;
            quo = quo + Poly::constant(q).shifted(shift);
            rem = rem - b.scaled(q).shifted(shift);
        }
        return {quo, rem};
    }

    // monic gcd via Euclid; gcd(0,0) = 0
    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a.scaled(coeff_inv(a.leading()));
        return a;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    static bool is_zero_coeff(const C& c);
    static C zero_coeff();
    C any_zero(const Poly& other) const {
        if (!c_.empty()) return c_[0] - c_[0];
        if (!other.c_.empty()) return other.c_[0] - other.c_[0];
        return zero_coeff();
    }
    void trim() {
        while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

// coefficient-type glue
template <class C>
bool Poly<C>::is_zero_coeff(const C& c) {
    return c == zero_coeff();
}
template <class C>
C Poly<C>::zero_coeff() {
    return C();
}

// three-way comparison: by degree, then coefficients from the top
template <class C>
int compare(const Poly<C>& a, const Poly<C>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long long i = a.degree(); i >= 0; --i) {
        int c = compare(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace nonarch
