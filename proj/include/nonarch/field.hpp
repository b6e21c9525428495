#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/fp.hpp"
#include "nonarch/poly.hpp"
#include "nonarch/ratfunc.hpp"
#include "nonarch/rational.hpp"
#include "nonarch/valuation.hpp"

namespace nonarch {

enum class RingPosition { IntegerUnit, IntegerMaximalIdeal, NotInteger };

// ---------------------------------------------------------------------------
// (Q, |.|_p): exact rationals with the p-adic valuation.
// ---------------------------------------------------------------------------
struct PAdicCtx {
    using Elem = Rat;

    Int p;
    Rat rho_;

    explicit PAdicCtx(Int prime) : p(std::move(prime)), rho_(Rat(1, p)) {}
    PAdicCtx(Int prime, Rat rho) : p(std::move(prime)), rho_(std::move(rho)) {}

    const Rat& rho() const { return rho_; }

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long long v) const { return Rat(v); }
    Elem var() const { throw ParseError("'t' is not an element of this field"); }
    Elem from_digits(const std::string& s) const { return Rat(Int(s)); }
    Elem uniformizer() const { return Rat(p); }

    Val valuation(const Elem& x) const {
        if (x == 0) return Val::zero_val();
        return Val::finite(int_ord_p(rat_num(x), p) - int_ord_p(rat_den(x), p));
    }

    Int residue_characteristic() const { return p; }
    Int characteristic() const { return 0; }

    std::string name() const { return "Q(" + p.str() + "-adic)"; }
};

// ---------------------------------------------------------------------------
// Function fields K0(t), K0 = Q or F_p, with either the t-adic valuation
// (|t| = rho) or the degree valuation (|f/g| = (1/rho)^(deg f - deg g)).
// ---------------------------------------------------------------------------
enum class FFValuation { TAdic, Degree };

template <class Base>
struct FuncCtx {
    using Coeff = Base;
    using Elem = RatFunc<Base>;
    static constexpr bool prime_coeffs = std::is_same_v<Base, Fp>;

    FFValuation valn;
    std::int64_t p;  // coefficient characteristic; 0 for Q
    Rat rho_;

    FuncCtx(FFValuation valuation_kind, std::int64_t char_p = 0, Rat rho = Rat(1, 2))
        : valn(valuation_kind), p(char_p), rho_(std::move(rho)) {
        if constexpr (prime_coeffs) {
            if (p < 2) throw PreconditionViolated("F_p coefficients need a prime modulus");
        }
    }

    const Rat& rho() const { return rho_; }

    Coeff coeff_from_int(long long v) const {
        if constexpr (prime_coeffs) {
            return Fp(v, p);
        } else {
            return Rat(v);
        }
    }
    Elem zero() const { return Elem(); }
    Elem one() const { return from_int(1); }
    Elem from_int(long long v) const { return Elem(Poly<Base>::constant(coeff_from_int(v))); }
    Elem var() const {
        std::vector<Base> c{coeff_from_int(0), coeff_from_int(1)};
        return Elem(Poly<Base>(std::move(c)));
    }
    Elem uniformizer() const {
        return valn == FFValuation::TAdic ? var() : one() / var();
    }
    Elem from_digits(const std::string& s) const {
        Int big(s);
        if constexpr (prime_coeffs) {
            Int r = big % p;
            return from_int(static_cast<long long>(r));
        } else {
            return Elem(Poly<Base>::constant(Rat(big)));
        }
    }

    Val valuation(const Elem& x) const {
        if (x.is_zero()) return Val::zero_val();
        if (valn == FFValuation::TAdic) return Val::finite(x.num().ord() - x.den().ord());
        return Val::finite(x.den().degree() - x.num().degree());
    }

    Int residue_characteristic() const {
        // t-adic: residue field is the coefficient field; degree: likewise
        // (the residue of f/g at infinity is a ratio of leading coefficients).
        return Int(p);
    }
    Int characteristic() const { return Int(p); }

    std::string name() const {
        std::string base = prime_coeffs ? ("F" + std::to_string(p)) : "Q";
        return base + "(t)" + (valn == FFValuation::TAdic ? "(t-adic)" : "(degree)");
    }
};

using FuncQCtx = FuncCtx<Rat>;
using FuncFpCtx = FuncCtx<Fp>;

// ---------------------------------------------------------------------------
// magnitude and ring-position classification
// ---------------------------------------------------------------------------
inline bool elem_is_zero(const Rat& x) { return x == 0; }
template <class Base>
bool elem_is_zero(const RatFunc<Base>& x) {
    return x.is_zero();
}


template <class Ctx>
Rat magnitude(const Ctx& ctx, const typename Ctx::Elem& x) {
    return magnitude(ctx.valuation(x), ctx.rho());
}

template <class Ctx>
RingPosition ring_position(const Ctx& ctx, const typename Ctx::Elem& x) {
    Val v = ctx.valuation(x);
    if (v.is_zero() || v.v > 0) return RingPosition::IntegerMaximalIdeal;
    if (v.v == 0) return RingPosition::IntegerUnit;
    return RingPosition::NotInteger;
}

// ---------------------------------------------------------------------------
// element text form: "p/q" for rationals, polynomial fractions in t such as
// "(1+t)/(1-t^2)" for function fields. The printer below emits a subset of
// what the parser accepts; round-tripping canonical forms is the identity.
// ---------------------------------------------------------------------------
namespace detail {

template <class Ctx>
class ElemParser {
  public:
    ElemParser(const Ctx& ctx, const std::string& text) : ctx_(ctx), s_(text) {}

    typename Ctx::Elem parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input in \"" + s_ + "\"");
        return e;
    }

  private:
    using Elem = typename Ctx::Elem;

    Elem expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        Elem acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Elem term() {
        Elem acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                Elem d = factor();
                if (elem_is_zero(d)) throw DivisionByZero();
                acc = acc / d;
            } else if (c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Elem factor() {
        Elem base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string digits = read_digits();
            unsigned long long k = std::stoull(digits);
            Elem acc = ctx_.one();
            for (unsigned long long i = 0; i < k; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Elem primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Elem e = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')' in \"" + s_ + "\"");
            ++pos_;
            return e;
        }
        if (c == 't') {
            ++pos_;
            return ctx_.var();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ctx_.from_digits(read_digits());
        if (c == '-') {
            ++pos_;
            return -primary();
        }
        throw ParseError("unexpected character in \"" + s_ + "\"");
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits in \"" + s_ + "\"");
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    const Ctx& ctx_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

inline std::string format_coeff(const Rat& c) { return format_rat(c); }
inline std::string format_coeff(const Fp& c) { return c.str(); }

template <class C>
std::string format_poly(const Poly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long long i = p.degree(); i >= 0; --i) {
        C c = p.coeff(static_cast<std::size_t>(i));
        std::string cs = format_coeff(c);
        if (cs == "0") continue;
        bool neg = !cs.empty() && cs[0] == '-';
        std::string abs = neg ? cs.substr(1) : cs;
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += abs;
        } else {
            std::string tpow = (i == 1) ? "t" : "t^" + std::to_string(i);
            out += (abs == "1") ? tpow : abs + "*" + tpow;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

template <class Ctx>
typename Ctx::Elem parse_elem(const Ctx& ctx, const std::string& text) {
    return detail::ElemParser<Ctx>(ctx, text).parse();
}

inline std::string format_elem(const PAdicCtx&, const Rat& x) { return format_rat(x); }

template <class Base>
std::string format_elem(const FuncCtx<Base>&, const RatFunc<Base>& x) {
    if (x.is_polynomial()) return detail::format_poly(x.num());
    return "(" + detail::format_poly(x.num()) + ")/(" + detail::format_poly(x.den()) + ")";
}

}  // namespace nonarch
