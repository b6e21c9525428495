#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nonarch/field.hpp"

using namespace nonarch;

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    return Rat(num(rng), den(rng));
}

template <class Base>
RatFunc<Base> random_ratfunc(const FuncCtx<Base>& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    auto random_poly = [&](bool nonzero) {
        for (;;) {
            std::vector<Base> c;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) c.push_back(ctx.coeff_from_int(coeff(rng)));
            Poly<Base> p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RatFunc<Base>(random_poly(false), random_poly(true));
}

// independent oracle: repeated division by p
long long ord_by_division(long long x, long long p) {
    long long k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    return k;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(format_rat(Rat(5, 6)) == "5/6");
    CHECK(parse_rat("-7/3") == Rat(-7, 3));
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
}

TEST_CASE("function field arithmetic over Q") {
    FuncQCtx ctx(FFValuation::TAdic);
    auto t = ctx.var();
    auto one = ctx.one();
    auto prod = (one + t) * (one - t);
    CHECK(prod == one - t * t);
    auto inv = one / (one + t);
    CHECK((one + t) * inv == one);
    CHECK_THROWS_AS(one / ctx.zero(), DivisionByZero);
}

TEST_CASE("function field arithmetic over F5") {
    FuncFpCtx ctx(FFValuation::TAdic, 5);
    auto t = ctx.var();
    // 3 + 4 = 2 mod 5
    CHECK(ctx.from_int(3) + ctx.from_int(4) == ctx.from_int(2));
    auto x = (ctx.one() + t) * (ctx.one() + t);
    CHECK(x == ctx.one() + ctx.from_int(2) * t + t * t);
}

TEST_CASE("p-adic valuation examples") {
    PAdicCtx two(2);
    CHECK(two.valuation(Rat(12)) == Val::finite(2));
    CHECK(magnitude(two, Rat(12)) == Rat(1, 4));
    CHECK(two.valuation(Rat(0)) == Val::zero_val());
    CHECK(two.valuation(Rat(3, 8)) == Val::finite(-3));
}

TEST_CASE("2-adic valuation agrees with the division oracle on 1..1000") {
    PAdicCtx two(2);
    for (long long n = 1; n <= 1000; ++n) {
        Val v = two.valuation(Rat(n));
        REQUIRE(!v.is_zero());
        CHECK(v.v == ord_by_division(n, 2));
    }
}

TEST_CASE("t-adic and degree valuations") {
    FuncQCtx tadic(FFValuation::TAdic);
    auto t = tadic.var();
    CHECK(tadic.valuation(t * t * t) == Val::finite(3));
    CHECK(magnitude(tadic, t * t * t) == Rat(1, 8));

    FuncQCtx degree(FFValuation::Degree);
    auto x = (t * t + degree.one()) / t;  // (t^2+1)/t
    CHECK(degree.valuation(x) == Val::finite(-1));
    CHECK(magnitude(degree, x) == Rat(2));
    CHECK(degree.valuation(degree.zero()) == Val::zero_val());
}

TEST_CASE("magnitude of Val") {
    CHECK(magnitude(Val::finite(2), Rat(1, 2)) == Rat(1, 4));
    CHECK(magnitude(Val::zero_val(), Rat(1, 2)) == Rat(0));
    CHECK(magnitude(Val::finite(-1), Rat(1, 2)) == Rat(2));
}

TEST_CASE("ring position classification") {
    PAdicCtx two(2);
    CHECK(ring_position(two, Rat(3)) == RingPosition::IntegerUnit);
    CHECK(ring_position(two, Rat(2)) == RingPosition::IntegerMaximalIdeal);
    CHECK(ring_position(two, Rat(0)) == RingPosition::IntegerMaximalIdeal);

    FuncQCtx tadic(FFValuation::TAdic);
    CHECK(ring_position(tadic, tadic.one() / tadic.var()) == RingPosition::NotInteger);
}

TEST_CASE("residue characteristic") {
    CHECK(PAdicCtx(3).residue_characteristic() == 3);
    CHECK(FuncFpCtx(FFValuation::TAdic, 5).residue_characteristic() == 5);
    CHECK(FuncQCtx(FFValuation::TAdic).residue_characteristic() == 0);
}

TEST_CASE("valuation is multiplicative and strongly triangular") {
    std::mt19937_64 rng(7);
    PAdicCtx two(2);
    FuncQCtx tadic(FFValuation::TAdic);
    FuncQCtx degree(FFValuation::Degree);
    FuncFpCtx f5(FFValuation::TAdic, 5);

    auto check_pair = [](const auto& ctx, const auto& x, const auto& y) {
        auto vx = ctx.valuation(x), vy = ctx.valuation(y);
        auto vxy = ctx.valuation(x * y);
        if (vx.is_zero() || vy.is_zero()) {
            CHECK(vxy.is_zero());
        } else {
            CHECK(vxy == Val::finite(vx.v + vy.v));
        }
        auto vsum = ctx.valuation(x + y);
        if (!vx.is_zero() && !vy.is_zero()) {
            long long lo = std::min(vx.v, vy.v);
            CHECK((vsum.is_zero() || vsum.v >= lo));
            if (vx.v != vy.v) CHECK(vsum == Val::finite(lo));  // isosceles
        }
    };

    for (int i = 0; i < 1000; ++i) {
        check_pair(two, random_rat(rng), random_rat(rng));
        check_pair(tadic, random_ratfunc(tadic, rng), random_ratfunc(tadic, rng));
        check_pair(degree, random_ratfunc(degree, rng), random_ratfunc(degree, rng));
        check_pair(f5, random_ratfunc(f5, rng), random_ratfunc(f5, rng));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    FuncQCtx tadic(FFValuation::TAdic);
    FuncFpCtx f5(FFValuation::TAdic, 5);
    for (int i = 0; i < 200; ++i) {
        auto x = random_ratfunc(tadic, rng), y = random_ratfunc(tadic, rng),
             z = random_ratfunc(tadic, rng);
        CHECK((x + y) * z == x * z + y * z);
        auto u = random_ratfunc(f5, rng), v = random_ratfunc(f5, rng), w = random_ratfunc(f5, rng);
        CHECK((u + v) * w == u * w + v * w);
    }
}

TEST_CASE("element text form round trips") {
    FuncQCtx ctx(FFValuation::TAdic);
    auto t = ctx.var();
    auto e = (ctx.one() + t) / (ctx.one() - t * t);
    // canonical form: gcd removed, denominator monic
    CHECK(format_elem(ctx, e) == "(-1)/(t - 1)");
    CHECK(parse_elem(ctx, "(1+t)/(1-t^2)") == e);
    CHECK(parse_elem(ctx, format_elem(ctx, e)) == e);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        auto x = random_ratfunc(ctx, rng);
        CHECK(parse_elem(ctx, format_elem(ctx, x)) == x);
    }

    PAdicCtx two(2);
    CHECK(parse_elem(two, "5/6") == Rat(5, 6));
    CHECK(parse_elem(two, "-12") == Rat(-12));
    CHECK_THROWS_AS(parse_elem(two, "1+t"), ParseError);

    FuncFpCtx f5(FFValuation::TAdic, 5);
    for (int i = 0; i < 200; ++i) {
        auto x = random_ratfunc(f5, rng);
        CHECK(parse_elem(f5, format_elem(f5, x)) == x);
    }
}

TEST_CASE("canonical form is idempotent") {
    FuncQCtx ctx(FFValuation::TAdic);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        auto x = random_ratfunc(ctx, rng);
        auto renormalized = RatFunc<Rat>(x.num(), x.den());
        CHECK(renormalized == x);
        if (!x.is_zero()) CHECK(x.den().leading() == Rat(1));
    }
}
