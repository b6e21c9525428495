#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonarch/pingpong.hpp"

using namespace nonarch;

namespace {

PingPongConfig<FuncQCtx> config_q() {
    FuncQCtx ctx(FFValuation::TAdic);
    return make_pingpong(build_equal_char(ctx, Rat(1)));
}

}  // namespace

TEST_CASE("membership examples") {
    auto cfg = config_q();
    const auto& ctx = cfg.aux_ctx;
    auto t = ctx.var();
    auto one = ctx.one();
    Vec<RatFunc<Rat>> origin{ctx.zero(), ctx.zero()};

    // the origin is the open unit ball piece shared by both minus-sets
    CHECK(member(cfg, {Letter::A, false}, origin));
    CHECK(member(cfg, {Letter::Ainv, false}, origin));
    CHECK_FALSE(member(cfg, {Letter::A, true}, origin));

    Vec<RatFunc<Rat>> p{t, one};  // |t| = 2 under the degree valuation
    CHECK(member(cfg, {Letter::A, true}, p));
    CHECK_FALSE(member(cfg, {Letter::A, false}, p));
    CHECK(member(cfg, {Letter::Ainv, false}, {t, one}));  // swapped roles: |x| > |y|
    CHECK(member(cfg, {Letter::Ainv, true}, {one, t}));

    Vec<RatFunc<Rat>> q{one, one};
    CHECK_FALSE(member(cfg, {Letter::A, false}, q));
    CHECK_FALSE(member(cfg, {Letter::A, true}, q));
    CHECK_FALSE(member(cfg, {Letter::Ainv, false}, q));
    CHECK_FALSE(member(cfg, {Letter::Ainv, true}, q));

    CHECK_THROWS_AS(member(cfg, {Letter::A, false}, {t}), DimensionMismatch);
}

TEST_CASE("growth at a sample point") {
    auto cfg = config_q();
    const auto& ctx = cfg.aux_ctx;
    auto t = ctx.var();
    auto one = ctx.one();
    Vec<RatFunc<Rat>> p{t, one};
    auto image = nonarch::apply(cfg.a, p);
    CHECK(image[0] == (one + t) * t);
    CHECK(image[1] == one / (one + t));
    CHECK(member(cfg, {Letter::A, true}, image));
    auto f = NormSpec::max();
    CHECK(norm(ctx, f, p) == Rat(2));
    CHECK(norm(ctx, f, image) == Rat(4));  // f jumps by |lambda| = 2

    // h moves the origin to (-t, t), both coordinates of magnitude 2
    auto h0 = nonarch::apply(cfg.h, Vec<RatFunc<Rat>>{ctx.zero(), ctx.zero()});
    CHECK(magnitude(ctx, h0[0]) == Rat(2));
    CHECK(magnitude(ctx, h0[1]) == Rat(2));
    CHECK_FALSE(member(cfg, {Letter::A, false}, h0));
    CHECK_FALSE(member(cfg, {Letter::Ainv, false}, h0));
    // so the origin, which h carries there, is outside both b minus-sets' preimages
    CHECK(member(cfg, {Letter::B, false}, nonarch::apply(cfg.h, h0)) ==
          member(cfg, {Letter::A, false}, h0));
}

TEST_CASE("default grid") {
    FuncQCtx ctx(FFValuation::TAdic);
    auto tiny = default_grid(ctx, 0, 1, 1000000, 0, 1);
    CHECK(tiny.size() == 9);  // 3 constants per coordinate

    auto g1 = default_grid(ctx, 1, 1, 2000, 50, 7);
    auto g2 = default_grid(ctx, 1, 1, 2000, 50, 7);
    CHECK(g1 == g2);
    auto t = ctx.var();
    auto one = ctx.one();
    bool found = false;
    for (auto& p : g1) found = found || (p[0] == t && p[1] == one - t);
    CHECK(found);
    CHECK_THROWS_AS(default_grid(ctx, 3, 9, 2000000000ull, 0, 1), BoundExceeded);
}

TEST_CASE("audit passes on the default grid over the rationals") {
    auto cfg = config_q();
    auto grid = default_grid(cfg.aux_ctx, 1, 1, 3000, 500, 42);
    auto rep = pingpong_audit(cfg, grid);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
}

TEST_CASE("audit passes over a prime coefficient field") {
    FuncFpCtx ctx(FFValuation::TAdic, 5);
    auto cfg = make_pingpong(build_equal_char(ctx, Rat(1)));
    auto grid = default_grid(cfg.aux_ctx, 1, 2, 2000, 300, 42);
    CHECK(pingpong_audit(cfg, grid).ok());
}

TEST_CASE("mutated certificate is caught") {
    FuncQCtx ctx(FFValuation::TAdic);
    auto cert = build_equal_char(ctx, Rat(1));
    auto t = ctx.var();
    // push the conjugator's translation out of balance: tau1 = -t^2
    cert.h->tau[0] = -(t * t);
    (*cert.aux)[4] = -(t * t);
    cert.b = compose(compose(*cert.h, cert.a), inverse(ctx, *cert.h));
    auto cfg = make_pingpong(cert);
    auto grid = default_grid(ctx, 1, 1, 500, 100, 42);
    CHECK_FALSE(pingpong_audit(cfg, grid).ok());
}
