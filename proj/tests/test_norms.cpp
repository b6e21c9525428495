#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nonarch/norms.hpp"

using namespace nonarch;

namespace {

Vec<Rat> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long long> num(-200, 200);
    std::uniform_int_distribution<long long> den(1, 50);
    Vec<Rat> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Rat(num(rng), den(rng)));
    return v;
}

}  // namespace

TEST_CASE("norm examples") {
    PAdicCtx two(2);
    CHECK(norm(two, NormSpec::max(), {Rat(4), Rat(3)}) == Rat(1));
    CHECK(norm(two, NormSpec::max(), {Rat(0), Rat(0)}) == Rat(0));
    CHECK(norm(two, NormSpec::weighted({Rat(1), Rat(1, 2)}), {Rat(1), Rat(1)}) == Rat(1));
    CHECK_THROWS_AS(norm(two, NormSpec::weighted({Rat(1)}), {Rat(1), Rat(1)}),
                    DimensionMismatch);
    CHECK_THROWS_AS(NormSpec::weighted({Rat(0)}), PreconditionViolated);
}

TEST_CASE("equivalence constants") {
    auto [c1, c2] = equivalence_constants(NormSpec::weighted({Rat(1), Rat(1, 2)}));
    CHECK(c1 == Rat(1, 2));
    CHECK(c2 == Rat(1));
    CHECK(equivalence_constants(NormSpec::max()) == std::pair<Rat, Rat>(Rat(1), Rat(1)));
    auto [u1, u2] = equivalence_constants(NormSpec::weighted({Rat(3), Rat(3), Rat(3)}));
    CHECK(u1 == Rat(3));
    CHECK(u2 == Rat(3));
}

TEST_CASE("region classification") {
    PAdicCtx two(2);
    Vec<Rat> origin{Rat(0), Rat(0)};
    Vec<Rat> e1{Rat(1), Rat(0)};
    CHECK(region(two, NormSpec::max(), e1, Rat(1), e1) == Region::OpenBall);
    CHECK(region(two, NormSpec::max(), origin, Rat(1), e1) == Region::Sphere);
    CHECK(region(two, NormSpec::max(), origin, Rat(1, 2), e1) == Region::Outside);
}

TEST_CASE("norm axioms on random vectors") {
    std::mt19937_64 rng(23);
    PAdicCtx two(2);
    const auto specs = {NormSpec::max(), NormSpec::weighted({Rat(1), Rat(1, 2), Rat(3)})};
    for (const auto& spec : specs) {
        for (int i = 0; i < 1000; ++i) {
            auto x = random_vec(rng, 3), y = random_vec(rng, 3);
            Rat nx = norm(two, spec, x), ny = norm(two, spec, y);
            Vec<Rat> sum;
            for (int k = 0; k < 3; ++k) sum.push_back(x[k] + y[k]);
            Rat ns = norm(two, spec, sum);
            CHECK(ns <= std::max(nx, ny));
            if (nx != ny) CHECK(ns == std::max(nx, ny));  // isosceles
            // homogeneity
            Rat alpha(3, 4);
            Vec<Rat> ax;
            for (int k = 0; k < 3; ++k) ax.push_back(alpha * x[k]);
            CHECK(norm(two, spec, ax) == magnitude(two, alpha) * nx);
            // equivalence guarantee
            auto [c1, c2] = equivalence_constants(spec);
            Rat ninf = norm(two, NormSpec::max(), x);
            CHECK(c1 * ninf <= nx);
            CHECK(nx <= c2 * ninf);
        }
    }
}

TEST_CASE("weights of one compute the maximum norm") {
    std::mt19937_64 rng(29);
    PAdicCtx two(2);
    auto ones = NormSpec::weighted({Rat(1), Rat(1), Rat(1)});
    for (int i = 0; i < 500; ++i) {
        auto x = random_vec(rng, 3);
        CHECK(norm(two, ones, x) == norm(two, NormSpec::max(), x));
    }
}

TEST_CASE("ball recentering") {
    std::mt19937_64 rng(31);
    PAdicCtx two(2);
    auto spec = NormSpec::max();
    const Rat r(1, 2);
    for (int i = 0; i < 200; ++i) {
        auto x0 = random_vec(rng, 2);
        auto y = random_vec(rng, 2);
        if (region(two, spec, x0, r, y) == Region::Outside) continue;
        // y inside the closed ball: B[x0,r] and B[y,r] agree on test points
        for (int k = 0; k < 20; ++k) {
            auto z = random_vec(rng, 2);
            bool in_x0 = region(two, spec, x0, r, z) != Region::Outside;
            bool in_y = region(two, spec, y, r, z) != Region::Outside;
            CHECK(in_x0 == in_y);
        }
    }
}
