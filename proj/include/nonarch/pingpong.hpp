#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/affine.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/generators.hpp"
#include "nonarch/norms.hpp"
#include "nonarch/report.hpp"

namespace nonarch {

// U-set identifier: the plus or minus set attached to a generator letter.
struct SetId {
    Letter s;
    bool plus;
};

// Everything the ping-pong audit evaluates: the auxiliary valuation used in
// the set definitions, the four generators, the conjugator h, and the
// magnitudes |alpha|, |lambda|, |tau1| under that valuation.
template <class Ctx>
struct PingPongConfig {
    using Elem = typename Ctx::Elem;

    Ctx aux_ctx;
    AffineMap<Elem> a, b, h;
    AffineMap<Elem> a_inv, b_inv, h_inv;
    Rat alpha_mag, lambda_mag, tau1_mag;

    const AffineMap<Elem>& map_of(Letter l) const {
        switch (l) {
            case Letter::A: return a;
            case Letter::Ainv: return a_inv;
            case Letter::B: return b;
            default: return b_inv;
        }
    }
};

template <class Ctx>
PingPongConfig<Ctx> make_pingpong(const GeneratorCertificate<Ctx>& cert) {
    if (cert.construction != Construction::EqualChar)
        throw WrongConstruction("ping-pong config needs the equal-char certificate");
    const Ctx& aux = *cert.aux_ctx;
    PingPongConfig<Ctx> cfg{aux, cert.a, cert.b, *cert.h};
    cfg.a_inv = inverse(aux, cfg.a);
    cfg.b_inv = inverse(aux, cfg.b);
    cfg.h_inv = inverse(aux, cfg.h);
    const auto& params = *cert.aux;
    cfg.alpha_mag = magnitude(aux, params[0]);
    cfg.lambda_mag = magnitude(aux, params[6]);
    cfg.tau1_mag = magnitude(aux, params[4]);
    return cfg;
}

// Exact membership in the U-sets. The b-sets are h-transports of the a-sets,
// so membership is evaluated at h^-1(point).
template <class Ctx>
bool member(const PingPongConfig<Ctx>& cfg, SetId set, const Vec<typename Ctx::Elem>& point) {
    if (point.size() != 2) throw DimensionMismatch("ping-pong points live in K^2");
    if (set.s == Letter::B || set.s == Letter::Binv) {
        SetId base{set.s == Letter::B ? Letter::A : Letter::Ainv, set.plus};
        return member(cfg, base, nonarch::apply(cfg.h_inv, point));
    }
    const Ctx& ctx = cfg.aux_ctx;
    Rat mx = magnitude(ctx, point[0]);
    Rat my = magnitude(ctx, point[1]);
    bool swap = set.s == Letter::Ainv;  // a^-1 sets swap the coordinate roles
    if (swap) std::swap(mx, my);
    if (set.plus) return mx > my && mx > 1;    // |x| > ||(y,1)||_inf
    return (mx < 1 && my < 1) || my > mx;      // ||(x,y)||_inf < 1 or |y| > |x|
}

inline std::string setid_str(SetId set) {
    return std::string("U_") + letter_char(set.s) + (set.plus ? "^+" : "^-");
}

namespace detail {
constexpr std::array<Letter, 4> kLetters{Letter::A, Letter::Ainv, Letter::B, Letter::Binv};
}

// All four ping-pong hypotheses plus the growth/transport/contraction
// identities, checked exactly at every sample point.
template <class Ctx>
AuditReport pingpong_audit(const PingPongConfig<Ctx>& cfg,
                           const std::vector<Vec<typename Ctx::Elem>>& points) {
    const Ctx& ctx = cfg.aux_ctx;
    const NormSpec max_norm = NormSpec::max();
    AuditReport rep;
    rep.name = "ping-pong";

    // one-time: ||b(0,0)|| = |alpha|^2 |lambda| and the h^-1 symmetry
    {
        Vec<typename Ctx::Elem> origin{ctx.zero(), ctx.zero()};
        Rat b0 = norm(ctx, max_norm, nonarch::apply(cfg.b, origin));
        if (b0 != cfg.alpha_mag * cfg.alpha_mag * cfg.lambda_mag)
            rep.flag("b-origin", "||b(0)|| = " + format_rat(b0));
        for (const auto& entry : cfg.h_inv.L.a)
            if (magnitude(ctx, entry) != cfg.alpha_mag)
                rep.flag("h-inverse-linear", "entry magnitude differs from |alpha|");
        for (const auto& coord : cfg.h_inv.tau)
            if (magnitude(ctx, coord) != cfg.tau1_mag)
                rep.flag("h-inverse-translation", "coordinate magnitude differs from |tau1|");
    }

    for (const auto& pt : points) {
        ++rep.checked;
        const Rat f_pt = norm(ctx, max_norm, pt);
        const auto hp = nonarch::apply(cfg.h_inv, pt);  // b-set membership via h-transport
        std::array<bool, 4> in_minus{}, in_plus{};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& probe = i < 2 ? pt : hp;
            SetId base{i % 2 == 0 ? Letter::A : Letter::Ainv, false};
            in_minus[i] = member(cfg, base, probe);
            base.plus = true;
            in_plus[i] = member(cfg, base, probe);
        }

        std::array<std::optional<Vec<typename Ctx::Elem>>, 4> images;
        for (std::size_t i = 0; i < 4; ++i) {
            Letter s = detail::kLetters[i];
            if (in_minus[i]) continue;
            images[i] = nonarch::apply(cfg.map_of(s), pt);
            const auto& img = *images[i];
            if (!member(cfg, SetId{s, true}, img))
                rep.flag("Pham1", std::string(1, letter_char(s)) + " image escapes " +
                                      setid_str({s, true}));
            if (!(norm(ctx, max_norm, img) > f_pt))
                rep.flag("Pham4", std::string("f(") + letter_char(s) + "x) <= f(x)");
        }

        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                if (detail::kLetters[j] == letter_inverse(detail::kLetters[i])) continue;
                if (in_plus[i] && in_minus[j])
                    rep.flag("Pham2", setid_str({detail::kLetters[i], true}) + " meets " +
                                          setid_str({detail::kLetters[j], false}));
            }

        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                for (std::size_t k = j + 1; k < 4; ++k)
                    if (in_minus[i] && in_minus[j] && in_minus[k])
                        rep.flag("Pham3", "triple intersection of minus sets");

        // growth identity for a and a^-1 outside the respective minus sets
        if (!in_minus[0] && norm(ctx, max_norm, *images[0]) != cfg.lambda_mag * f_pt)
            rep.flag("aux1", "||a x|| != |lambda| ||x||");
        if (!in_minus[1] && norm(ctx, max_norm, *images[1]) != cfg.lambda_mag * f_pt)
            rep.flag("aux1", "||a^-1 x|| != |lambda| ||x||");

        const Rat h_norm = norm(ctx, max_norm, nonarch::apply(cfg.h, pt));
        if ((in_plus[0] || in_plus[1]) && h_norm != cfg.alpha_mag * f_pt)
            rep.flag("aux2", "||h x|| != |alpha| ||x||");
        if ((!in_minus[0] || !in_minus[1]) && h_norm > cfg.alpha_mag * f_pt)
            rep.flag("aux3", "||h x|| > |alpha| ||x||");
    }
    return rep;
}

constexpr std::size_t kMaxGridPoints = 1000000;

// Deterministic sample set: a stride subsample of the full product of
// reduced fractions f/g (deg <= degree_bound, coefficients in
// [-coeff_range, coeff_range], g monic), padded with seeded random points.
template <class Base>
std::vector<Vec<RatFunc<Base>>> default_grid(const FuncCtx<Base>& ctx, long long degree_bound,
                                             long long coeff_range, std::size_t product_budget,
                                             std::size_t random_points, std::uint64_t seed) {
    using Elem = RatFunc<Base>;
    if (product_budget + random_points > kMaxGridPoints)
        throw BoundExceeded("grid larger than " + std::to_string(kMaxGridPoints) + " points");

    // all polynomials with deg <= degree_bound, coeffs in the range
    std::vector<Poly<Base>> polys;
    const long long span = 2 * coeff_range + 1;
    std::vector<long long> digits(static_cast<std::size_t>(degree_bound) + 1, 0);
    for (;;) {
        std::vector<Base> coeffs;
        for (long long d : digits) coeffs.push_back(ctx.coeff_from_int(d - coeff_range));
        polys.emplace_back(std::move(coeffs));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == span) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }

    // distinct reduced fractions with monic denominator
    auto frac_less = [](const Elem& x, const Elem& y) { return compare(x, y) < 0; };
    std::set<Elem, decltype(frac_less)> fracset(frac_less);
    for (const auto& num : polys)
        for (const auto& den : polys) {
            if (den.is_zero() || !(den.leading() == ctx.coeff_from_int(1))) continue;
            fracset.insert(Elem(num, den));
        }
    std::vector<Elem> fracs(fracset.begin(), fracset.end());

    std::vector<Vec<Elem>> out;
    const std::size_t total = fracs.size() * fracs.size();
    const std::size_t step = total <= product_budget ? 1 : total / product_budget;
    for (std::size_t k = 0; k < total; k += step)
        out.push_back({fracs[k / fracs.size()], fracs[k % fracs.size()]});

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, fracs.size() - 1);
    for (std::size_t i = 0; i < random_points; ++i)
        out.push_back({fracs[pick(rng)], fracs[pick(rng)]});

    auto point_less = [](const Vec<Elem>& x, const Vec<Elem>& y) {
        int c = compare(x[0], y[0]);
        if (c != 0) return c < 0;
        return compare(x[1], y[1]) < 0;
    };
    std::sort(out.begin(), out.end(), point_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace nonarch
