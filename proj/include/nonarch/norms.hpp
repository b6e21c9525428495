#pragma once

#include <utility>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/field.hpp"

namespace nonarch {

template <class Elem>
using Vec = std::vector<Elem>;

// Max is the maximum norm; Weighted is max_i w_i |x_i| with positive
// rational weights. Weights of all ones coincide with Max.
struct NormSpec {
    enum class Kind { Max, Weighted };
    Kind kind = Kind::Max;
    std::vector<Rat> weights;

    static NormSpec max() { return NormSpec{}; }
    static NormSpec weighted(std::vector<Rat> w) {
        for (const auto& wi : w)
            if (wi <= 0) throw PreconditionViolated("weights must be positive");
        return NormSpec{Kind::Weighted, std::move(w)};
    }
};

template <class Ctx>
Vec<typename Ctx::Elem> vec_sub(const Vec<typename Ctx::Elem>& a,
                                const Vec<typename Ctx::Elem>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec<typename Ctx::Elem> r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

template <class Ctx>
Rat norm(const Ctx& ctx, const NormSpec& spec, const Vec<typename Ctx::Elem>& x) {
    if (spec.kind == NormSpec::Kind::Weighted && spec.weights.size() != x.size())
        throw DimensionMismatch("weight vector vs point");
    Rat best(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rat m = magnitude(ctx, x[i]);
        if (spec.kind == NormSpec::Kind::Weighted) m *= spec.weights[i];
        if (m > best) best = m;
    }
    return best;
}

template <class Ctx>
Rat distance(const Ctx& ctx, const NormSpec& spec, const Vec<typename Ctx::Elem>& a,
             const Vec<typename Ctx::Elem>& b) {
    return norm(ctx, spec, vec_sub<Ctx>(a, b));
}

// C1 ||x||_inf <= ||x|| <= C2 ||x||_inf
inline std::pair<Rat, Rat> equivalence_constants(const NormSpec& spec) {
    if (spec.kind == NormSpec::Kind::Max) return {Rat(1), Rat(1)};
    Rat lo = spec.weights.at(0), hi = spec.weights.at(0);
    for (const auto& w : spec.weights) {
        if (w < lo) lo = w;
        if (w > hi) hi = w;
    }
    return {lo, hi};
}

enum class Region { OpenBall, Sphere, Outside };

template <class Ctx>
Region region(const Ctx& ctx, const NormSpec& spec, const Vec<typename Ctx::Elem>& x0,
              const Rat& r, const Vec<typename Ctx::Elem>& x) {
    if (r <= 0) throw PreconditionViolated("radius must be positive");
    Rat d = distance(ctx, spec, x, x0);
    if (d < r) return Region::OpenBall;
    if (d == r) return Region::Sphere;
    return Region::Outside;
}

}  // namespace nonarch
