#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nonarch/affine.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/generators.hpp"
#include "nonarch/norms.hpp"
#include "nonarch/report.hpp"
#include "nonarch/words.hpp"

namespace nonarch {

// eps = 1/2 min{eps0, r/C, r/(C ||x0||_inf)}, with the last term dropped at
// the origin; C is the upper equivalence constant of the norm. Any map in
// SA(n, D_K, eps) then moves x0 by less than r.
template <class Ctx>
Rat invariance_epsilon(const Ctx& ctx, const Vec<typename Ctx::Elem>& x0, const Rat& r,
                       const NormSpec& spec, const Rat& eps0) {
    if (r <= 0) throw PreconditionViolated("radius must be positive");
    if (eps0 <= 0 || eps0 > 1) throw PreconditionViolated("eps0 must be in (0,1]");
    const Rat c = equivalence_constants(spec).second;
    Rat best = eps0;
    if (r / c < best) best = r / c;
    const Rat x0_inf = norm(ctx, NormSpec::max(), x0);
    if (x0_inf != 0 && r / (c * x0_inf) < best) best = r / (c * x0_inf);
    Rat eps = best / 2;
    return eps > 1 ? Rat(1) : eps;
}

enum class InvariantSet { ClosedBall, OpenBall, Sphere };

namespace detail {

// deterministic probes around x0: x0 itself, g(x0), and x0 shifted by
// uniformizer powers in each coordinate
template <class Ctx>
std::vector<Vec<typename Ctx::Elem>> invariance_probes(const Ctx& ctx,
                                                       const Vec<typename Ctx::Elem>& x0,
                                                       const Vec<typename Ctx::Elem>& gx0) {
    std::vector<Vec<typename Ctx::Elem>> probes{x0, gx0};
    const auto u = ctx.uniformizer();
    for (std::size_t i = 0; i < x0.size(); ++i)
        for (int j = -2; j <= 2; ++j) {
            auto y = x0;
            auto shift = ctx.one();
            for (int k = 0; k < (j < 0 ? -j : j); ++k) shift = shift * u;
            if (j < 0) shift = ctx.one() / shift;
            y[i] = y[i] + shift;
            probes.push_back(std::move(y));
        }
    return probes;
}

}  // namespace detail

// ||g(x0) - x0|| < r exactly, plus agreement of the requested set around x0
// and around g(x0) on the probe points.
template <class Ctx>
bool set_invariance_check(const Ctx& ctx, const NormSpec& spec,
                          const AffineMap<typename Ctx::Elem>& g,
                          const Vec<typename Ctx::Elem>& x0, const Rat& r, InvariantSet kind,
                          const Rat& eps0) {
    const Rat eps = invariance_epsilon(ctx, x0, r, spec, eps0);
    if (!sa_membership(ctx, g, eps))
        throw PreconditionViolated("map is outside SA(n, D_K, eps) at eps = " + format_rat(eps));
    const auto gx0 = nonarch::apply(g, x0);
    if (!(distance(ctx, spec, gx0, x0) < r)) return false;

    auto contains = [&](const Vec<typename Ctx::Elem>& center,
                        const Vec<typename Ctx::Elem>& y) {
        Region reg = region(ctx, spec, center, r, y);
        switch (kind) {
            case InvariantSet::ClosedBall: return reg != Region::Outside;
            case InvariantSet::OpenBall: return reg == Region::OpenBall;
            default: return reg == Region::Sphere;
        }
    };
    for (const auto& y : detail::invariance_probes(ctx, x0, gx0))
        if (contains(x0, y) != contains(gx0, y)) return false;
    return true;
}

// Truncated-orbit piece assignment: every word of length <= max_len mapped
// to its image of the base point, labeled by classify.
template <class Elem>
struct OrbitDecomposition {
    Vec<Elem> base;
    std::size_t max_len = 0;
    bool injectivity_ok = false;
    struct Row {
        Word word;
        Vec<Elem> point;
        PieceLabel label;
    };
    std::vector<Row> assignment;
    AuditReport report;
};

template <class Ctx>
OrbitDecomposition<typename Ctx::Elem> build_orbit_decomposition(
    const Ctx& ctx, const AffineMap<typename Ctx::Elem>& a,
    const AffineMap<typename Ctx::Elem>& b, const Vec<typename Ctx::Elem>& base,
    std::size_t max_len) {
    using Elem = typename Ctx::Elem;
    OrbitDecomposition<Elem> orb;
    orb.base = base;
    orb.max_len = max_len;
    orb.report.name = "orbit-decomposition";

    const auto words = enumerate_words(max_len);
    const auto gens = generator_table(ctx, a, b);

    // evaluate along shortlex order: each word extends an earlier prefix
    std::unordered_map<std::string, std::size_t> index;
    std::vector<AffineMap<Elem>> maps;
    maps.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        if (w.empty()) {
            maps.push_back(identity_map(ctx, a.dim()));
        } else {
            Word prefix(w.begin(), w.end() - 1);
            const auto& parent = maps[index.at(word_str(prefix))];
            maps.push_back(compose(parent, gens[static_cast<std::size_t>(w.back())]));
        }
        index.emplace(word_str(w), i);
    }

    // stabilizer pre-check: shortlex-first fixing word is reported
    for (std::size_t i = 1; i < words.size(); ++i)
        if (nonarch::apply(maps[i], base) == base) throw StabilizedBasePoint(word_str(words[i]));

    for (std::size_t i = 0; i < words.size(); ++i)
        orb.assignment.push_back({words[i], nonarch::apply(maps[i], base), classify(words[i])});

    auto vec_less = [](const Vec<Elem>& x, const Vec<Elem>& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = compare(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::map<Vec<Elem>, std::size_t, decltype(vec_less)> by_point(vec_less);
    orb.injectivity_ok = true;
    for (std::size_t i = 0; i < orb.assignment.size(); ++i)
        if (!by_point.emplace(orb.assignment[i].point, i).second) {
            orb.injectivity_ok = false;
            orb.report.flag("injectivity", "orbit points of " + word_str(orb.assignment[i].word) +
                                               " and another word coincide");
        }

    // interior piece identities, checked on the actual orbit points
    if (orb.injectivity_ok && max_len >= 1) {
        const Word a_inv{Letter::Ainv};
        const Word b_inv{Letter::Binv};
        for (const auto& row : orb.assignment) {
            if (row.word.size() > max_len - 1) continue;
            ++orb.report.checked;
            auto covered = [&](const Word& left_inv, PieceLabel piece,
                              const AffineMap<Elem>& mover, PieceLabel direct) {
                int cover = row.label == direct ? 1 : 0;
                Word u = word_concat(left_inv, row.word);
                auto it = index.find(word_str(u));
                if (it != index.end() && classify(u) == piece) {
                    const auto& pu = orb.assignment[it->second].point;
                    if (nonarch::apply(mover, pu) == row.point) ++cover;
                }
                return cover;
            };
            if (covered(a_inv, PieceLabel::P2, generator_table(ctx, a, b)[0], PieceLabel::P1) != 1)
                orb.report.flag("A1 u a(A2)", word_str(row.word));
            if (covered(b_inv, PieceLabel::P4, generator_table(ctx, a, b)[2], PieceLabel::P3) != 1)
                orb.report.flag("A3 u b(A4)", word_str(row.word));
        }
    }
    return orb;
}

// ---------------------------------------------------------------------------
// verdict engine
// ---------------------------------------------------------------------------

// Filtration data of a norm over a trivially valued field: the nonzero norm
// values a_1 < ... < a_s and the dimensions d_i of the balls B[0, a_i].
struct TrivialNormDesc {
    std::vector<Rat> values;
    std::vector<std::size_t> dims;
};

struct FieldDescriptor {
    enum class Kind { PAdicRationals, FunctionFieldTAdic, TriviallyValued };
    Kind kind;
    long long p = 0;               // prime for p-adic; coefficient characteristic otherwise
    long long characteristic = 0;  // field characteristic (trivially valued case)
    bool locally_finite = false;
};

enum class AmenableReason { SolvableTriangular, SolvableGA1, LocallyFinite };

struct Verdict {
    bool paradoxical = false;
    AmenableReason reason = AmenableReason::SolvableGA1;
    Construction construction = Construction::MagnusDifferentChar;
    std::size_t embedding_index = 1;
    std::string detail;
};

inline void validate_trivial_desc(const TrivialNormDesc& desc, std::size_t n) {
    const std::size_t s = desc.values.size();
    if (s == 0 || s != desc.dims.size()) throw UnsupportedDescriptor("empty or ragged filtration");
    if (s > n) throw UnsupportedDescriptor("more nonzero norm values than dimensions");
    for (std::size_t i = 0; i < s; ++i) {
        if (desc.values[i] <= 0) throw UnsupportedDescriptor("norm values must be positive");
        if (i > 0 && !(desc.values[i - 1] < desc.values[i]))
            throw UnsupportedDescriptor("norm values must increase");
        if (i > 0 && !(desc.dims[i - 1] < desc.dims[i]))
            throw UnsupportedDescriptor("dimensions must increase");
        if (desc.dims[i] < i + 1) throw UnsupportedDescriptor("dimension below filtration index");
    }
    if (desc.dims.back() != n) throw UnsupportedDescriptor("filtration must end at K^n");
}

inline Verdict verdict(const FieldDescriptor& field, std::size_t n,
                       const std::optional<NormSpec>& spec,
                       const std::optional<TrivialNormDesc>& trivial) {
    Verdict v;
    if (n == 0) throw UnsupportedDescriptor("dimension must be positive");
    if (n == 1) {
        v.paradoxical = false;
        v.reason = AmenableReason::SolvableGA1;
        v.detail = "GA(1,K) = K* x K is solvable, hence amenable";
        return v;
    }
    if (field.locally_finite) {
        if (field.kind != FieldDescriptor::Kind::TriviallyValued)
            throw UnsupportedDescriptor("locally finite fields admit only the trivial valuation");
        v.paradoxical = false;
        v.reason = AmenableReason::LocallyFinite;
        v.detail = "GA(n,K) is locally finite, hence amenable";
        return v;
    }
    if (field.kind == FieldDescriptor::Kind::TriviallyValued) {
        if (!trivial) throw UnsupportedDescriptor("trivially valued case needs a filtration");
        validate_trivial_desc(*trivial, n);
        const std::size_t s = trivial->values.size();
        if (s == n) {
            v.paradoxical = false;
            v.reason = AmenableReason::SolvableTriangular;
            v.detail = "isometries are upper triangular in an adapted basis; solvable";
            return v;
        }
        // first gap of width >= 2 in the dimension filtration
        std::size_t prev = 0;
        for (std::size_t k = 0; k < s; ++k) {
            if (trivial->dims[k] - prev >= 2) {
                v.embedding_index = prev + 1;
                break;
            }
            prev = trivial->dims[k];
        }
        v.paradoxical = true;
        v.construction = field.characteristic == 0 ? Construction::MagnusDifferentChar
                                                   : Construction::EqualChar;
        v.detail = "free rank-2 isometry subgroup embedded at index " +
                   std::to_string(v.embedding_index);
        return v;
    }
    if (!spec) throw UnsupportedDescriptor("nontrivially valued case needs a norm spec");
    v.paradoxical = true;
    v.construction = field.kind == FieldDescriptor::Kind::PAdicRationals
                         ? Construction::MagnusDifferentChar
                         : Construction::EqualChar;
    v.embedding_index = 1;
    v.detail = v.construction == Construction::MagnusDifferentChar
                   ? "residue characteristic differs from the field characteristic"
                   : "field and residue characteristics agree";
    return v;
}

}  // namespace nonarch
