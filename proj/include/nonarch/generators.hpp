#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/affine.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/field.hpp"
#include "nonarch/report.hpp"
#include "nonarch/words.hpp"

namespace nonarch {

enum class Construction { MagnusDifferentChar, EqualChar };

// The explicit generator pair together with everything the audits need:
// the ambient valuation, the auxiliary degree valuation (equal-char case),
// the conjugator h and the seven auxiliary field elements.
template <class Ctx>
struct GeneratorCertificate {
    using Elem = typename Ctx::Elem;

    Construction construction;
    Ctx ctx;
    std::optional<Ctx> aux_ctx;
    AffineMap<Elem> a;
    AffineMap<Elem> b;
    std::optional<AffineMap<Elem>> h;
    Rat eps;

    // Magnus parameters
    long long s = 0;
    long long t = 0;

    // equal-char: the uniformizer power actually used (t^m)
    long long t_power = 1;
    // alpha, beta, gamma, delta, tau1, tau2, lambda
    std::optional<std::array<Elem, 7>> aux;
};

// A_m = [[4m^2+1, 2m], [2m, 1]]
inline Mat<Rat> magnus_matrix(const PAdicCtx& ctx, const Int& m) {
    if (m < 1) throw PreconditionViolated("Magnus parameter must be positive");
    Rat mm(m);
    return mat_from_rows(ctx, {{4 * mm * mm + 1, 2 * mm}, {2 * mm, 1}});
}

// g = (A_{p^s}, (2p^s, 0)), h = (A_{p^t}, (2p^s, 0)) in SA(2, Z, eps)
inline GeneratorCertificate<PAdicCtx> build_magnus(const PAdicCtx& ctx, long long s, long long t,
                                                   const Rat& eps) {
    if (!(s < t)) throw PreconditionViolated("need s < t");
    if (s < 1) throw PreconditionViolated("need s >= 1");
    Int ps = rat_num(rat_pow(Rat(ctx.p), s));
    Int pt = rat_num(rat_pow(Rat(ctx.p), t));
    if (magnitude(ctx, Rat(ps)) > eps)
        throw PreconditionViolated("|p^s| = " + format_rat(magnitude(ctx, Rat(ps))) +
                                   " exceeds eps = " + format_rat(eps));
    GeneratorCertificate<PAdicCtx> cert{Construction::MagnusDifferentChar, ctx};
    cert.s = s;
    cert.t = t;
    cert.eps = eps;
    Vec<Rat> tau{Rat(2 * ps), Rat(0)};
    cert.a = {magnus_matrix(ctx, ps), tau};
    cert.b = {magnus_matrix(ctx, pt), tau};
    return cert;
}

// a = diag(1+u, (1+u)^-1), h = ([[1+u, u], [-u, 1-u]], (-u, u)), b = h a h^-1,
// where u = t^m for the least m with |t^m| < eps.
template <class Base>
GeneratorCertificate<FuncCtx<Base>> build_equal_char(const FuncCtx<Base>& ctx, const Rat& eps) {
    if (ctx.valn != FFValuation::TAdic)
        throw PreconditionViolated("equal-char construction needs the t-adic valuation");
    if (eps <= 0 || eps > 1) throw PreconditionViolated("eps must be in (0,1]");
    long long m = 1;
    while (!(rat_pow(ctx.rho(), m) < eps)) {
        ++m;
        if (m > 256) throw PreconditionViolated("no uniformizer power below eps");
    }
    using Elem = typename FuncCtx<Base>::Elem;
    Elem u = ctx.one();
    for (long long i = 0; i < m; ++i) u = u * ctx.var();

    GeneratorCertificate<FuncCtx<Base>> cert{Construction::EqualChar, ctx};
    cert.eps = eps;
    cert.t_power = m;
    cert.aux_ctx = FuncCtx<Base>(FFValuation::Degree, ctx.p, ctx.rho());

    Elem one = ctx.one();
    Elem lambda = one + u;
    cert.a = {mat_from_rows(ctx, {{lambda, ctx.zero()}, {ctx.zero(), one / lambda}}),
              {ctx.zero(), ctx.zero()}};
    AffineMap<Elem> h{mat_from_rows(ctx, {{one + u, u}, {-u, one - u}}), {-u, u}};
    cert.h = h;
    cert.b = compose(compose(h, cert.a), inverse(ctx, h));
    cert.aux = std::array<Elem, 7>{one + u, u, -u, one - u, -u, u, lambda};
    return cert;
}

// The eight magnitude equalities and two side conditions of the auxiliary
// lemma, evaluated under the degree valuation.
template <class Ctx>
AuditReport verify_aux_conditions(const GeneratorCertificate<Ctx>& cert) {
    if (cert.construction != Construction::EqualChar)
        throw WrongConstruction("aux conditions apply to the equal-char construction");
    const Ctx& aux = *cert.aux_ctx;
    const auto& [alpha, beta, gamma, delta, tau1, tau2, lambda] = *cert.aux;

    AuditReport rep;
    rep.name = "aux-conditions";
    const std::array<std::pair<std::string, typename Ctx::Elem>, 8> entries{{
        {"|alpha|", alpha},
        {"|beta|", beta},
        {"|gamma|", gamma},
        {"|delta|", delta},
        {"|tau1|", tau1},
        {"|tau2|", tau2},
        {"|beta*tau2 - delta*tau1|", beta * tau2 - delta * tau1},
        {"|gamma*tau1 - alpha*tau2|", gamma * tau1 - alpha * tau2},
    }};
    const Rat common = magnitude(aux, entries[0].second);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        ++rep.checked;
        Rat m = magnitude(aux, entries[i].second);
        if (m != common)
            rep.flag("condition " + std::to_string(i + 1),
                     entries[i].first + " = " + format_rat(m) + " != " + format_rat(common));
    }
    ++rep.checked;
    if (!(magnitude(aux, lambda) > Rat(1)))
        rep.flag("condition 9", "|lambda| = " + format_rat(magnitude(aux, lambda)) + " <= 1");
    ++rep.checked;
    if (!(alpha * delta - beta * gamma == aux.one()))
        rep.flag("condition 10", "alpha*delta - beta*gamma != 1");
    return rep;
}

// Unique fixed point (I - L)^-1 tau when det(I - L) != 0.
template <class Ctx>
std::optional<Vec<typename Ctx::Elem>> fixed_point(const Ctx& ctx,
                                                   const AffineMap<typename Ctx::Elem>& g) {
    auto i_minus_l = mat_sub(identity_mat(ctx, g.dim()), g.L);
    if (elem_is_zero(det(ctx, i_minus_l))) return std::nullopt;
    return mat_vec(mat_inverse(ctx, i_minus_l), g.tau);
}

// Trace of the linear part differs from +-2 for every nonempty word.
inline AuditReport nonparabolic_audit(const GeneratorCertificate<PAdicCtx>& cert,
                                      std::size_t max_len) {
    if (cert.construction != Construction::MagnusDifferentChar)
        throw WrongConstruction("nonparabolicity audit applies to the Magnus construction");
    AuditReport rep;
    rep.name = "nonparabolic";
    const PAdicCtx& ctx = cert.ctx;
    const Rat two(2);
    walk_words<Mat<Rat>>(
        max_len,
        {cert.a.L, mat_inverse(ctx, cert.a.L), cert.b.L, mat_inverse(ctx, cert.b.L)},
        identity_mat(ctx, 2), [](const Mat<Rat>& x, const Mat<Rat>& y) { return mat_mul(x, y); },
        [&](const Word& w, const Mat<Rat>& m) {
            ++rep.checked;
            Rat tr = trace(m);
            if (tr == two || tr == -two)
                rep.flag("trace +-2", word_str(w) + " has trace " + format_rat(tr));
        });
    return rep;
}

// For every pair of distinct nonempty words whose evaluations share a
// unique fixed point, the evaluations must commute.
template <class Ctx>
AuditReport local_commutativity_audit(const Ctx& ctx, const AffineMap<typename Ctx::Elem>& a,
                                      const AffineMap<typename Ctx::Elem>& b,
                                      std::size_t max_len) {
    using Elem = typename Ctx::Elem;
    using Map = AffineMap<Elem>;
    struct Entry {
        Word w;
        Map g;
    };
    std::vector<std::pair<Vec<Elem>, Entry>> with_fix;
    std::size_t total_words = 0;
    walk_words<Map>(max_len, generator_table(ctx, a, b), identity_map(ctx, a.dim()),
                    [](const Map& x, const Map& y) { return compose(x, y); },
                    [&](const Word& w, const Map& g) {
                        ++total_words;
                        if (auto fix = fixed_point(ctx, g))
                            with_fix.push_back({*fix, Entry{w, g}});
                    });

    auto vec_less = [](const Vec<Elem>& x, const Vec<Elem>& y) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = compare(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::map<Vec<Elem>, std::vector<Entry>, decltype(vec_less)> groups(vec_less);
    for (auto& [fix, entry] : with_fix) groups[fix].push_back(entry);

    AuditReport rep;
    rep.name = "local-commutativity";
    rep.checked = total_words * (total_words - 1) / 2;
    for (const auto& [fix, entries] : groups)
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                const auto& u = entries[i];
                const auto& v = entries[j];
                if (!(compose(u.g, v.g) == compose(v.g, u.g)))
                    rep.flag("shared fixed point without commuting",
                             word_str(u.w) + " and " + word_str(v.w));
            }
    return rep;
}

}  // namespace nonarch
