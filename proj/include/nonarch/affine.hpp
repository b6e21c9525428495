#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nonarch/errors.hpp"
#include "nonarch/field.hpp"
#include "nonarch/norms.hpp"
#include "nonarch/report.hpp"

namespace nonarch {

// Dense square matrix over the active field, row major.
template <class Elem>
struct Mat {
    std::size_t n = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(std::size_t dim, Elem fill) : n(dim), a(dim * dim, std::move(fill)) {}

    Elem& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

template <class Ctx>
Mat<typename Ctx::Elem> identity_mat(const Ctx& ctx, std::size_t n) {
    Mat<typename Ctx::Elem> m(n, ctx.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return m;
}

template <class Ctx>
Mat<typename Ctx::Elem> mat_from_rows(
    const Ctx& ctx, const std::vector<std::vector<typename Ctx::Elem>>& rows) {
    Mat<typename Ctx::Elem> m(rows.size(), ctx.zero());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows");
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

template <class Elem>
Mat<Elem> mat_mul(const Mat<Elem>& x, const Mat<Elem>& y) {
    if (x.n != y.n) throw DimensionMismatch("matrix product");
    Mat<Elem> r = x;
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j) {
            Elem acc = x.at(i, 0) * y.at(0, j);
            for (std::size_t k = 1; k < x.n; ++k) acc = acc + x.at(i, k) * y.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

template <class Elem>
Mat<Elem> mat_sub(const Mat<Elem>& x, const Mat<Elem>& y) {
    if (x.n != y.n) throw DimensionMismatch("matrix difference");
    Mat<Elem> r = x;
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

template <class Elem>
Vec<Elem> mat_vec(const Mat<Elem>& m, const Vec<Elem>& v) {
    if (m.n != v.size()) throw DimensionMismatch("matrix-vector product");
    Vec<Elem> r;
    r.reserve(m.n);
    for (std::size_t i = 0; i < m.n; ++i) {
        Elem acc = m.at(i, 0) * v[0];
        for (std::size_t k = 1; k < m.n; ++k) acc = acc + m.at(i, k) * v[k];
        r.push_back(acc);
    }
    return r;
}

template <class Elem>
Elem trace(const Mat<Elem>& m) {
    Elem acc = m.at(0, 0);
    for (std::size_t i = 1; i < m.n; ++i) acc = acc + m.at(i, i);
    return acc;
}

// determinant by exact Gaussian elimination with column pivoting
template <class Ctx>
typename Ctx::Elem det(const Ctx& ctx, Mat<typename Ctx::Elem> m) {
    using Elem = typename Ctx::Elem;
    Elem result = ctx.one();
    for (std::size_t col = 0; col < m.n; ++col) {
        std::size_t pivot = col;
        while (pivot < m.n && elem_is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.n) return ctx.zero();
        if (pivot != col) {
            for (std::size_t j = 0; j < m.n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            result = -result;
        }
        result = result * m.at(col, col);
        Elem inv = ctx.one() / m.at(col, col);
        for (std::size_t i = col + 1; i < m.n; ++i) {
            if (elem_is_zero(m.at(i, col))) continue;
            Elem factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < m.n; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
        }
    }
    return result;
}

// inverse by Gauss-Jordan; throws SingularLinearPart
template <class Ctx>
Mat<typename Ctx::Elem> mat_inverse(const Ctx& ctx, Mat<typename Ctx::Elem> m) {
    using Elem = typename Ctx::Elem;
    Mat<Elem> inv = identity_mat(ctx, m.n);
    for (std::size_t col = 0; col < m.n; ++col) {
        std::size_t pivot = col;
        while (pivot < m.n && elem_is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.n) throw SingularLinearPart();
        if (pivot != col)
            for (std::size_t j = 0; j < m.n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Elem scale = ctx.one() / m.at(col, col);
        for (std::size_t j = 0; j < m.n; ++j) {
            m.at(col, j) = m.at(col, j) * scale;
            inv.at(col, j) = inv.at(col, j) * scale;
        }
        for (std::size_t i = 0; i < m.n; ++i) {
            if (i == col || elem_is_zero(m.at(i, col))) continue;
            Elem factor = m.at(i, col);
            for (std::size_t j = 0; j < m.n; ++j) {
                m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

// x -> Lx + tau
template <class Elem>
struct AffineMap {
    Mat<Elem> L;
    Vec<Elem> tau;

    std::size_t dim() const { return L.n; }
    friend bool operator==(const AffineMap& g, const AffineMap& h) {
        return g.L == h.L && g.tau == h.tau;
    }
    friend bool operator!=(const AffineMap& g, const AffineMap& h) { return !(g == h); }
};

template <class Ctx>
AffineMap<typename Ctx::Elem> identity_map(const Ctx& ctx, std::size_t n) {
    return {identity_mat(ctx, n), Vec<typename Ctx::Elem>(n, ctx.zero())};
}

template <class Elem>
Vec<Elem> apply(const AffineMap<Elem>& g, const Vec<Elem>& x) {
    if (g.dim() != x.size()) throw DimensionMismatch("affine apply");
    Vec<Elem> r = mat_vec(g.L, x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + g.tau[i];
    return r;
}

// (L_g L_h, L_g tau_h + tau_g)
template <class Elem>
AffineMap<Elem> compose(const AffineMap<Elem>& g, const AffineMap<Elem>& h) {
    if (g.dim() != h.dim()) throw DimensionMismatch("affine compose");
    AffineMap<Elem> r;
    r.L = mat_mul(g.L, h.L);
    r.tau = mat_vec(g.L, h.tau);
    for (std::size_t i = 0; i < r.tau.size(); ++i) r.tau[i] = r.tau[i] + g.tau[i];
    return r;
}

template <class Ctx>
AffineMap<typename Ctx::Elem> inverse(const Ctx& ctx, const AffineMap<typename Ctx::Elem>& g) {
    AffineMap<typename Ctx::Elem> r;
    r.L = mat_inverse(ctx, g.L);
    Vec<typename Ctx::Elem> lt = mat_vec(r.L, g.tau);
    r.tau.reserve(lt.size());
    for (auto& e : lt) r.tau.push_back(-e);
    return r;
}

// |a_ij| <= 1 everywhere and |a_ij - delta_ij| <= eps
template <class Ctx>
bool congruence_membership(const Ctx& ctx, const Mat<typename Ctx::Elem>& A, const Rat& eps) {
    if (eps <= 0 || eps > 1) throw PreconditionViolated("eps must be in (0,1]");
    const Rat one(1);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) {
            if (magnitude(ctx, A.at(i, j)) > one) return false;
            auto diff = (i == j) ? A.at(i, j) - ctx.one() : A.at(i, j);
            if (magnitude(ctx, diff) > eps) return false;
        }
    return true;
}

// det = 1, linear part in the eps-congruence subgroup, |tau_i| <= eps
template <class Ctx>
bool sa_membership(const Ctx& ctx, const AffineMap<typename Ctx::Elem>& g, const Rat& eps) {
    if (!(det(ctx, g.L) == ctx.one())) return false;
    if (!congruence_membership(ctx, g.L, eps)) return false;
    for (const auto& t : g.tau)
        if (magnitude(ctx, t) > eps) return false;
    return true;
}

// Block-diagonal placement of a 2x2 affine map at rows/columns i, i+1
// (1-based), identity elsewhere.
template <class Ctx>
AffineMap<typename Ctx::Elem> embed(const Ctx& ctx, const AffineMap<typename Ctx::Elem>& g,
                                    std::size_t n, std::size_t i) {
    if (g.dim() != 2) throw DimensionMismatch("embed expects a 2-dimensional map");
    if (n < 3) throw IndexOutOfRange("embed target dimension must be at least 3");
    if (i < 1 || i >= n) throw IndexOutOfRange("embed index out of range");
    AffineMap<typename Ctx::Elem> r = identity_map(ctx, n);
    const std::size_t k = i - 1;
    for (std::size_t bi = 0; bi < 2; ++bi)
        for (std::size_t bj = 0; bj < 2; ++bj) r.L.at(k + bi, k + bj) = g.L.at(bi, bj);
    r.tau[k] = g.tau[0];
    r.tau[k + 1] = g.tau[1];
    return r;
}

// The congruence level at which Proposition-1 certifies linear isometries.
inline Rat isometry_epsilon(const NormSpec& spec) {
    auto [c1, c2] = equivalence_constants(spec);
    return c1 / c2;
}

// Exact ||Ax|| = ||x|| check over the sample set. A counterexample would
// falsify the congruence-isometry containment, so it is reported loudly.
template <class Ctx>
AuditReport isometry_audit(const Ctx& ctx, const NormSpec& spec,
                           const Mat<typename Ctx::Elem>& A,
                           const std::vector<Vec<typename Ctx::Elem>>& samples) {
    if (!congruence_membership(ctx, A, isometry_epsilon(spec)))
        throw PreconditionViolated("matrix outside the eps-congruence subgroup");
    AuditReport rep;
    rep.name = "isometry";
    for (const auto& x : samples) {
        ++rep.checked;
        Rat lhs = norm(ctx, spec, mat_vec(A, x));
        Rat rhs = norm(ctx, spec, x);
        if (lhs != rhs)
            rep.flag("FALSIFICATION: ||Ax|| != ||x||",
                     "||Ax|| = " + format_rat(lhs) + ", ||x|| = " + format_rat(rhs));
    }
    return rep;
}

}  // namespace nonarch
