#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nonarch/affine.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/report.hpp"

namespace nonarch {

// Letters of F_2 in shortlex order: a < a^-1 < b < b^-1.
enum class Letter : unsigned char { A = 0, Ainv = 1, B = 2, Binv = 3 };

inline Letter letter_inverse(Letter l) {
    switch (l) {
        case Letter::A: return Letter::Ainv;
        case Letter::Ainv: return Letter::A;
        case Letter::B: return Letter::Binv;
        default: return Letter::B;
    }
}

inline char letter_char(Letter l) {
    static constexpr std::array<char, 4> chars = {'a', 'A', 'b', 'B'};
    return chars[static_cast<std::size_t>(l)];
}

using Word = std::vector<Letter>;

constexpr std::size_t kMaxWordDepth = 12;

inline std::string word_str(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (Letter l : w) s += letter_char(l);
    return s;
}

inline Word parse_word(const std::string& s) {
    Word w;
    if (s == "e") return w;
    for (char c : s) {
        switch (c) {
            case 'a': w.push_back(Letter::A); break;
            case 'A': w.push_back(Letter::Ainv); break;
            case 'b': w.push_back(Letter::B); break;
            case 'B': w.push_back(Letter::Binv); break;
            default: throw ParseError(std::string("bad word letter '") + c + "'");
        }
    }
    return w;
}

// Free reduction: cancel adjacent inverse pairs until none remain.
inline Word reduce(const Word& seq) {
    Word out;
    out.reserve(seq.size());
    for (Letter l : seq) {
        if (!out.empty() && out.back() == letter_inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline bool is_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == letter_inverse(w[i - 1])) return false;
    return true;
}

inline Word word_concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return reduce(w);
}

inline Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(letter_inverse(*it));
    return r;
}

// All reduced words of length <= max_len in shortlex order, identity first.
inline std::vector<Word> enumerate_words(std::size_t max_len) {
    if (max_len > kMaxWordDepth)
        throw BoundExceeded("word depth " + std::to_string(max_len) + " > " +
                            std::to_string(kMaxWordDepth));
    std::vector<Word> out;
    out.emplace_back();
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (unsigned char c = 0; c < 4; ++c) {
                Letter l = static_cast<Letter>(c);
                if (!out[i].empty() && out[i].back() == letter_inverse(l)) continue;
                Word w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

// Depth-first walk of the reduced-word tree with incremental evaluation.
// visit(word, value) is called for every nonempty reduced word of length
// <= max_len; values are built with one composition per step.
template <class Value, class Compose, class Visit>
void walk_words(std::size_t max_len, const std::array<Value, 4>& generators,
                const Value& identity, Compose&& compose_fn, Visit&& visit) {
    if (max_len > kMaxWordDepth)
        throw BoundExceeded("word depth " + std::to_string(max_len) + " > " +
                            std::to_string(kMaxWordDepth));
    Word w;
    std::function<void(const Value&)> rec = [&](const Value& val) {
        if (w.size() >= max_len) return;
        for (unsigned char c = 0; c < 4; ++c) {
            Letter l = static_cast<Letter>(c);
            if (!w.empty() && w.back() == letter_inverse(l)) continue;
            Value next = compose_fn(val, generators[c]);
            w.push_back(l);
            visit(w, next);
            rec(next);
            w.pop_back();
        }
    };
    rec(identity);
}

template <class Ctx>
std::array<AffineMap<typename Ctx::Elem>, 4> generator_table(
    const Ctx& ctx, const AffineMap<typename Ctx::Elem>& a,
    const AffineMap<typename Ctx::Elem>& b) {
    return {a, inverse(ctx, a), b, inverse(ctx, b)};
}

template <class Ctx>
AffineMap<typename Ctx::Elem> evaluate(const Ctx& ctx, const Word& w,
                                       const AffineMap<typename Ctx::Elem>& a,
                                       const AffineMap<typename Ctx::Elem>& b) {
    auto gens = generator_table(ctx, a, b);
    auto acc = identity_map(ctx, a.dim());
    for (Letter l : w) acc = compose(acc, gens[static_cast<std::size_t>(l)]);
    return acc;
}

// Every nonempty reduced word of length <= max_len that evaluates to the
// identity map. Emptiness is bounded-length evidence of freeness.
template <class Ctx>
std::vector<Word> relation_audit(const Ctx& ctx, const AffineMap<typename Ctx::Elem>& a,
                                 const AffineMap<typename Ctx::Elem>& b, std::size_t max_len) {
    using Map = AffineMap<typename Ctx::Elem>;
    std::vector<Word> offenders;
    const Map id = identity_map(ctx, a.dim());
    walk_words<Map>(max_len, generator_table(ctx, a, b), id,
                    [](const Map& x, const Map& y) { return compose(x, y); },
                    [&](const Word& w, const Map& val) {
                        if (val == id) offenders.push_back(w);
                    });
    return offenders;
}

// The 4-piece classification: P1 absorbs the pure powers of a^-1 (and the
// identity), which squares both partition identities below.
enum class PieceLabel { P1 = 1, P2 = 2, P3 = 3, P4 = 4 };

inline PieceLabel classify(const Word& w) {
    if (w.empty()) return PieceLabel::P1;
    switch (w.front()) {
        case Letter::A: return PieceLabel::P1;
        case Letter::Ainv: {
            for (Letter l : w)
                if (l != Letter::Ainv) return PieceLabel::P2;
            return PieceLabel::P1;
        }
        case Letter::B: return PieceLabel::P3;
        default: return PieceLabel::P4;
    }
}

// Exhaustive check of X = P1 u a(P2) = P3 u b(P4) on words of length
// <= max_len - 1 (left multiplication can grow length by one).
inline AuditReport verify_group_paradox(std::size_t max_len) {
    if (max_len < 2) throw PreconditionViolated("max_len must be at least 2");
    AuditReport rep;
    rep.name = "group-paradox";
    const Word a_inv{Letter::Ainv};
    const Word b_inv{Letter::Binv};
    for (const Word& w : enumerate_words(max_len - 1)) {
        if (w.empty()) continue;  // identity sits in P1 by the pure-power rule; count real words
        ++rep.checked;
        const int in_p1 = classify(w) == PieceLabel::P1 ? 1 : 0;
        const int in_a_p2 = classify(word_concat(a_inv, w)) == PieceLabel::P2 ? 1 : 0;
        if (in_p1 + in_a_p2 != 1)
            rep.flag("A1 u a(A2)", word_str(w) + " covered " + std::to_string(in_p1 + in_a_p2) +
                                       " times");
        const int in_p3 = classify(w) == PieceLabel::P3 ? 1 : 0;
        const int in_b_p4 = classify(word_concat(b_inv, w)) == PieceLabel::P4 ? 1 : 0;
        if (in_p3 + in_b_p4 != 1)
            rep.flag("A3 u b(A4)", word_str(w) + " covered " + std::to_string(in_p3 + in_b_p4) +
                                       " times");
    }
    return rep;
}

}  // namespace nonarch
