#include "ulie/presentation.hpp"

#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "memo.hpp"
#include "ulie/errors.hpp"

namespace ulie {

Rational a_coeff(unsigned n) {
    if (n == 0) throw DomainError("a_n is defined for n >= 1");
    Rational r(factorial(n) * factorial(n - 1), factorial(2 * n + 1));
    r.canonicalize();
    return r;
}

AlphaRelation alpha(unsigned n) {
    if (n == 0) throw DomainError("alpha_n is defined for n >= 1");
    AlphaRelation rel{n, a_coeff(n), {}};
    rel.element = LieElement::basis(c_word(n - 1, n)) + LieElement::basis(d_word(2 * n + 1), rel.a_n);
    return rel;
}

// ---------------------------------------------------------------------------
// The homomorphism u -> xy, v -> x^2 y.

namespace {

UElement generator_image(Letter a) { return a == Letter::u ? UElement::monomial(1, 1) : UElement::monomial(2, 1); }

detail::SharedMemo<Word, UElement>& phi_memo() {
    static detail::SharedMemo<Word, UElement> memo;
    return memo;
}

UElement phi_word_bracketed(const Word& w) {
    if (w.length() == 1) return generator_image(w[0]);
    if (auto hit = phi_memo().find(w)) return *hit;
    auto [c, d] = regular_factoring(w);
    UElement img = bracket_u(phi_word_bracketed(c), phi_word_bracketed(d));
    phi_memo().insert(w, img);
    return img;
}

}  // namespace

UElement phi(const NCPoly& p) {
    // Terms come in (length, lex) order, so neighbours share prefixes;
    // prefix[i] is the image of the first i letters of the previous word.
    std::vector<UElement> prefix{UElement::unity()};
    Word prev;
    UElement out;
    for (const auto& [w, c] : p) {
        std::size_t common = 0;
        while (common < w.length() && common < prev.length() && w[common] == prev[common]) ++common;
        prefix.resize(common + 1);
        for (std::size_t i = common; i < w.length(); ++i) prefix.push_back(prefix.back() * generator_image(w[i]));
        out.add_scaled(prefix.back(), c);
        prev = w;
    }
    return out;
}

UElement phi(const LieElement& f) { return phi(expand(f)); }

UElement phi_bracketed(const LieElement& f) {
    UElement out;
    for (const auto& [w, c] : f) out.add_scaled(phi_word_bracketed(w), c);
    return out;
}

UElement eval_regular(const Word& w) { return phi(LieElement::basis(w)); }

bool in_kernel(const LieElement& f) { return phi_bracketed(f).is_zero(); }

// ---------------------------------------------------------------------------
// NormalForm

LieElement NormalForm::to_lie() const {
    LieElement f;
    f.add_term(Word("u"), coeff_u);
    f.add_term(Word("v"), coeff_v);
    for (const auto& [n, c] : tail) f.add_term(d_word(n), c);
    return f;
}

NormalForm NormalForm::from_lie(const LieElement& f) {
    NormalForm nf;
    for (const auto& [w, c] : f) {
        if (w == Word("u")) {
            nf.coeff_u = c;
        } else if (auto n = d_index(w)) {
            if (*n == 0) {
                nf.coeff_v = c;
            } else {
                nf.tail.emplace(*n, c);
            }
        } else {
            throw DomainError("word '" + w.str() + "' is not u, v or v u^n");
        }
    }
    return nf;
}

const char* to_string(ReductionRule r) {
    switch (r) {
        case ReductionRule::AlphaSubst: return "AlphaSubst";
        case ReductionRule::VVUNIND: return "VVUNIND";
        case ReductionRule::VUMVUNIND: return "VUMVUNIND";
        case ReductionRule::NMINUS1: return "NMINUS1";
        case ReductionRule::FactorRecursion: return "FactorRecursion";
        case ReductionRule::Bilinearity: return "Bilinearity";
    }
    return "?";
}

LieElement ReductionTrace::replay(const LieElement& input) const {
    LieElement current = input;
    for (const auto& step : steps) {
        const Rational c = current.coeff(step.target);
        if (c == 0) continue;
        current.add_term(step.target, -c);
        current.add_scaled(step.replacement, c);
    }
    return current;
}

// ---------------------------------------------------------------------------
// Reduction modulo the ideal generated by the alpha_n.
//
// Terminal words are u, v and v u^n; they are their own normal forms. Every
// other regular word gets one rewrite step whose replacement differs from it
// by an element of the ideal, and whose normal form is the normal form of the
// replacement. Words v u^m v u^n (m < n) follow the induction on n:
//   n = m+1   alpha_{m+1}
//   n = m+2   [vu^m vu^{m+2}] = [[vu^m vu^{m+1}], u]
//   n >= m+3  [vu^m vu^n] = [[vu^m vu^{n-1}], u] - [vu^{m+1} vu^{n-1}]
// Any other word w = cd is rewritten as [nf(c), nf(d)], expanded with
// bracket_small.

namespace {

struct WordReduction {
    ReductionRule rule;
    LieElement replacement;
    std::vector<Word> uses;
    LieElement normal;  // supported on terminal words
};

detail::SharedMemo<Word, WordReduction>& reduction_memo() {
    static detail::SharedMemo<Word, WordReduction> memo;
    return memo;
}

bool is_terminal(const Word& w) {
    return w.length() == 1 || (d_index(w).has_value());
}

// Bracket of two elements supported on terminal words.
LieElement bracket_terminal(const LieElement& f, const LieElement& g) {
    LieElement out;
    for (const auto& [a, ca] : f) {
        for (const auto& [b, cb] : g) {
            const SmallBracket s = bracket_small(a, b);
            if (s.epsilon == 0) continue;
            out.add_term(s.word, ca * cb * s.epsilon);
        }
    }
    return out;
}

WordReduction reduce_word(const Word& w);

LieElement normal_of(const Word& w) {
    if (is_terminal(w)) return LieElement::basis(w);
    return reduce_word(w).normal;
}

LieElement normal_of(const LieElement& f) {
    LieElement out;
    for (const auto& [w, c] : f) out.add_scaled(normal_of(w), c);
    return out;
}

WordReduction reduce_word(const Word& w) {
    if (auto hit = reduction_memo().find(w)) return *hit;

    const LieElement u = LieElement::basis(Word("u"));
    WordReduction r;
    if (classify(w) == WordClass::InC) {
        const auto [m, n] = *c_indices(w);
        if (n == m + 1) {
            r.rule = ReductionRule::AlphaSubst;
            r.replacement = LieElement::basis(d_word(2 * m + 3), -a_coeff(static_cast<unsigned>(m + 1)));
        } else if (n == m + 2) {
            r.rule = ReductionRule::NMINUS1;
            const Word sub = c_word(m, m + 1);
            r.replacement = bracket_terminal(normal_of(sub), u);
            r.uses = {sub};
        } else {
            r.rule = m == 0 ? ReductionRule::VVUNIND : ReductionRule::VUMVUNIND;
            const Word sub1 = c_word(m, n - 1);
            const Word sub2 = c_word(m + 1, n - 1);
            r.replacement = bracket_terminal(normal_of(sub1), u) - LieElement::basis(sub2);
            r.uses = {sub1, sub2};
        }
    } else {
        auto [c, d] = regular_factoring(w);
        r.rule = ReductionRule::FactorRecursion;
        r.replacement = bracket_terminal(normal_of(c), normal_of(d));
        r.uses = {c, d};
    }
    r.normal = normal_of(r.replacement);
    reduction_memo().insert(w, r);
    return r;
}

}  // namespace

NormalForm reduce_normal_form(const LieElement& f) { return NormalForm::from_lie(normal_of(f)); }

Reduction reduce_mod_A(const LieElement& f) {
    // Reverse postorder over "replacement mentions" and "uses" edges, so a
    // step always precedes the steps for words its replacement mentions.
    std::vector<ReductionStep> postorder;
    std::set<Word> visited;
    std::function<void(const Word&)> visit = [&](const Word& w) {
        if (is_terminal(w) || !visited.insert(w).second) return;
        WordReduction r = reduce_word(w);
        for (const auto& [x, c] : r.replacement) visit(x);
        for (const auto& x : r.uses) visit(x);
        postorder.push_back(ReductionStep{r.rule, w, std::move(r.replacement), std::move(r.uses)});
    };
    for (const auto& [w, c] : f) visit(w);

    Reduction out;
    out.trace.steps.assign(std::make_move_iterator(postorder.rbegin()), std::make_move_iterator(postorder.rend()));
    out.normal_form = reduce_normal_form(f);
    return out;
}

}  // namespace ulie
