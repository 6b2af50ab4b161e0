#include "ulie/freelie.hpp"

#include <utility>

#include "memo.hpp"
#include "ulie/errors.hpp"

namespace ulie {

namespace {

detail::SharedMemo<Word, NCPoly>& expand_memo() {
    static detail::SharedMemo<Word, NCPoly> memo;
    return memo;
}

detail::SharedMemo<std::pair<Word, Word>, LieElement>& bracket_memo() {
    static detail::SharedMemo<std::pair<Word, Word>, LieElement> memo;
    return memo;
}

void require_regular(const char* op, const Word& w) {
    if (w.empty()) throw EmptyWordError(op);
    if (!is_regular(w)) throw NotRegularError(op, w.str());
}

}  // namespace

Word BracketTree::frontier() const {
    if (is_leaf()) return Word::letter(leaf_);
    return left_->frontier() + right_->frontier();
}

std::string BracketTree::str() const {
    if (is_leaf()) return std::string(1, static_cast<char>(leaf_));
    return "[" + left_->str() + "," + right_->str() + "]";
}

LieElement LieElement::basis(const Word& w, const Rational& c) {
    LieElement f;
    f.add_term(w, c);
    return f;
}

void LieElement::add_term(const Word& w, const Rational& c) {
    require_regular("LieElement", w);
    add_unchecked(w, c);
}

BracketTree bracketing(const Word& w) {
    require_regular("bracketing", w);
    if (w.length() == 1) return BracketTree(w[0]);
    auto [c, d] = regular_factoring(w);
    return BracketTree(bracketing(c), bracketing(d));
}

NCPoly expand(const Word& w) {
    require_regular("expand", w);
    if (w.length() == 1) return NCPoly::monomial(w);
    if (auto hit = expand_memo().find(w)) return *hit;
    auto [c, d] = regular_factoring(w);
    NCPoly p = commutator(expand(c), expand(d));
    expand_memo().insert(w, p);
    return p;
}

NCPoly expand(const LieElement& f) {
    NCPoly p;
    for (const auto& [w, c] : f) p.add_scaled(expand(w), c);
    return p;
}

LieElement to_basis(const NCPoly& p) {
    if (p.coeff(Word()) != 0) throw ConstantTermError();
    LieElement out;
    NCPoly residual = p;
    while (!residual.is_zero()) {
        // Greatest (length, lex) key: the lex-greatest word of the top component.
        const auto& [lead, c] = *residual.terms().rbegin();
        if (!is_regular(lead)) throw NotLieElementError(lead.str());
        const Word w = lead;
        const Rational coeff = c;
        out.add_unchecked(w, coeff);
        residual.add_scaled(expand(w), -coeff);
    }
    return out;
}

/* Bracket of basis elements a, b. When a |> b and either a is a letter or
 * the right factor a2 of a satisfies not(a2 |> b), ab is regular with
 * factoring (a, b). Otherwise a = a1 a2 and Jacobi gives
 * [[a1,a2],b] = [a1,[a2,b]] + [[a1,b],a2], whose terms are again reduced.
 */
LieElement bracket_words(const Word& a, const Word& b) {
    if (a == b) return {};
    if (wreath_greater(b, a)) return -bracket_words(b, a);

    const auto key = std::make_pair(a, b);
    if (auto hit = bracket_memo().find(key)) return *hit;

    LieElement out;
    if (a.length() == 1) {
        out.add_unchecked(a + b, 1);
    } else {
        auto [a1, a2] = regular_factoring(a);
        if (!wreath_greater(a2, b)) {
            out.add_unchecked(a + b, 1);
        } else {
            LieElement left;
            left.add_unchecked(a1, 1);
            LieElement right;
            right.add_unchecked(a2, 1);
            out = lie_bracket(left, bracket_words(a2, b));
            out += lie_bracket(bracket_words(a1, b), right);
        }
    }
    bracket_memo().insert(key, out);
    return out;
}

LieElement lie_bracket(const LieElement& f, const LieElement& g) {
    LieElement out;
    for (const auto& [a, ca] : f) {
        for (const auto& [b, cb] : g) out.add_scaled(bracket_words(a, b), ca * cb);
    }
    return out;
}

LieElement lie_bracket_by_expansion(const LieElement& f, const LieElement& g) {
    return to_basis(commutator(expand(f), expand(g)));
}

SmallBracket bracket_small(const Word& w1, const Word& w2) {
    // d_index covers v (n = 0) and v u^n; u is handled separately.
    const bool u1 = w1 == Word("u");
    const bool u2 = w2 == Word("u");
    const auto n1 = d_index(w1);
    const auto n2 = d_index(w2);
    if ((!u1 && !n1) || (!u2 && !n2)) {
        throw DomainError("bracket_small: arguments must be u, v or v u^n, got '" + w1.str() + "', '" +
                          w2.str() + "'");
    }
    const Word vu = d_word(1);
    if (u1 && u2) return {0, vu};
    if (u1) return {-1, d_word(*n2 + 1)};  // [u, v u^n] = -[v u^{n+1}]
    if (u2) return {1, d_word(*n1 + 1)};
    // Both of the form v u^n, n >= 0.
    if (*n1 == *n2) return {0, vu};
    if (*n1 < *n2) return {1, w1 + w2};
    return {-1, w2 + w1};
}

LieElement ad_identity_vmun(unsigned m, unsigned n) {
    if (m == 0 || n == 0) throw DomainError("ad_identity_vmun: m and n must be positive");
    const LieElement u = LieElement::basis(Word("u"));
    const LieElement v = LieElement::basis(Word("v"));
    LieElement f = v;
    for (unsigned i = 0; i < n; ++i) f = lie_bracket(f, u);  // (-ad u)(f) = [f, u]
    for (unsigned i = 1; i < m; ++i) f = lie_bracket(v, f);
    return f;
}

}  // namespace ulie
