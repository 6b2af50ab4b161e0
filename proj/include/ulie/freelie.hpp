#ifndef ULIE_FREELIE_HPP
#define ULIE_FREELIE_HPP

#include <memory>
#include <string>

#include "ulie/freealg.hpp"
#include "ulie/linear_combination.hpp"
#include "ulie/words.hpp"

namespace ulie {

// Leaf(letter) or Node(left, right). Subtrees are shared and immutable.
class BracketTree {
public:
    explicit BracketTree(Letter leaf) : leaf_(leaf) {}
    BracketTree(BracketTree left, BracketTree right)
        : left_(std::make_shared<const BracketTree>(std::move(left))),
          right_(std::make_shared<const BracketTree>(std::move(right))) {}

    bool is_leaf() const noexcept { return left_ == nullptr; }
    Letter leaf() const noexcept { return leaf_; }
    const BracketTree& left() const { return *left_; }
    const BracketTree& right() const { return *right_; }

    // Left-to-right leaves.
    Word frontier() const;
    // Nested brackets, e.g. "[v,[v,u]]".
    std::string str() const;

private:
    Letter leaf_ = Letter::u;
    std::shared_ptr<const BracketTree> left_;
    std::shared_ptr<const BracketTree> right_;
};

/* Coordinates in the Shirshov basis: the key w stands for the bracketing
 * of the regular word w. Every key is regular.
 */
class LieElement : public LinearCombination<LieElement, Word> {
public:
    LieElement() = default;

    // Throws NotRegularError / EmptyWordError for a non-regular word.
    static LieElement basis(const Word& w, const Rational& c = 1);

    // Checks regularity of the key.
    void add_term(const Word& w, const Rational& c);

private:
    void add_unchecked(const Word& w, const Rational& c) {
        LinearCombination<LieElement, Word>::add_term(w, c);
    }
    friend LieElement lie_bracket(const LieElement&, const LieElement&);
    friend LieElement to_basis(const NCPoly&);
    friend LieElement bracket_words(const Word&, const Word&);
};

BracketTree bracketing(const Word& w);

// Image of the bracketing of w in the free associative algebra. Memoized.
NCPoly expand(const Word& w);
NCPoly expand(const LieElement& f);

// Shirshov coordinates of p by triangular elimination of the lex-greatest word.
// Throws ConstantTermError or NotLieElementError.
LieElement to_basis(const NCPoly& p);

// Bracket of two basis elements, computed in coordinates.
LieElement bracket_words(const Word& a, const Word& b);

// Bracket in coordinates, by the Jacobi recursion on regular factorings.
LieElement lie_bracket(const LieElement& f, const LieElement& g);
// Same value through the associative algebra: to_basis([expand f, expand g]).
LieElement lie_bracket_by_expansion(const LieElement& f, const LieElement& g);

struct SmallBracket {
    int epsilon;  // -1, 0 or 1
    Word word;    // regular; fixed to vu when epsilon is 0
};

// [[w1], [w2]] = epsilon [w] for w1, w2 in {u, v} or of the form v u^n (n >= 1).
// Throws DomainError outside that set.
SmallBracket bracket_small(const Word& w1, const Word& w2);

// ((ad v)^{m-1} o (-ad u)^n)(v), evaluated with lie_bracket. m, n >= 1.
LieElement ad_identity_vmun(unsigned m, unsigned n);

}  // namespace ulie

#endif
