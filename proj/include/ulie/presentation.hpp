#ifndef ULIE_PRESENTATION_HPP
#define ULIE_PRESENTATION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "ulie/enveloping.hpp"
#include "ulie/freealg.hpp"
#include "ulie/freelie.hpp"
#include "ulie/words.hpp"

namespace ulie {

// a_n = n!(n-1)!/(2n+1)!, n >= 1.
Rational a_coeff(unsigned n);

struct AlphaRelation {
    unsigned n;
    Rational a_n;
    LieElement element;  // [vu^{n-1}vu^n] + a_n [vu^{2n+1}]
};

AlphaRelation alpha(unsigned n);

// Lie homomorphism L -> U with u -> xy, v -> x^2 y, evaluated through the
// associative expansion of f and products in U.
UElement phi(const NCPoly& p);
UElement phi(const LieElement& f);
// Same map evaluated along bracketings with bracket_u. Memoized per word.
UElement phi_bracketed(const LieElement& f);

// phi of the basis element at a regular word.
UElement eval_regular(const Word& w);

bool in_kernel(const LieElement& f);

/* An element of Span_Q{u, v, [vu^n] : n >= 1}. */
class NormalForm {
public:
    Rational coeff_u;
    Rational coeff_v;
    std::map<std::size_t, Rational> tail;  // n -> coefficient of [vu^n]; no zeros

    bool is_zero() const { return coeff_u == 0 && coeff_v == 0 && tail.empty(); }
    LieElement to_lie() const;
    // Throws DomainError if f has support outside u, v and v u^n.
    static NormalForm from_lie(const LieElement& f);

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

enum class ReductionRule { AlphaSubst, VVUNIND, VUMVUNIND, NMINUS1, FactorRecursion, Bilinearity };
const char* to_string(ReductionRule r);

/* Rewrites [target] into replacement; replacement - [target] lies in the
 * ideal generated by the alpha_n.
 */
struct ReductionStep {
    ReductionRule rule;
    Word target;
    LieElement replacement;
    // Words whose normal forms were used to build the replacement.
    std::vector<Word> uses;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;

    // Substitutes each step's target coefficient in order.
    LieElement replay(const LieElement& input) const;
};

struct Reduction {
    NormalForm normal_form;
    ReductionTrace trace;
};

// f - normal_form lies in the ideal generated by the alpha_n.
Reduction reduce_mod_A(const LieElement& f);
// Normal form only, without assembling a trace.
NormalForm reduce_normal_form(const LieElement& f);

}  // namespace ulie

#endif
