#ifndef ULIE_ENVELOPING_HPP
#define ULIE_ENVELOPING_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "ulie/linear_combination.hpp"

namespace ulie {

// x^k y^l; (0, 0) is the unity.
struct PBWMonomial {
    unsigned k = 0;
    unsigned l = 0;

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

// Element of U in the PBW basis x^k y^l.
class UElement : public LinearCombination<UElement, PBWMonomial> {
public:
    UElement() = default;

    static UElement monomial(unsigned k, unsigned l, const Rational& c = 1) {
        UElement f;
        f.add_term(PBWMonomial{k, l}, c);
        return f;
    }
    static UElement unity() { return monomial(0, 0); }
    static UElement x() { return monomial(1, 0); }
    static UElement y() { return monomial(0, 1); }

    friend UElement operator*(const UElement& f, const UElement& g);
};

// y^l x^m in PBW form: sum_t C(l,t) (-m)^{l-t} x^m y^t.
UElement normal_order_yx(unsigned l, unsigned m);

/* Normal form of a word over {x, y} by repeated single rewrites yx -> xy - x.
 * Rewrites the leftmost occurrence, or a uniformly chosen occurrence when
 * rng is given. Independent of mul_u; kept as a reference.
 */
UElement rewrite_naive(std::string_view word, std::mt19937_64* rng = nullptr);

UElement mul_u(const UElement& f, const UElement& g);
// fg - gf
UElement bracket_u(const UElement& f, const UElement& g);
// (ad a)^n (b)
UElement ad_pow(const UElement& a, unsigned n, const UElement& b);

struct LGammaSplit {
    UElement in_l;      // span of x, y
    UElement in_gamma;  // monomials with k + l != 1
};
LGammaSplit decompose_L_Gamma(const UElement& f);

// Every monomial is x^k y with k >= 1.
bool in_R(const UElement& f);
// Every monomial is x^k, or x^k y with k >= 1.
bool in_Fx_plus_R(const UElement& f);

// Largest power of y present; Bottom for the zero element.
class FiltrationDegree {
public:
    static FiltrationDegree bottom() { return FiltrationDegree(); }
    static FiltrationDegree of(unsigned n) { return FiltrationDegree(n); }

    bool is_bottom() const noexcept { return !n_.has_value(); }
    unsigned value() const { return n_.value(); }

    // Bottom is below every degree.
    friend auto operator<=>(const FiltrationDegree&, const FiltrationDegree&) = default;

    std::string str() const { return n_ ? std::to_string(*n_) : std::string("bottom"); }

private:
    FiltrationDegree() = default;
    explicit FiltrationDegree(unsigned n) : n_(n) {}
    std::optional<unsigned> n_;
};

FiltrationDegree filtration_degree(const UElement& f);

}  // namespace ulie

#endif
