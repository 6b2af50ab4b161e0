#ifndef ULIE_FREEALG_HPP
#define ULIE_FREEALG_HPP

#include <cstddef>
#include <map>

#include "ulie/linear_combination.hpp"
#include "ulie/words.hpp"

namespace ulie {

// Element of the free associative algebra on {u, v} with rational coefficients.
class NCPoly : public LinearCombination<NCPoly, Word> {
public:
    NCPoly() = default;

    static NCPoly monomial(const Word& w, const Rational& c = 1) {
        NCPoly p;
        p.add_term(w, c);
        return p;
    }
    static NCPoly unit() { return monomial(Word()); }
    static NCPoly letter(Letter a) { return monomial(Word::letter(a)); }

    friend NCPoly operator*(const NCPoly& p, const NCPoly& q);
};

NCPoly add(const NCPoly& p, const NCPoly& q);
// Bilinear extension of concatenation.
NCPoly mul(const NCPoly& p, const NCPoly& q);
// pq - qp
NCPoly commutator(const NCPoly& p, const NCPoly& q);
// Terms grouped by word length.
std::map<std::size_t, NCPoly> homogeneous_components(const NCPoly& p);

}  // namespace ulie

#endif
