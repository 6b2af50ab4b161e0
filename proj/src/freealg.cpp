#include "ulie/freealg.hpp"

namespace ulie {

NCPoly operator*(const NCPoly& p, const NCPoly& q) {
    NCPoly r;
    for (const auto& [a, ca] : p) {
        for (const auto& [b, cb] : q) r.add_term(a + b, ca * cb);
    }
    return r;
}

NCPoly add(const NCPoly& p, const NCPoly& q) { return p + q; }

NCPoly mul(const NCPoly& p, const NCPoly& q) { return p * q; }

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

std::map<std::size_t, NCPoly> homogeneous_components(const NCPoly& p) {
    std::map<std::size_t, NCPoly> out;
    for (const auto& [w, c] : p) out[w.length()].add_term(w, c);
    return out;
}

}  // namespace ulie
