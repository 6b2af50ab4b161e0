#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "ulie/freealg.hpp"

using namespace ulie;

namespace {
NCPoly w(const char* s, const Rational& c = 1) { return NCPoly::monomial(Word(s), c); }
}  // namespace

TEST_CASE("add") {
    CHECK(add(w("uv"), w("uv", -1)).is_zero());
    CHECK(add(w("vu", 2), w("vu", 3)) == w("vu", 5));
    const NCPoly s = add(w("uv"), w("vu"));
    CHECK(s.size() == 2);
    CHECK(s.coeff(Word("uv")) == 1);
    CHECK(s.coeff(Word("vu")) == 1);
}

TEST_CASE("mul") {
    CHECK(mul(w("u"), w("v")) == w("uv"));
    const NCPoly p = w("uv", Rational(1, 3)) + w("v", -2) + NCPoly::unit();
    CHECK(mul(NCPoly::unit(), p) == p);
    CHECK(mul(p, NCPoly::unit()) == p);
    CHECK(mul(w("u") + w("v"), w("u")) == w("uu") + w("vu"));
    CHECK(mul(NCPoly(), p).is_zero());
}

TEST_CASE("commutator") {
    CHECK(commutator(w("u"), w("v")) == w("uv") - w("vu"));
    const NCPoly p = w("uv", 2) + w("v");
    CHECK(commutator(p, p).is_zero());
    // v·uv - uv·v
    CHECK(commutator(w("v"), w("uv")) == w("vuv") - w("uvv"));
}

TEST_CASE("homogeneous_components") {
    auto h = homogeneous_components(w("uv") + w("u"));
    CHECK(h.size() == 2);
    CHECK(h[2] == w("uv"));
    CHECK(h[1] == w("u"));
    CHECK(homogeneous_components(NCPoly()).empty());
    h = homogeneous_components(w("uv") - w("vu"));
    CHECK(h.size() == 1);
    CHECK(h[2] == w("uv") - w("vu"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const NCPoly p = oracle::random_ncpoly(rng, 3, 3);
        const NCPoly q = oracle::random_ncpoly(rng, 3, 3);
        const NCPoly r = oracle::random_ncpoly(rng, 3, 3);
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(add(p, q) == add(q, p));
        CHECK(add(add(p, q), r) == add(p, add(q, r)));
        CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
        CHECK(mul(add(p, q), r) == add(mul(p, r), mul(q, r)));

        CHECK(commutator(p, q) == -commutator(q, p));
        const NCPoly jacobi = commutator(commutator(p, q), r) + commutator(commutator(q, r), p) +
                              commutator(commutator(r, p), q);
        CHECK(jacobi.is_zero());

        // Sum of components is the polynomial.
        NCPoly sum;
        for (const auto& [len, part] : homogeneous_components(p)) sum += part;
        CHECK(sum == p);
    }
}

TEST_CASE("length is additive and commutators stay homogeneous") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const NCPoly p = oracle::random_ncpoly(rng, 4, 2);
        const NCPoly q = oracle::random_ncpoly(rng, 4, 2);
        for (const auto& [a, ca] : p) {
            for (const auto& [b, cb] : q) {
                const NCPoly prod = mul(NCPoly::monomial(a), NCPoly::monomial(b));
                CHECK(prod.size() == 1);
                CHECK(prod.begin()->first.length() == a.length() + b.length());
            }
        }
        for (const auto& [la, pa] : homogeneous_components(p)) {
            for (const auto& [lb, qb] : homogeneous_components(q)) {
                for (const auto& [len, part] : homogeneous_components(commutator(pa, qb))) {
                    CHECK(len == la + lb);
                }
            }
        }
    }
}
