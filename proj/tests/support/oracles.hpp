// Reference computations used only by the tests. Each one works on plain
// strings and maps and does not call into the code path it checks.

#ifndef ULIE_TESTS_ORACLES_HPP
#define ULIE_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ulie/enveloping.hpp"
#include "ulie/freealg.hpp"
#include "ulie/freelie.hpp"
#include "ulie/rational.hpp"
#include "ulie/words.hpp"

namespace oracle {

using ulie::Rational;

// Positional comparison with v > u: +1, -1, 0 for equal, 2 for proper prefix.
inline int lex(const std::string& a, const std::string& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] == 'v' ? 1 : -1;
    }
    return a.size() == b.size() ? 0 : 2;
}

// w is strictly greater than each of its proper rotations.
inline bool regular_by_rotation(const std::string& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (lex(w, w.substr(i) + w.substr(0, i)) != 1) return false;
    }
    return !w.empty();
}

inline std::vector<std::string> all_words(std::size_t len) {
    std::vector<std::string> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        std::string w(len, 'u');
        for (std::size_t i = 0; i < len; ++i) {
            if (bits >> (len - 1 - i) & 1) w[i] = 'v';
        }
        out.push_back(w);
    }
    return out;
}

inline int mobius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// (1/n) sum_{d | n} mu(d) 2^{n/d}
inline long witt(unsigned n) {
    long s = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) s += mobius(d) * (1L << (n / d));
    }
    return s / static_cast<long>(n);
}

// Longest proper ending passing the rotation test.
inline std::pair<std::string, std::string> factoring(const std::string& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (regular_by_rotation(w.substr(i))) return {w.substr(0, i), w.substr(i)};
    }
    return {};
}

// Noncommutative polynomials as plain maps, for independent expansion.
using Poly = std::map<std::string, Rational>;

inline void add(Poly& p, const std::string& w, const Rational& c) {
    p[w] += c;
    if (p[w] == 0) p.erase(w);
}

inline Poly commutator(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [x, cx] : a) {
        for (const auto& [y, cy] : b) {
            add(out, x + y, cx * cy);
            add(out, y + x, -cx * cy);
        }
    }
    return out;
}

inline Poly expand_tree(const std::string& w) {
    if (w.size() == 1) return {{w, 1}};
    auto [c, d] = factoring(w);
    return commutator(expand_tree(c), expand_tree(d));
}

inline Poly to_poly(const ulie::NCPoly& p) {
    Poly out;
    for (const auto& [w, c] : p) out[w.letters()] = c;
    return out;
}

// ---------------------------------------------------------------------------
// Random elements for property tests.

inline Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    long p = 0;
    while (p == 0) p = num(rng);
    Rational r(p, den(rng));
    r.canonicalize();
    return r;
}

inline ulie::NCPoly random_ncpoly(std::mt19937_64& rng, std::size_t max_len, int terms) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    ulie::NCPoly p;
    for (int i = 0; i < terms; ++i) {
        std::string w(len(rng), 'u');
        for (auto& ch : w) ch = bit(rng) ? 'v' : 'u';
        p.add_term(ulie::Word(w), small_rational(rng));
    }
    return p;
}

inline ulie::UElement random_u(std::mt19937_64& rng, unsigned max_power, int terms) {
    std::uniform_int_distribution<unsigned> pw(0, max_power);
    ulie::UElement f;
    for (int i = 0; i < terms; ++i) f.add_term(ulie::PBWMonomial{pw(rng), pw(rng)}, small_rational(rng));
    return f;
}

inline ulie::LieElement random_lie(std::mt19937_64& rng, const std::vector<ulie::Word>& pool, int terms) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    ulie::LieElement f;
    for (int i = 0; i < terms; ++i) f.add_term(pool[pick(rng)], small_rational(rng));
    return f;
}

// y^l x^m as a string.
inline std::string yx_word(unsigned l, unsigned m) { return std::string(l, 'y') + std::string(m, 'x'); }

inline ulie::UElement u_product(const std::string& word) {
    ulie::UElement f = ulie::UElement::unity();
    for (char c : word) f = ulie::mul_u(f, c == 'x' ? ulie::UElement::x() : ulie::UElement::y());
    return f;
}

}  // namespace oracle

#endif
