#include "ulie/enveloping.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ulie/errors.hpp"

namespace ulie {

namespace {

// x^k y^l * x^m y^n = sum_t C(l,t) (-m)^{l-t} x^{k+m} y^{t+n}
void add_monomial_product(UElement& out, const PBWMonomial& a, const PBWMonomial& b, const Rational& c) {
    // Walk t downward from l, updating C(l,t) and (-m)^{l-t} in place.
    Integer binom = 1, power = 1;
    Rational term;
    for (unsigned t = a.l + 1; t-- > 0;) {
        term = c;
        term *= binom * power;
        out.add_term(PBWMonomial{a.k + b.k, t + b.l}, term);
        if (t == 0 || b.k == 0) break;
        binom *= t;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), a.l - t + 1);
        power *= -static_cast<long>(b.k);
    }
}

}  // namespace

UElement operator*(const UElement& f, const UElement& g) {
    UElement out;
    for (const auto& [a, ca] : f) {
        for (const auto& [b, cb] : g) add_monomial_product(out, a, b, ca * cb);
    }
    return out;
}

UElement normal_order_yx(unsigned l, unsigned m) {
    UElement out;
    add_monomial_product(out, PBWMonomial{0, l}, PBWMonomial{m, 0}, 1);
    return out;
}

UElement rewrite_naive(std::string_view word, std::mt19937_64* rng) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != 'x' && word[i] != 'y') {
            throw ParseError("unknown letter '" + std::string(1, word[i]) + "'", i + 1);
        }
    }
    /* Both rewrites lower (length, number of y-before-x pairs), so taking the
     * largest pending word first means every word is rewritten once, after all
     * of its contributions have been merged.
     */
    using Key = std::tuple<std::size_t, std::size_t, std::string>;
    const auto key_of = [](std::string w) {
        std::size_t ys = 0, inversions = 0;
        for (char ch : w) {
            if (ch == 'y') ++ys;
            else inversions += ys;
        }
        const std::size_t len = w.size();
        return Key{len, inversions, std::move(w)};
    };
    std::map<Key, Rational, std::greater<>> pending;
    pending.emplace(key_of(std::string(word)), 1);
    UElement done;
    std::vector<std::size_t> sites;

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string& w = std::get<2>(node.key());
        const Rational& c = node.mapped();

        sites.clear();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == 'y' && w[i + 1] == 'x') sites.push_back(i);
        }
        if (sites.empty()) {
            // No yx left, so w = x^k y^l.
            const auto k = static_cast<unsigned>(std::count(w.begin(), w.end(), 'x'));
            done.add_term(PBWMonomial{k, static_cast<unsigned>(w.size()) - k}, c);
            continue;
        }
        std::size_t pos = sites.front();
        if (rng != nullptr) {
            std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
            pos = sites[pick(*rng)];
        }
        const std::string head = w.substr(0, pos);
        const std::string tail = w.substr(pos + 2);
        // yx -> xy - x
        for (auto [replacement, sign] : {std::pair<const char*, int>{"xy", 1}, {"x", -1}}) {
            const Key next = key_of(head + replacement + tail);
            Rational& slot = pending[next];
            slot += sign * c;
            if (slot == 0) pending.erase(next);
        }
    }
    return done;
}

UElement mul_u(const UElement& f, const UElement& g) { return f * g; }

UElement bracket_u(const UElement& f, const UElement& g) { return f * g - g * f; }

UElement ad_pow(const UElement& a, unsigned n, const UElement& b) {
    UElement out = b;
    for (unsigned i = 0; i < n && !out.is_zero(); ++i) out = bracket_u(a, out);
    return out;
}

LGammaSplit decompose_L_Gamma(const UElement& f) {
    LGammaSplit split;
    for (const auto& [m, c] : f) {
        (m.k + m.l == 1 ? split.in_l : split.in_gamma).add_term(m, c);
    }
    return split;
}

bool in_R(const UElement& f) {
    return std::all_of(f.begin(), f.end(), [](const auto& t) { return t.first.l == 1 && t.first.k >= 1; });
}

bool in_Fx_plus_R(const UElement& f) {
    return std::all_of(f.begin(), f.end(), [](const auto& t) {
        return t.first.l == 0 || (t.first.l == 1 && t.first.k >= 1);
    });
}

FiltrationDegree filtration_degree(const UElement& f) {
    if (f.is_zero()) return FiltrationDegree::bottom();
    unsigned n = 0;
    for (const auto& [m, c] : f) n = std::max(n, m.l);
    return FiltrationDegree::of(n);
}

}  // namespace ulie
