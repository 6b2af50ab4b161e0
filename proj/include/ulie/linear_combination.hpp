#ifndef ULIE_LINEAR_COMBINATION_HPP
#define ULIE_LINEAR_COMBINATION_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "ulie/rational.hpp"

namespace ulie {

/* Finitely supported map Key -> Rational with no stored zeros.
 *
 * Derived is the concrete element type (CRTP) so that the arithmetic
 * operators return the right type. Keys are kept in the order given by
 * Key's operator<, which is the canonical term order of each algebra.
 */
template <class Derived, class Key>
class LinearCombination {
public:
    using key_type = Key;
    using Terms = std::map<Key, Rational>;
    using const_iterator = typename Terms::const_iterator;

    void add_term(const Key& key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }

    Derived& operator+=(const Derived& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, c);
        return self();
    }
    Derived& operator-=(const Derived& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, -c);
        return self();
    }
    Derived& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return self();
    }

    // Adds s * other without materializing the scaled copy.
    Derived& add_scaled(const Derived& other, const Rational& s) {
        if (s == 0) return self();
        for (const auto& [k, c] : other.terms_) add_term(k, s * c);
        return self();
    }

    friend Derived operator+(Derived a, const Derived& b) { return a += b; }
    friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
    friend Derived operator-(Derived a) { return a *= Rational(-1); }
    friend Derived operator*(const Rational& s, Derived a) { return a *= s; }

    friend bool operator==(const Derived& a, const Derived& b) { return a.terms() == b.terms(); }

protected:
    Derived& self() { return static_cast<Derived&>(*this); }

    Terms terms_;
};

}  // namespace ulie

#endif
