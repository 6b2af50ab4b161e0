#include "ulie/rational.hpp"

#include <cctype>

#include "ulie/errors.hpp"

namespace ulie {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(long base, unsigned long exp) {
    Integer b(base);
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& text) {
    // [+-]digits[/digits]
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    const std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    bool ok = i > num_begin;
    if (ok && i < text.size()) {
        ok = text[i] == '/';
        const std::size_t den_begin = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        ok = ok && i > den_begin && i == text.size();
    }
    if (!ok) throw DomainError("malformed rational '" + text + "'");

    Rational r;
    r.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace ulie
