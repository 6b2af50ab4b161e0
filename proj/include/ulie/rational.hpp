#ifndef ULIE_RATIONAL_HPP
#define ULIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace ulie {

// Exact arithmetic throughout; mpq_class keeps fractions canonical.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
// base^exp for a signed base.
Integer ipow(long base, unsigned long exp);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
// Inverse of to_string; throws DomainError on bad text or zero denominator.
Rational rational_from_string(const std::string& text);

}  // namespace ulie

#endif
