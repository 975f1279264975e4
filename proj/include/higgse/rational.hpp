#ifndef HIGGSE_RATIONAL_HPP
#define HIGGSE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace higgse {

// Arbitrary-precision rational, canonicalized (gcd 1, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical decimal string: "p" when the denominator is 1, else "p/q".
inline std::string rational_str(const Rational& r)
{
    return r.get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

Rational rational_pow(const Rational& base, unsigned long e);

// 2^(2g) as an exact rational; genus-sized exponents only.
inline Rational two_pow(unsigned long e)
{
    Rational r;
    mpz_ui_pow_ui(mpq_numref(r.get_mpq_t()), 2, e);
    return r;
}

}  // namespace higgse

#endif
