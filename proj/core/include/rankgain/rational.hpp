#ifndef RANKGAIN_RATIONAL_HPP
#define RANKGAIN_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "rankgain/errors.hpp"

namespace rankgain {

/// Exact rational number. GMP keeps the representation canonical
/// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "n" or "n/d" in base 10. Throws invalid_input on anything else.
Rational parse_rational(const std::string& text);

/// Serializes as "num/den" with the denominator always present.
std::string rational_to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact square root in Q: returns the non-negative root if q is a square
/// of a rational, nothing otherwise.
std::optional<Rational> rational_sqrt(const Rational& q);

inline bool is_rational_square(const Rational& q) {
    return rational_sqrt(q).has_value();
}

/// Floor of sqrt(n) for n >= 0.
Integer integer_isqrt(const Integer& n);

} // namespace rankgain

#endif
