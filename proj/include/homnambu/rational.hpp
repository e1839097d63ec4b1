#pragma once

#include <gmpxx.h>

#include <string>

#include "homnambu/errors.hpp"

namespace homnambu {

/* Exact rational numbers.  GMP keeps values canonical (coprime, positive
 * denominator); helpers below add the checked constructors and the text
 * form used throughout serialization ("n" or "n/m"). */
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroScalar();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZeroScalar();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace homnambu
