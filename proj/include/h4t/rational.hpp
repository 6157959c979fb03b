#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace h4t {

/* Arbitrary-precision fraction, always canonical (lowest terms, positive
 * denominator).
 */
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/* "p" for integers, "p/q" otherwise. */
std::string to_string(const Rational& q);

/* Accepts "p", "-p", "p/q"; throws std::invalid_argument. */
Rational parse_rational(std::string_view text);

} // namespace h4t
