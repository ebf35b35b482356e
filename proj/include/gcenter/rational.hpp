#ifndef GCENTER_RATIONAL_HPP
#define GCENTER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gcenter {

// Exact rational; gmpxx keeps every arithmetic result canonical
// (positive denominator, reduced).
using Rational = mpq_class;

// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

int sign(const Rational& r);
double to_double(const Rational& r);

// Closest dyadic rational to a finite double (exact conversion).
Rational from_double(double d);

}  // namespace gcenter

#endif
