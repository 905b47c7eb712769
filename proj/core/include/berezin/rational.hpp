#ifndef BEREZIN_RATIONAL_HPP
#define BEREZIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "berezin/errors.hpp"

namespace berezin {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form the rest of the library
// relies on.
using Rational = mpq_class;

// Parses "n" or "n/d" (optional leading sign). Throws argument_error on
// anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d".
std::string rational_str(const Rational& q);

// q^e for e >= 0.
Rational rational_pow(const Rational& q, unsigned long e);

} // namespace berezin

#endif
