#ifndef PCST_RATIONAL_HPP
#define PCST_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pcst {

/// Exact rational number. Every cost, penalty, dual value and event time
/// in the library is one of these; there is no floating-point path.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// Lossy conversion, only for reporting ratios.
double to_double(const Rational& value);

}  // namespace pcst

#endif  // PCST_RATIONAL_HPP
