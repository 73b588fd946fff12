#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace svcoh {

/// Exact rational number. GMP keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// num/den in canonical form. GMP comparisons assume canonical operands, so
/// never build a Rational from two integers without this.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct RationalParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "p/q" or "-p/q" (decimal digits only). Throws
/// RationalParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or "p" when the value is an integer.
std::string to_string(const Rational& r);

/// Always "p/q", including "p/1" for integers.
std::string to_fraction_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True iff 2r is an odd integer.
inline bool is_half_odd(const Rational& r) {
  return r.get_den() == 2;
}

}  // namespace svcoh
