#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kltvol {

/// Exact rational number. Every quantity in the library is carried in this
/// type; nothing is ever rounded through floating point.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "-n" or "n/d" (whitespace ignored). Throws Error{Parse} on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form. Integers are written with denominator 1.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Integer& z);

double to_double(const Rational& q);

}  // namespace kltvol
