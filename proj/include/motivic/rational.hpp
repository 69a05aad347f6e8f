#pragma once

#include <gmpxx.h>

#include <string>

namespace motivic {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

bool is_integer(const Rational& r);

/// Exact conversion; throws DomainError when r has a nontrivial denominator.
Integer to_integer(const Rational& r);

/// "7", "-3", "1/2", "-7/27".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "a" or "a/b" with optional sign.
Rational parse_rational(const std::string& text);

}  // namespace motivic
