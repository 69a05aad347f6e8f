#include "motivic/rational.hpp"

#include "motivic/errors.hpp"

namespace motivic {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw DomainError("expected an integer, got " + to_string(r));
  return r.get_num();
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw ParseError("not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace motivic
