#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/rational.hpp"

namespace motivic {

/// Exact sparse polynomial over Q, parameterized by its exponent type.
///
/// Terms are kept in an ordered map from exponent to coefficient and zero
/// coefficients are never stored, so two polynomials are equal iff their maps
/// are equal. `Derived` supplies `compatible()` (variable alignment) and
/// `zero_like()` (an empty polynomial in the same ring).
template <class Derived, class Exponent>
class SparsePoly {
 public:
  using exponent_type = Exponent;
  using Terms = std::map<Exponent, Rational>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Derived& add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return self();
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return self();
  }

  Derived& operator+=(const Derived& o) {
    self().require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return self();
  }

  Derived& operator-=(const Derived& o) {
    self().require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return self();
  }

  Derived& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return self();
  }

  Derived& operator/=(const Rational& s) {
    if (s == 0) throw DomainError("polynomial division by zero scalar");
    for (auto& [e, c] : terms_) c /= s;
    return self();
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator*(Derived a, const Rational& s) { return a *= s; }
  friend Derived operator*(const Rational& s, Derived a) { return a *= s; }
  friend Derived operator/(Derived a, const Rational& s) { return a /= s; }

  friend Derived operator-(Derived a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend Derived operator*(const Derived& a, const Derived& b) {
    a.require_compatible(b);
    Derived r = a.zero_like();
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.self().compatible(b.self()) && a.terms_ == b.terms_;
  }

 protected:
  void require_compatible(const Derived& o) const {
    if (!self().compatible(o)) {
      throw AlignmentError("polynomials live in different rings; align variables first");
    }
  }

  Terms terms_;

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

template <class P>
P pow(const P& base, unsigned exponent) {
  P result = base.one_like();
  P square = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1u;
    if (exponent > 0) square = square * square;
  }
  return result;
}

namespace detail {

/// Renders terms in canonical order: ascending total degree, ties broken by
/// descending lexicographic exponent (earlier variables first), e.g.
/// "1 - 4*u - 4*v + u*v".
std::string format_terms(std::vector<std::pair<std::vector<int>, Rational>> terms,
                         const std::vector<std::string>& variables);

}  // namespace detail

/// Polynomial in one variable. The variable name is chosen at print time
/// ("t" for Poincare, "q" for point counts, "L" for Lefschetz classes).
class UniPoly : public SparsePoly<UniPoly, int> {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& constant) { add_term(0, constant); }

  static UniPoly monomial(int exponent, const Rational& c = 1);
  /// Dense ascending coefficients: {c0, c1, c2, ...}.
  static UniPoly dense(const std::vector<Rational>& coefficients);

  /// nullopt encodes the degree of the zero polynomial (minus infinity).
  std::optional<int> degree() const;
  std::optional<int> low_degree() const;

  Rational evaluate(const Rational& x) const;
  /// p(t^k).
  UniPoly compose_power(int k) const;
  /// p(c*t).
  UniPoly scale_variable(const Rational& c) const;
  UniPoly truncate(int max_degree) const;
  bool has_nonnegative_integer_coefficients() const;

  std::string to_string(std::string_view var = "t") const;

  bool compatible(const UniPoly&) const { return true; }
  UniPoly zero_like() const { return {}; }
  UniPoly one_like() const { return UniPoly(1); }
};

struct BiExponent {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const BiExponent&, const BiExponent&) = default;
  friend BiExponent operator+(BiExponent a, BiExponent b) { return {a.u + b.u, a.v + b.v}; }
};

/// Polynomial in two variables (u, v); houses Hodge-Deligne polynomials.
class BiPoly : public SparsePoly<BiPoly, BiExponent> {
 public:
  BiPoly() = default;
  explicit BiPoly(const Rational& constant) { add_term({0, 0}, constant); }

  static BiPoly monomial(int u_power, int v_power, const Rational& c = 1);

  Rational coeff(int u_power, int v_power) const { return SparsePoly::coeff({u_power, v_power}); }
  using SparsePoly::coeff;

  /// p(u^2, v^2).
  BiPoly square_variables() const;
  /// p(c*t, c*t) as a polynomial in t.
  UniPoly specialize_diagonal(const Rational& c) const;
  Rational evaluate(const Rational& u, const Rational& v) const;
  bool is_constant() const;

  std::string to_string(std::string_view u = "u", std::string_view v = "v") const;

  bool compatible(const BiPoly&) const { return true; }
  BiPoly zero_like() const { return {}; }
  BiPoly one_like() const { return BiPoly(1); }
};

}  // namespace motivic
