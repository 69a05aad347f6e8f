#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/sparse_poly.hpp"

namespace motivic {

/// Exponent vector of a MultiPoly monomial; its length equals the number of
/// variables of the owning polynomial.
struct Exponents {
  std::vector<int> powers;

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
  friend bool operator==(const Exponents&, const Exponents&) = default;
  friend Exponents operator+(const Exponents& a, const Exponents& b);

  int total() const;
  /// Componentwise a <= b.
  bool divides(const Exponents& b) const;
  Exponents operator-(const Exponents& b) const;
  static Exponents lcm(const Exponents& a, const Exponents& b);
};

/// Polynomial over Q in named variables. Two MultiPolys combine only when
/// their variable lists are identical; use align() to move one into a
/// larger ring.
class MultiPoly : public SparsePoly<MultiPoly, Exponents> {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> variables, std::vector<int> powers,
                            const Rational& c = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  using SparsePoly::add_term;
  using SparsePoly::coeff;
  MultiPoly& add_term(std::vector<int> powers, const Rational& c);
  Rational coeff(const std::vector<int>& powers) const;

  /// Highest power of `name` present; nullopt for the zero polynomial.
  std::optional<int> degree_in(std::string_view name) const;
  std::optional<int> total_degree() const;
  bool is_constant() const;
  Rational constant_term() const;

  /// Sum of the terms whose `name`-exponent is exactly k, with that
  /// exponent cleared (the coefficient of name^k, same ring).
  MultiPoly coefficient_in(std::string_view name, int k) const;
  /// Drops terms whose `name`-exponent exceeds max_power.
  MultiPoly truncated_in(std::string_view name, int max_power) const;

  std::string to_string() const;

  bool compatible(const MultiPoly& o) const { return vars_ == o.vars_; }
  MultiPoly zero_like() const { return MultiPoly(vars_); }
  MultiPoly one_like() const { return constant(vars_, 1); }

 private:
  std::size_t require_index(std::string_view name) const;
  std::vector<std::string> vars_;
};

enum class ArithOp { add, sub, mul };

/// Exact arithmetic on identically-aligned polynomials; AlignmentError otherwise.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

/// Variables of `a` followed by those of `b` not already present.
std::vector<std::string> union_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Re-expresses p over `variables`, which must contain every variable p
/// actually uses (unused variables of p may be dropped).
MultiPoly align(const MultiPoly& p, const std::vector<std::string>& variables);

/// Equality after aligning both sides to the union of their variables.
bool equal_aligned(const MultiPoly& a, const MultiPoly& b);

/// Simultaneous substitution. Unassigned variables are retained. The result
/// lives over the retained variables followed by the new variables of the
/// images, in order of first appearance.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignments);

Rational coeff_of(const MultiPoly& p, const std::vector<int>& powers);

/// a*b with every term of `var`-degree above `order` dropped.
MultiPoly truncated_product(const MultiPoly& a, const MultiPoly& b, std::string_view var, int order);

/// base^exponent as a power series in `var` truncated at var-degree `order`.
/// Negative exponents need an invertible (nonzero rational) var^0 part,
/// otherwise NonInvertibleError.
MultiPoly series_binomial(const MultiPoly& base, long exponent, int order, std::string_view var);

/// Generalized binomial coefficient e(e-1)...(e-k+1)/k! for any integer e.
Rational binomial(long e, int k);

MultiPoly to_multi(const UniPoly& p, const std::string& var);
MultiPoly to_multi(const BiPoly& p, const std::string& u, const std::string& v);
/// Requires p to use no variable besides `var`.
UniPoly to_uni(const MultiPoly& p, std::string_view var);
BiPoly to_bi(const MultiPoly& p, std::string_view u, std::string_view v);

}  // namespace motivic
