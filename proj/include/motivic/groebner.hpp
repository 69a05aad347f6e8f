#pragma once

#include <string>
#include <vector>

#include "motivic/multi_poly.hpp"

namespace motivic::ideal {

/// Orders compare exponent vectors with the first ring variable largest.
enum class MonomialOrder { lex, grlex, grevlex };

std::string to_string(MonomialOrder o);
MonomialOrder parse_order(const std::string& s);

/// Strict a < b in the given order.
bool order_less(const Exponents& a, const Exponents& b, MonomialOrder o);

Exponents leading_exponent(const MultiPoly& p, MonomialOrder o);
Rational leading_coefficient(const MultiPoly& p, MonomialOrder o);

struct Ideal {
  std::vector<std::string> variables;
  std::vector<MultiPoly> generators;  // nonzero, all over `variables`
  MonomialOrder order = MonomialOrder::lex;

  Ideal() = default;
  /// Aligns every generator to the union of their variables (or to
  /// `variables` when given) and drops nothing: zero generators are an error.
  Ideal(std::vector<MultiPoly> gens, MonomialOrder ord, std::vector<std::string> vars = {});
};

struct GroebnerBasis {
  std::vector<std::string> variables;
  std::vector<MultiPoly> basis;
  MonomialOrder order = MonomialOrder::lex;
  bool reduced = false;
};

struct Division {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

/// Multivariate division: p = sum q_i g_i + r with no term of r divisible
/// by any leading monomial.
Division divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors, MonomialOrder o);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder o);

/// Reduced Groebner basis (monic, sorted by descending leading monomial).
/// Pairs are taken smallest lcm first; coprime leading monomials are
/// skipped. ScaleGuardError above max_variables variables.
GroebnerBasis buchberger(const Ideal& ideal, std::size_t max_variables = 6);

/// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

struct Membership {
  bool member = false;
  MultiPoly remainder;
};

Membership ideal_member(const MultiPoly& p, const GroebnerBasis& gb);

/// Same ideal: equal reduced bases over a common ring.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// Two-sided membership of generators, independent of basis normal form.
bool ideal_equal_by_membership(const Ideal& a, const Ideal& b);

struct MapTarget {
  std::string variable;
  UniPoly image;  // polynomial in the retained variable
};

/// Kernel of Q[x][t_1..t_k] -> Q[x], t_i -> f_i(x): the ideal
/// <t_i - f_i(x)>, as a reduced basis in lex order over [t_1, ..., t_k, x].
GroebnerBasis kernel_of_map(const std::vector<MapTarget>& targets, const std::string& x = "x");

}  // namespace motivic::ideal
