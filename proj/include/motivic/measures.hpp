#pragma once

#include <variant>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Which motivic measure to apply. L goes to t^2, uv or q respectively.
struct MeasureKind {
  enum class Tag { poincare, hodge_deligne, point_count };
  Tag tag = Tag::poincare;
  Integer q = 0;  // only for point_count; a prime power >= 2

  static MeasureKind poincare() { return {Tag::poincare, 0}; }
  static MeasureKind hodge_deligne() { return {Tag::hodge_deligne, 0}; }
  static MeasureKind point_count(const Integer& q);
};

using MeasureValue = std::variant<UniPoly, BiPoly, Rational>;

bool is_prime_power(const Integer& q);

/// Poincare polynomial in t. Generators use their table entry;
/// MissingMeasureError names any generator without one.
UniPoly poincare(const MotivicClass& c);
BiPoly hodge_deligne(const MotivicClass& c);
/// #c(F_q) as a polynomial in q; generators must be effective.
UniPoly point_count_polynomial(const MotivicClass& c);
Integer point_count(const MotivicClass& c, const Integer& q);

MeasureValue measure(const MotivicClass& c, const MeasureKind& kind);

/// 1/2 p^2 + 1/2 p(t^2): the measure of the symmetric square.
UniPoly sym2_measure(const UniPoly& p);
/// 1/2 (p^2 + p(u^2, v^2)).
BiPoly sym2_measure(const BiPoly& p);

/// Drops every monomial divisible by uv.
BiPoly mod_uv(const BiPoly& p);
/// Same on a polynomial whose ring contains the named u and v.
MultiPoly mod_uv(const MultiPoly& p, std::string_view u = "u", std::string_view v = "v");

/// p / t^k; DivisibilityError carrying the first non-divisible monomial.
UniPoly exact_divide_measure(const UniPoly& p, int t_power);
/// p / (u^a v^b).
BiPoly exact_divide_measure(const BiPoly& p, int u_power, int v_power);

/// HD(-t, -t), which equals the Poincare polynomial on smooth projective
/// varieties (degree k Betti numbers collect (-1)^k h^{p,q} with p+q = k).
UniPoly specialize_to_poincare(const BiPoly& hd);

}  // namespace motivic
