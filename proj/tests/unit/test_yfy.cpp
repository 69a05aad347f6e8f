#include <doctest.h>

#include "motivic/errors.hpp"
#include "motivic/parse.hpp"
#include "motivic/yfy.hpp"
#include "random_instances.hpp"

using namespace motivic;

namespace {

/// 1/2 p^2 + 1/2 p(t^2) - (1 + t^{2m}) p over whatever ring p lives in.
MultiPoly lhs_by_hand(const MultiPoly& p, int m) {
  const auto& vars = p.variables();
  MultiPoly t = MultiPoly::variable(vars, "t");
  MultiPoly one = MultiPoly::constant(vars, 1);
  MultiPoly t2m = one;
  for (int i = 0; i < 2 * m; ++i) t2m = t2m * t;
  return p * p / 2 + align(substitute(p, {{"t", t * t}}), vars) / 2 - (one + t2m) * p;
}

std::vector<std::string> betti_ring(int m) {
  std::vector<std::string> vars{"t"};
  for (int i = 1; i < 2 * m; ++i) vars.push_back("b" + std::to_string(i));
  return vars;
}

/// p = 1 + b_1 t + ... + b_{2m-1} t^{2m-1} + t^{2m}; with `dual` the b_i for
/// i > m are replaced by b_{2m-i}.
MultiPoly symbolic_poincare(int m, bool dual) {
  auto vars = betti_ring(m);
  MultiPoly t = MultiPoly::variable(vars, "t");
  MultiPoly p = MultiPoly::constant(vars, 1), tp = MultiPoly::constant(vars, 1);
  for (int i = 1; i <= 2 * m; ++i) {
    tp = tp * t;
    if (i == 2 * m) {
      p += tp;
    } else {
      int j = dual && i > m ? 2 * m - i : i;
      p += MultiPoly::variable(vars, "b" + std::to_string(j)) * tp;
    }
  }
  return p;
}

MultiPoly kill(const MultiPoly& p, const std::vector<std::string>& names) {
  std::map<std::string, MultiPoly> zero;
  for (const auto& n : names) zero[n] = MultiPoly(p.variables());
  return align(substitute(p, zero), p.variables());
}

}  // namespace

TEST_CASE("solve_fano_poincare examples") {
  auto r = yfy::solve_fano_poincare(parse_uni("1+7t^2+t^4"), 2);
  CHECK(r.divisible_by_t4);
  REQUIRE(r.p_fano);
  CHECK(*r.p_fano == UniPoly(27));
  CHECK(r.dim_fano == 0);
  CHECK(r.b0_fano == Rational(27));
  CHECK(r.violations.empty());

  // P^4: b2 = 1, top coefficient 1/2 + 1/2
  auto p4 = yfy::solve_fano_poincare(parse_uni("1+t^2+t^4+t^6+t^8"), 4);
  CHECK(p4.lhs.coeff(12) == 1);
  REQUIRE(p4.dim_fano);
  CHECK(*p4.dim_fano == 4);

  auto odd = yfy::solve_fano_poincare(parse_uni("1+t+t^2+t^3+t^4"), 2);
  CHECK_FALSE(odd.p_fano);
  REQUIRE_FALSE(odd.violations.empty());
  CHECK(odd.violations.front().monomial == "t^2");
}

TEST_CASE("solve_fano_poincare preconditions") {
  CHECK_THROWS_AS(yfy::solve_fano_poincare(parse_uni("7t^2+t^4"), 2), MalformedPoincareError);
  CHECK_THROWS_AS(yfy::solve_fano_poincare(parse_uni("1+t^2"), 2), MalformedPoincareError);
  CHECK_THROWS_AS(yfy::solve_fano_poincare(parse_uni("1-t^2+t^4"), 2), MalformedPoincareError);
  CHECK_THROWS_AS(yfy::solve_fano_poincare(parse_uni("1"), 0), MalformedPoincareError);
}

TEST_CASE("relation_lhs matches the expansion") {
  for (int m = 1; m <= 5; ++m) {
    UniPoly p = parse_uni("1+3t^2+t^4+2t^5");
    MultiPoly by_hand = lhs_by_hand(to_multi(p, "t"), m);
    CHECK(to_multi(yfy::relation_lhs(p, m), "t") == by_hand);
  }
}

TEST_CASE("symbolic top coefficients") {
  for (int m = 4; m <= 6; ++m) {
    auto f = yfy::reldim_symbolic(m);
    CHECK(f.first_four_vanish);
    CHECK(f.top_matches);
    // recompute independently over Q[t, b1, ..., b_{2m-1}]
    MultiPoly lhs = lhs_by_hand(symbolic_poincare(m, false), m);
    lhs = kill(lhs, {"b1", "b" + std::to_string(2 * m - 1)});
    for (int k = 0; k < 4; ++k) CHECK(lhs.coefficient_in("t", 4 * m - k).is_zero());
    MultiPoly dual = kill(lhs_by_hand(symbolic_poincare(m, true), m), {"b1"});
    MultiPoly b2 = MultiPoly::variable(dual.variables(), "b2");
    MultiPoly top = dual.coefficient_in("t", 4 * m - 4);
    CHECK(align(top, dual.variables()) == b2 * b2 / 2 + b2 / 2);
  }
}

TEST_CASE("t^2 coefficient forces b1 = 0") {
  auto f = yfy::reldim_symbolic(3);
  auto vars = f.t2_coefficient.variables();
  MultiPoly b1 = MultiPoly::variable(vars, "b1");
  CHECK(f.t2_coefficient == b1 * b1 / 2 + b1 / 2);
}

TEST_CASE("palindromic p_Y: odd top coefficients vanish once b1 = 0") {
  for (int m = 2; m <= 6; ++m) {
    MultiPoly lhs = lhs_by_hand(symbolic_poincare(m, true), m);
    // with b1 still free the t^{4m-3} coefficient is b1 b2, which the t^2
    // step removes
    MultiPoly b1 = MultiPoly::variable(lhs.variables(), "b1");
    MultiPoly b2 = MultiPoly::variable(lhs.variables(), "b2");
    CHECK(lhs.coefficient_in("t", 4 * m - 1).is_zero());
    CHECK(lhs.coefficient_in("t", 4 * m - 3) == b1 * b2);
    MultiPoly forced = kill(lhs, {"b1"});
    CHECK(forced.coefficient_in("t", 4 * m - 1).is_zero());
    CHECK(forced.coefficient_in("t", 4 * m - 3).is_zero());
  }
}

TEST_CASE("b0(F) = 1/2 b2^2 + 1/2 b2 on random admissible p_Y") {
  std::mt19937 g(31);
  int found = 0;
  for (int attempt = 0; attempt < 5000 && found < 50; ++attempt) {
    int m = rnd::uniform(g, 3, 6);
    UniPoly p = rnd::palindromic_even_poincare(g, m, 4);
    auto r = yfy::solve_fano_poincare(p, m);
    if (!r.p_fano) continue;
    ++found;
    Rational b2 = p.coeff(2);
    CHECK(r.p_fano->coeff(0) == b2 * b2 / 2 + b2 / 2);
    // an empty F (p_F = 0) only happens for b2 = 0
    if (r.p_fano->is_zero()) {
      CHECK(b2 == 0);
      CHECK_FALSE(r.dim_fano);
      continue;
    }
    REQUIRE(r.dim_fano);
    const int top = *r.p_fano->degree();
    CHECK(*r.dim_fano * 2 == top);
  }
  CHECK(found == 50);
}

TEST_CASE("emptiness cascade") {
  for (int m = 1; m <= 6; ++m) {
    auto tr = yfy::noemp_contradiction(m);
    CHECK(tr.fully_determined);
    for (const auto& s : tr.steps) {
      if (s.unknown < m) {
        CHECK(s.has_claimed_shape);
        CHECK(s.value == Integer(0));
      }
    }
    CHECK(tr.top_only_pair_differs);
    // the cascade forces b_m = 1, and 1 + t^m + t^{2m} satisfies the
    // emptiness relation at the Poincare level
    REQUIRE(tr.forced_p);
    UniPoly expected = UniPoly(1) + UniPoly::monomial(m) + UniPoly::monomial(2 * m);
    CHECK(*tr.forced_p == expected);
    MultiPoly p = to_multi(expected, "t");
    CHECK(lhs_by_hand(p, m).is_zero());
    CHECK_FALSE(tr.contradiction);
  }
}

TEST_CASE("solve_fano_class examples") {
  auto r = yfy::solve_fano_class(parse_class("1+7L+L^2"), 2, MotivicClass());
  REQUIRE(r.fano);
  CHECK(*r.fano == parse_class("27"));
  CHECK(r.b0 == Rational(27));

  MotivicClass pq = (parse_class("1+L")) * quadric_class(4);
  auto q = yfy::solve_fano_class(pq, 4, MotivicClass());
  CHECK(q.numerator.coeff(2) == 3);
  REQUIRE(q.fano);
  CHECK(q.b0 == Rational(3));
  CHECK_FALSE(q.connected);

  CHECK_THROWS_AS(yfy::solve_fano_class(parse_class("1"), 0, MotivicClass()), DomainError);

  // numerator -L + L^2 is not divisible by L^2
  auto bad = yfy::solve_fano_class(parse_class("1+2L"), 1, MotivicClass());
  CHECK(bad.obstruction);
  CHECK_FALSE(bad.fano);
}

TEST_CASE("class level and Poincare level agree") {
  std::mt19937 g(32);
  int both = 0;
  for (int i = 0; i < 400; ++i) {
    int m = rnd::uniform(g, 2, 5);
    UniPoly pl;
    pl += UniPoly(1);
    pl += UniPoly::monomial(m);
    for (int k = 1; k < m; ++k) pl += UniPoly::monomial(k, rnd::uniform(g, 0, 4));
    MotivicClass y = MotivicClass::from_lefschetz_poly(pl);
    auto cls = yfy::solve_fano_class(y, m, MotivicClass());
    yfy::FanoReport rep;
    try {
      rep = yfy::solve_fano_poincare(poincare(y), m);
    } catch (const MalformedPoincareError&) {
      continue;
    }
    if (!cls.fano || !rep.p_fano) continue;
    ++both;
    CHECK(poincare(*cls.fano) == *rep.p_fano);
  }
  CHECK(both >= 100);
}
