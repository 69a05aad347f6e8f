#include <doctest.h>

#include "motivic/errors.hpp"
#include "motivic/measures.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace motivic;

namespace {

MotivicClass C(const char* s, TablePtr t = nullptr) { return parse_class(s, t); }

std::vector<long> cells_of(const MotivicClass& c) {
  UniPoly p = c.lefschetz_polynomial();
  std::vector<long> cells(p.degree().value_or(0) + 1, 0);
  for (const auto& [k, a] : p.terms()) cells[k] = to_integer(a).get_si();
  return cells;
}

}  // namespace

TEST_CASE("kapranov_zeta examples") {
  auto z = kapranov_zeta(C("1+7L+L^2"), 2);
  REQUIRE(z.size() == 2);
  CHECK(z[0] == C("1+7L+L^2"));
  CHECK(z[1] == C("1+7L+29L^2+7L^3+L^4"));
  CHECK(symmetric_power(C("7L"), 2) == C("28L^2"));
  CHECK(symmetric_power(C("1+L^2"), 2) == C("1+L^2+L^4"));
  for (const auto& c : kapranov_zeta(C("1"), 5)) CHECK(c == C("1"));
  CHECK_THROWS_AS(kapranov_zeta(C("1+[V]", standard_odp_table()), 2), UnsupportedError);
}

TEST_CASE("negative coefficients go through the formal zeta") {
  // zeta_{-1}(s) = 1 - s, so (-1)^(2) = 0 and (-L)^(2) = 0
  CHECK(symmetric_power(C("-1"), 1) == C("-1"));
  CHECK(symmetric_power(C("-1"), 2).is_zero());
  // (1 - L)^(2) from (1 - s)^{-1} (1 - L s) : coefficient of s^2 is 1 - L
  CHECK(symmetric_power(C("1-L"), 2) == C("1-L"));
}

TEST_CASE("hilb2_from_sym2 examples") {
  CHECK(hilb2_from_sym2(C("1+7L+L^2"), 2) == C("1+8L+36L^2+8L^3+L^4"));
  CHECK(hilb2_from_sym2(C("1"), 0) == C("1"));
  CHECK(hilb2_from_sym2(C("1+L"), 1) == C("1+L+L^2"));
  CHECK_THROWS_AS(hilb2_from_sym2(C("1"), -1), DomainError);
}

TEST_CASE("projective spaces and quadrics") {
  CHECK(projective_space_class(3) == C("1+L+L^2+L^3"));
  CHECK(projective_space_class(0) == C("1"));
  CHECK(projective_space_class(1) == C("1+L"));
  CHECK(quadric_class(4) == C("1+L+L^2+L^3"));
  CHECK(quadric_class(3) == C("1+2L+L^2"));
  CHECK(quadric_class(1) == C("2"));
}

TEST_CASE("nodal cubic threefold class") {
  TablePtr t = standard_odp_table();
  MotivicClass y = odp_cubic_threefold_class(t);
  CHECK(y == C("1-L+L^3+L[V]", t));
  CHECK(odp_cubic_threefold_blowup_expression(t) == y);
  // [V] -> 1 + 9L turns it into 1 - L + L^3 + L + 9L^2
  CHECK(y.substitute_generator("V", C("1+9L")) == C("1+9L^2+L^3"));
  CHECK_THROWS(odp_cubic_threefold_class(std::make_shared<const GeneratorTable>()));
}

TEST_CASE("parse_class rejects junk") {
  CHECK_THROWS_AS(parse_class("1+1/2L"), ParseError);
  CHECK_THROWS_AS(parse_class("[W]", standard_odp_table()), Error);
  CHECK_THROWS_AS(parse_class("L^"), ParseError);
}

TEST_CASE("zeta multiplicativity on random pure-L classes") {
  std::mt19937 g(11);
  for (int i = 0; i < 100; ++i) {
    MotivicClass a = rnd::pure_class(g, 2, -2, 3), b = rnd::pure_class(g, 2, -2, 3);
    int n = rnd::uniform(g, 1, 4);
    MotivicClass rhs;
    for (int j = 0; j <= n; ++j) rhs += symmetric_power(a, j) * symmetric_power(b, n - j);
    CHECK(symmetric_power(a + b, n) == rhs);
  }
}

TEST_CASE("powers of L") {
  for (int k = 0; k <= 4; ++k) {
    for (int n = 0; n <= 4; ++n) CHECK(symmetric_power(MotivicClass::lefschetz(k), n) == MotivicClass::lefschetz(k * n));
  }
}

TEST_CASE("zeta substitution law (L c)^(n) = L^n c^(n)") {
  std::mt19937 g(12);
  for (int i = 0; i < 100; ++i) {
    MotivicClass c = rnd::pure_class(g, 3, -2, 4);
    int n = rnd::uniform(g, 0, 4);
    CHECK(symmetric_power(MotivicClass::lefschetz() * c, n) == MotivicClass::lefschetz(n) * symmetric_power(c, n));
  }
}

TEST_CASE("point counts of symmetric squares against the weighted multiset count") {
  std::mt19937 g(13);
  for (int i = 0; i < 100; ++i) {
    MotivicClass c = rnd::pure_class(g, 3, 0, 3);
    auto cells = cells_of(c);
    for (long q : {2L, 3L, 4L}) {
      CHECK(point_count(symmetric_power(c, 2), q) == oracle::cell_multiset_count(cells, 2, q));
    }
  }
}

TEST_CASE("zeta and convolution agree for non-negative classes") {
  std::mt19937 g(14);
  for (int i = 0; i < 100; ++i) {
    MotivicClass c = rnd::pure_class(g, 3, 0, 3);
    int n = rnd::uniform(g, 1, 4);
    CHECK(symmetric_power(c, n) == symmetric_power_by_convolution(c, n));
  }
}
