#include <doctest.h>

#include "motivic/errors.hpp"
#include "motivic/measures.hpp"
#include "motivic/parse.hpp"
#include "random_instances.hpp"

using namespace motivic;

namespace {

MotivicClass C(const char* s, TablePtr t = nullptr) { return parse_class(s, t); }

/// Random class in L and [V] with degrees small enough to keep products cheap.
MotivicClass with_curve(std::mt19937& g, const TablePtr& t) {
  MotivicClass v = MotivicClass::generator("V", t);
  MotivicClass c(t);
  for (int k = 0; k <= 2; ++k) {
    c += MotivicClass::lefschetz(k, rnd::uniform(g, -3, 3));
    c += MotivicClass::lefschetz(k, rnd::uniform(g, -2, 2)) * v;
  }
  return c;
}

}  // namespace

TEST_CASE("measure examples") {
  TablePtr t = standard_odp_table();
  CHECK(poincare(C("1+7L+L^2")) == parse_uni("1+7t^2+t^4"));
  // 1 - uv + u^3v^3 - uv(1 - 4u - 4v + uv) for the displayed sign of [V]
  CHECK(hodge_deligne(C("1-L+L^3-L[V]", t)) == parse_bi("1 - uv + u^3v^3 - uv(1 - 4u - 4v + uv)"));
  CHECK(point_count(C("1+2L+3L^2+2L^3+L^4"), 2) == 49);
  CHECK(std::get<Rational>(measure(C("1+L+L^2"), MeasureKind::point_count(2))) == 7);
  CHECK_THROWS_AS(point_count(C("1+L"), 6), DomainError);
  CHECK_THROWS_AS(point_count(C("[V]", t), 2), MissingMeasureError);
}

TEST_CASE("sym2_measure examples") {
  CHECK(sym2_measure(parse_uni("1+7t^2+t^4")) == parse_uni("1+7t^2+29t^4+7t^6+t^8"));
  CHECK(sym2_measure(UniPoly(1)) == UniPoly(1));
  BiPoly hd = parse_bi("1-4u-4v+uv");
  CHECK(sym2_measure(hd) == (hd * hd + parse_bi("1-4u^2-4v^2+u^2v^2")) / 2);
}

TEST_CASE("mod_uv examples") {
  CHECK(mod_uv(parse_bi("1-4u-4v+uv")) == parse_bi("1-4u-4v"));
  BiPoly x = parse_bi("1-4u-4v-uv");
  CHECK(mod_uv(x * x) == parse_bi("1+16u^2+16v^2-8u-8v"));
  CHECK(mod_uv(parse_bi("u^2v^3")).is_zero());
}

TEST_CASE("exact_divide_measure examples") {
  CHECK(exact_divide_measure(parse_uni("27t^4"), 4) == UniPoly(27));
  CHECK(exact_divide_measure(parse_uni("t^4+t^6"), 4) == parse_uni("1+t^2"));
  try {
    exact_divide_measure(parse_uni("1+t^4"), 4);
    FAIL("expected a divisibility violation");
  } catch (const DivisibilityError& e) {
    CHECK(e.monomial() == "1");
  }
  CHECK(exact_divide_measure(parse_bi("u^2v^2 + u^3v^2"), 2, 2) == parse_bi("1+u"));
}

TEST_CASE("measures are ring homomorphisms") {
  std::mt19937 g(21);
  TablePtr t = standard_odp_table();
  for (int i = 0; i < 100; ++i) {
    MotivicClass a = with_curve(g, t), b = with_curve(g, t);
    CHECK(hodge_deligne(a * b) == hodge_deligne(a) * hodge_deligne(b));
    CHECK(hodge_deligne(a + b) == hodge_deligne(a) + hodge_deligne(b));
    CHECK(poincare(a * b) == poincare(a) * poincare(b));
    CHECK(poincare(a - b) == poincare(a) - poincare(b));
    MotivicClass x = rnd::pure_class(g, 3, -3, 3), y = rnd::pure_class(g, 3, -3, 3);
    CHECK(point_count_polynomial(x * y) == point_count_polynomial(x) * point_count_polynomial(y));
  }
}

TEST_CASE("Hodge-Deligne specializes to Poincare") {
  std::mt19937 g(22);
  TablePtr t = standard_odp_table();
  for (int i = 0; i < 100; ++i) {
    MotivicClass a = with_curve(g, t);
    CHECK(specialize_to_poincare(hodge_deligne(a)) == poincare(a));
  }
}

TEST_CASE("measure-level symmetric square equals measure of the zeta square") {
  std::mt19937 g(23);
  for (int i = 0; i < 100; ++i) {
    MotivicClass c = rnd::pure_class(g, 4, 0, 4);
    MotivicClass c2 = symmetric_power(c, 2);
    CHECK(sym2_measure(poincare(c)) == poincare(c2));
    CHECK(sym2_measure(hodge_deligne(c)) == hodge_deligne(c2));
  }
}

TEST_CASE("mod_uv is compatible with products") {
  std::mt19937 g(24);
  std::vector<std::string> uv{"u", "v"};
  for (int i = 0; i < 100; ++i) {
    BiPoly a = to_bi(rnd::poly(g, uv, 4, 5), "u", "v"), b = to_bi(rnd::poly(g, uv, 4, 5), "u", "v");
    CHECK(mod_uv(a * b) == mod_uv(mod_uv(a) * mod_uv(b)));
    CHECK(mod_uv(mod_uv(a)) == mod_uv(a));
  }
}
