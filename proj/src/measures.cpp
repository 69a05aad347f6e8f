#include "motivic/measures.hpp"

namespace motivic {

MeasureKind MeasureKind::point_count(const Integer& q) {
  if (!is_prime_power(q)) throw DomainError("point count needs a prime power q >= 2, got " + q.get_str());
  return {Tag::point_count, q};
}

bool is_prime_power(const Integer& q) {
  if (q < 2) return false;
  Integer n = q;
  Integer p = 2;
  // smallest prime factor, then check n is a power of it
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

namespace {

const GeneratorEntry& entry_for(const MotivicClass& c, const std::string& g, const char* measure_name) {
  const GeneratorEntry* e = c.table() ? c.table()->find(g) : nullptr;
  if (!e) {
    throw MissingMeasureError(g, std::string("no ") + measure_name + " declared for generator [" + g + "]");
  }
  return *e;
}

/// Generic ring map: L -> lefschetz_image, each generator -> image(entry).
template <class P, class Image>
P apply_measure(const MotivicClass& c, const P& lefschetz_image, Image&& image) {
  P out;
  for (const auto& [m, k] : c.terms()) {
    P term = pow(lefschetz_image, static_cast<unsigned>(m.lefschetz));
    for (const auto& [g, mult] : m.generators) term = term * pow(image(g), static_cast<unsigned>(mult));
    out += term * Rational(k);
  }
  return out;
}

}  // namespace

UniPoly poincare(const MotivicClass& c) {
  return apply_measure(c, UniPoly::monomial(2), [&](const std::string& g) {
    return entry_for(c, g, "Poincare polynomial").poincare;
  });
}

BiPoly hodge_deligne(const MotivicClass& c) {
  return apply_measure(c, BiPoly::monomial(1, 1), [&](const std::string& g) {
    return entry_for(c, g, "Hodge-Deligne polynomial").hodge_deligne;
  });
}

UniPoly point_count_polynomial(const MotivicClass& c) {
  return apply_measure(c, UniPoly::monomial(1), [&](const std::string& g) {
    const auto& e = entry_for(c, g, "point count");
    if (!e.effective || !e.point_count) {
      throw MissingMeasureError(g, "generator [" + g + "] is not effective; point counts unavailable");
    }
    return *e.point_count;
  });
}

Integer point_count(const MotivicClass& c, const Integer& q) {
  MeasureKind::point_count(q);
  return to_integer(point_count_polynomial(c).evaluate(Rational(q)));
}

MeasureValue measure(const MotivicClass& c, const MeasureKind& kind) {
  switch (kind.tag) {
    case MeasureKind::Tag::poincare:
      return poincare(c);
    case MeasureKind::Tag::hodge_deligne:
      return hodge_deligne(c);
    case MeasureKind::Tag::point_count:
      return Rational(point_count(c, kind.q));
  }
  throw DomainError("unknown measure");
}

UniPoly sym2_measure(const UniPoly& p) { return (p * p + p.compose_power(2)) / 2; }

BiPoly sym2_measure(const BiPoly& p) { return (p * p + p.square_variables()) / 2; }

BiPoly mod_uv(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.u == 0 || e.v == 0) r.add_term(e, c);
  }
  return r;
}

MultiPoly mod_uv(const MultiPoly& p, std::string_view u, std::string_view v) {
  auto iu = p.index_of(u), iv = p.index_of(v);
  if (!iu || !iv) return p;  // a ring without u or v has no uv-multiples
  MultiPoly r = p.zero_like();
  for (const auto& [e, c] : p.terms()) {
    if (e.powers[*iu] == 0 || e.powers[*iv] == 0) r.add_term(e, c);
  }
  return r;
}

UniPoly exact_divide_measure(const UniPoly& p, int t_power) {
  if (t_power < 0) throw DomainError("negative divisor exponent");
  UniPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e < t_power) {
      std::string mono = UniPoly::monomial(e, c).to_string();
      throw DivisibilityError(mono, "not divisible by " + UniPoly::monomial(t_power).to_string() +
                                        ": monomial " + mono);
    }
    r.add_term(e - t_power, c);
  }
  return r;
}

BiPoly exact_divide_measure(const BiPoly& p, int u_power, int v_power) {
  if (u_power < 0 || v_power < 0) throw DomainError("negative divisor exponent");
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.u < u_power || e.v < v_power) {
      std::string mono = BiPoly::monomial(e.u, e.v, c).to_string();
      throw DivisibilityError(mono, "not divisible by " + BiPoly::monomial(u_power, v_power).to_string() +
                                        ": monomial " + mono);
    }
    r.add_term({e.u - u_power, e.v - v_power}, c);
  }
  return r;
}

UniPoly specialize_to_poincare(const BiPoly& hd) { return hd.specialize_diagonal(-1); }

}  // namespace motivic
