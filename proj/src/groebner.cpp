#include "motivic/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace motivic::ideal {

std::string to_string(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::grlex: return "grlex";
    case MonomialOrder::grevlex: return "grevlex";
  }
  return "lex";
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "lex") return MonomialOrder::lex;
  if (s == "grlex") return MonomialOrder::grlex;
  if (s == "grevlex") return MonomialOrder::grevlex;
  throw ParseError("unknown monomial order '" + s + "' (lex, grlex, grevlex)");
}

bool order_less(const Exponents& a, const Exponents& b, MonomialOrder o) {
  const auto& x = a.powers;
  const auto& y = b.powers;
  if (o != MonomialOrder::lex) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
  }
  if (o == MonomialOrder::grevlex) {
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return x[i] > y[i];
    }
    return false;
  }
  return x < y;
}

Exponents leading_exponent(const MultiPoly& p, MonomialOrder o) {
  if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
  auto it = p.terms().begin();
  const Exponents* best = &it->first;
  for (++it; it != p.terms().end(); ++it) {
    if (order_less(*best, it->first, o)) best = &it->first;
  }
  return *best;
}

Rational leading_coefficient(const MultiPoly& p, MonomialOrder o) { return p.coeff(leading_exponent(p, o)); }

namespace {

MultiPoly times_term(const MultiPoly& p, const Exponents& e, const Rational& c) {
  MultiPoly r = p.zero_like();
  for (const auto& [f, k] : p.terms()) r.add_term(f + e, k * c);
  return r;
}

MultiPoly monic(const MultiPoly& p, MonomialOrder o) { return p / leading_coefficient(p, o); }

}  // namespace

Ideal::Ideal(std::vector<MultiPoly> gens, MonomialOrder ord, std::vector<std::string> vars)
    : variables(std::move(vars)), order(ord) {
  if (variables.empty()) {
    for (const auto& g : gens) variables = union_variables(variables, g.variables());
  }
  for (auto& g : gens) {
    if (g.is_zero()) throw DomainError("ideal generators must be nonzero");
    generators.push_back(align(g, variables));
  }
}

Division divide(const MultiPoly& p, const std::vector<MultiPoly>& divisors, MonomialOrder o) {
  Division d;
  d.remainder = p.zero_like();
  std::vector<Exponents> lead;
  std::vector<Rational> lc;
  for (const auto& g : divisors) {
    if (!g.compatible(p)) throw AlignmentError("divide: divisor in a different ring");
    lead.push_back(leading_exponent(g, o));
    lc.push_back(g.coeff(lead.back()));
    d.quotients.push_back(p.zero_like());
  }
  MultiPoly rest = p;
  while (!rest.is_zero()) {
    Exponents e = leading_exponent(rest, o);
    Rational c = rest.coeff(e);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!lead[i].divides(e)) continue;
      Exponents shift = e - lead[i];
      Rational f = c / lc[i];
      d.quotients[i].add_term(shift, f);
      rest -= times_term(divisors[i], shift, f);
      reduced = true;
      break;
    }
    if (!reduced) {
      d.remainder.add_term(e, c);
      rest.add_term(e, -c);
    }
  }
  return d;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder o) {
  Exponents lf = leading_exponent(f, o), lg = leading_exponent(g, o);
  Exponents l = Exponents::lcm(lf, lg);
  return times_term(f, l - lf, 1 / f.coeff(lf)) - times_term(g, l - lg, 1 / g.coeff(lg));
}

namespace {

/// Minimal, monic, inter-reduced and sorted.
std::vector<MultiPoly> reduce_basis(std::vector<MultiPoly> g, MonomialOrder o) {
  // drop elements whose leading monomial is divisible by another's
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Exponents li = leading_exponent(g[i], o);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      Exponents lj = leading_exponent(g[j], o);
      // equal leading monomials: keep the first one only
      redundant = lj.divides(li) && (lj != li || j < i);
    }
    if (!redundant) minimal.push_back(monic(g[i], o));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    MultiPoly lead_term = minimal[i].zero_like();
    Exponents li = leading_exponent(minimal[i], o);
    lead_term.add_term(li, 1);
    MultiPoly tail = minimal[i] - lead_term;
    minimal[i] = lead_term + divide(tail, others, o).remainder;
  }
  std::sort(minimal.begin(), minimal.end(), [o](const MultiPoly& a, const MultiPoly& b) {
    return order_less(leading_exponent(b, o), leading_exponent(a, o), o);
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, std::size_t max_variables) {
  if (ideal.variables.size() > max_variables) {
    throw ScaleGuardError("buchberger: " + std::to_string(ideal.variables.size()) +
                          " variables exceeds the limit of " + std::to_string(max_variables));
  }
  GroebnerBasis gb;
  gb.variables = ideal.variables;
  gb.order = ideal.order;
  gb.reduced = true;
  const MonomialOrder o = ideal.order;

  std::vector<MultiPoly> g;
  for (const auto& f : ideal.generators) g.push_back(align(f, ideal.variables));
  if (g.empty()) return gb;

  struct Pair {
    std::size_t i, j;
    Exponents lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    Exponents lj = leading_exponent(g[j], o);
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, Exponents::lcm(leading_exponent(g[i], o), lj)});
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

  const std::size_t pair_limit = 200000;
  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > pair_limit) throw ScaleGuardError("buchberger: pair limit exceeded");
    // normal strategy: smallest lcm, ties by (j, i)
    auto best = std::min_element(pairs.begin(), pairs.end(), [o](const Pair& a, const Pair& b) {
      if (a.lcm != b.lcm) return order_less(a.lcm, b.lcm, o);
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *best;
    pairs.erase(best);
    Exponents li = leading_exponent(g[pr.i], o), lj = leading_exponent(g[pr.j], o);
    if (pr.lcm == li + lj) continue;  // coprime leading monomials
    MultiPoly r = divide(s_polynomial(g[pr.i], g[pr.j], o), g, o).remainder;
    if (r.is_zero()) continue;
    g.push_back(monic(r, o));
    add_pairs_for(g.size() - 1);
  }
  gb.basis = reduce_basis(std::move(g), o);
  return gb;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
      if (!divide(s_polynomial(gb.basis[i], gb.basis[j], gb.order), gb.basis, gb.order).remainder.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

Membership ideal_member(const MultiPoly& p, const GroebnerBasis& gb) {
  MultiPoly q = align(p, gb.variables);
  Membership m;
  m.remainder = divide(q, gb.basis, gb.order).remainder;
  m.member = m.remainder.is_zero();
  return m;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.order != b.order) throw DomainError("ideal_equal: bases use different orders");
  if (a.variables != b.variables) throw AlignmentError("ideal_equal: bases live in different rings");
  if (!a.reduced || !b.reduced) throw DomainError("ideal_equal: needs reduced bases");
  return a.basis == b.basis;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  auto vars = union_variables(a.variables, b.variables);
  Ideal aa(a.generators, a.order, vars), bb(b.generators, a.order, vars);
  return ideal_equal(buchberger(aa), buchberger(bb));
}

bool ideal_equal_by_membership(const Ideal& a, const Ideal& b) {
  auto vars = union_variables(a.variables, b.variables);
  GroebnerBasis ga = buchberger(Ideal(a.generators, a.order, vars));
  GroebnerBasis gb = buchberger(Ideal(b.generators, a.order, vars));
  for (const auto& f : b.generators) {
    if (!ideal_member(f, ga).member) return false;
  }
  for (const auto& f : a.generators) {
    if (!ideal_member(f, gb).member) return false;
  }
  return true;
}

GroebnerBasis kernel_of_map(const std::vector<MapTarget>& targets, const std::string& x) {
  std::vector<std::string> vars;
  for (const auto& t : targets) {
    if (t.variable == x) throw DomainError("kernel_of_map: target variable clashes with '" + x + "'");
    vars.push_back(t.variable);
  }
  vars.push_back(x);
  std::vector<MultiPoly> gens;
  for (const auto& t : targets) {
    gens.push_back(MultiPoly::variable(vars, t.variable) - align(to_multi(t.image, x), vars));
  }
  return buchberger(Ideal(std::move(gens), MonomialOrder::lex, vars));
}

}  // namespace motivic::ideal
