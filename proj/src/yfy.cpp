#include "motivic/yfy.hpp"

#include <algorithm>

namespace motivic::yfy {

UniPoly relation_lhs(const UniPoly& p_y, int m) {
  UniPoly one_plus = UniPoly(1) + UniPoly::monomial(2 * m);
  return sym2_measure(p_y) - one_plus * p_y;
}

FanoReport solve_fano_poincare(const UniPoly& p_y, int m) {
  if (m < 1) throw MalformedPoincareError("dimension m must be >= 1");
  if (p_y.coeff(0) != 1) {
    throw MalformedPoincareError("Poincare polynomial must have constant term 1 (connected), got " + p_y.to_string());
  }
  if (p_y.degree() != 2 * m || p_y.coeff(2 * m) != 1) {
    throw MalformedPoincareError("Poincare polynomial of an m-dimensional connected variety must have leading term t^" +
                                 std::to_string(2 * m) + ", got " + p_y.to_string());
  }
  for (const auto& [e, c] : p_y.terms()) {
    if (c < 0 || !is_integer(c)) {
      throw MalformedPoincareError("Betti numbers must be non-negative integers; coefficient of t^" +
                                   std::to_string(e) + " is " + to_string(c));
    }
  }

  FanoReport r;
  r.lhs = relation_lhs(p_y, m);
  r.divisible_by_t4 = true;
  for (const auto& [e, c] : r.lhs.terms()) {
    if (e >= 4) break;
    r.divisible_by_t4 = false;
    r.violations.push_back({UniPoly::monomial(e).to_string(),
                            "coefficient " + to_string(c) + " of t^" + std::to_string(e) +
                                " is nonzero but the relation is a multiple of t^4"});
  }
  if (!r.divisible_by_t4) return r;

  UniPoly q = exact_divide_measure(r.lhs, 4);
  bool betti_ok = true;
  for (const auto& [e, c] : q.terms()) {
    if (c < 0 || !is_integer(c)) {
      betti_ok = false;
      r.violations.push_back({UniPoly::monomial(e).to_string(),
                              "Betti number b_" + std::to_string(e) + "(F(Y)) = " + to_string(c) +
                                  " is not a non-negative integer"});
    }
  }
  if (auto d = q.degree(); d && *d % 2 != 0) {
    betti_ok = false;
    r.violations.push_back({UniPoly::monomial(*d).to_string(), "top degree of p_F is odd"});
  }
  if (!betti_ok) return r;

  r.p_fano = q;
  r.b0_fano = q.coeff(0);
  if (auto d = q.degree()) r.dim_fano = *d / 2;
  return r;
}

namespace {

std::string bname(int i) { return "b" + std::to_string(i); }

/// Ring [t, b1, ..., b_{2m-1}] and the generic p = 1 + sum b_i t^i + t^{2m}.
struct GenericRing {
  std::vector<std::string> vars;
  MultiPoly p;
  MultiPoly lhs;
};

GenericRing generic_relation(int m) {
  GenericRing g;
  g.vars.push_back("t");
  for (int i = 1; i < 2 * m; ++i) g.vars.push_back(bname(i));
  const auto& v = g.vars;
  MultiPoly t = MultiPoly::variable(v, "t");
  g.p = MultiPoly::constant(v, 1) + pow(t, 2 * m);
  for (int i = 1; i < 2 * m; ++i) g.p += MultiPoly::variable(v, bname(i)) * pow(t, i);
  MultiPoly p_sq_var = substitute(g.p, {{"t", pow(t, 2)}});
  p_sq_var = align(p_sq_var, v);
  MultiPoly half = MultiPoly::constant(v, make_rational(1, 2));
  g.lhs = half * (g.p * g.p + p_sq_var) - (MultiPoly::constant(v, 1) + pow(t, 2 * m)) * g.p;
  return g;
}

MultiPoly set_values(const MultiPoly& p, const std::map<std::string, Rational>& values) {
  std::map<std::string, MultiPoly> a;
  for (const auto& [name, val] : values) a.emplace(name, MultiPoly::constant({}, val));
  return align(substitute(p, a), p.variables());
}

}  // namespace

RelDimFacts reldim_symbolic(int m) {
  if (m < 1) throw DomainError("reldim_symbolic needs m >= 1");
  RelDimFacts f;
  f.m = m;
  GenericRing g = generic_relation(m);
  f.betti_variables.assign(g.vars.begin() + 1, g.vars.end());

  std::map<std::string, Rational> zero_ends{{bname(1), 0}, {bname(2 * m - 1), 0}};
  for (int i = 0; i <= 4; ++i) {
    MultiPoly c = g.lhs.coefficient_in("t", 4 * m - i);
    f.raw_top_coefficients.push_back(c);
    f.top_coefficients.push_back(set_values(c, zero_ends));
  }
  f.first_four_vanish = std::all_of(f.top_coefficients.begin(), f.top_coefficients.begin() + 4,
                                    [](const MultiPoly& c) { return c.is_zero(); });

  std::map<std::string, MultiPoly> dual;
  for (int j = m + 1; j < 2 * m; ++j) dual.emplace(bname(j), MultiPoly::variable(g.vars, bname(2 * m - j)));
  f.top_coefficient_dual = align(substitute(f.top_coefficients[4], dual), g.vars);

  MultiPoly b2 = m >= 2 ? MultiPoly::variable(g.vars, bname(2)) : MultiPoly::constant(g.vars, 1);
  f.expected_top = (b2 * b2 + b2) * make_rational(1, 2);
  f.top_matches = f.top_coefficient_dual == f.expected_top;
  f.t2_coefficient = g.lhs.coefficient_in("t", 2);
  return f;
}

namespace {

/// Non-negative integer roots of a univariate rational polynomial.
std::vector<Integer> nonnegative_integer_roots(const UniPoly& p) {
  std::vector<Integer> roots;
  auto d = p.degree();
  if (!d) return roots;  // zero polynomial: caller never asks
  if (*d == 0) return roots;
  Rational lead = p.coeff(*d);
  Rational bound = 1;
  for (const auto& [e, c] : p.terms()) {
    Rational r = abs(c / lead) + 1;
    if (r > bound) bound = r;
  }
  Integer limit = bound.get_num() / bound.get_den() + 1;
  for (Integer x = 0; x <= limit; ++x) {
    if (p.evaluate(Rational(x)) == 0) roots.push_back(x);
  }
  return roots;
}

/// If c uses exactly one b-variable (index >= 1 in the ring), return it.
std::optional<std::size_t> sole_unknown(const MultiPoly& c) {
  std::optional<std::size_t> found;
  for (const auto& [e, k] : c.terms()) {
    for (std::size_t i = 1; i < e.powers.size(); ++i) {
      if (e.powers[i] == 0) continue;
      if (found && *found != i) return std::nullopt;
      found = i;
    }
  }
  return found;
}

}  // namespace

NoEmptyTrace noemp_contradiction(int m) {
  if (m < 1) throw DomainError("noemp_contradiction needs m >= 1");
  NoEmptyTrace tr;
  tr.m = m;
  GenericRing g = generic_relation(m);
  std::map<std::string, Rational> solved;
  const int top = 4 * m;

  for (;;) {
    MultiPoly current = set_values(g.lhs, solved);
    bool progressed = false;
    for (int j = 0; j <= top && !progressed; ++j) {
      MultiPoly c = current.coefficient_in("t", j);
      if (c.is_zero()) continue;
      if (c.is_constant()) {
        tr.contradiction = true;
        tr.summary = "coefficient of t^" + std::to_string(j) + " reduces to the nonzero constant " +
                     to_string(c.constant_term());
        return tr;
      }
      auto idx = sole_unknown(c);
      if (!idx) continue;
      const std::string& name = g.vars[*idx];
      UniPoly eq = to_uni(c, name);
      CascadeStep step;
      step.degree = j;
      step.unknown = std::stoi(name.substr(1));
      step.equation = eq.to_string(name);
      step.has_claimed_shape = eq * Rational(2) == UniPoly::dense({0, 1, 1});
      step.roots = nonnegative_integer_roots(eq);
      if (step.roots.size() == 1) step.value = step.roots.front();
      tr.steps.push_back(step);
      if (step.roots.empty()) {
        tr.contradiction = true;
        tr.summary = "equation " + step.equation + " = 0 at t^" + std::to_string(j) +
                     " has no non-negative integer solution";
        return tr;
      }
      if (step.roots.size() > 1) {
        tr.summary = "equation " + step.equation + " = 0 at t^" + std::to_string(j) +
                     " has several non-negative roots; cascade stops";
        return tr;
      }
      solved[name] = Rational(*step.value);
      progressed = true;
    }
    if (!progressed) break;
  }

  tr.fully_determined = solved.size() == g.vars.size() - 1;
  UniPoly t2m = UniPoly::monomial(2 * m);
  tr.top_only_pair = {sym2_measure(t2m) * Rational(2), (UniPoly(1) + t2m) * t2m * Rational(2)};
  tr.top_only_pair_differs = tr.top_only_pair.first != tr.top_only_pair.second;
  if (!tr.fully_determined) {
    tr.summary = "cascade could not isolate a single unknown; " + std::to_string(solved.size()) +
                 " of " + std::to_string(2 * m - 1) + " Betti numbers determined";
    return tr;
  }
  UniPoly forced = to_uni(align(set_values(g.p, solved), {"t"}), "t");
  tr.forced_p = forced;
  tr.residual = relation_lhs(forced, m);
  tr.all_betti_zero = std::all_of(solved.begin(), solved.end(), [](const auto& kv) { return kv.second == 0; });
  tr.contradiction = !tr.residual->is_zero();
  tr.summary = "forced p_Y = " + forced.to_string() +
               (tr.contradiction ? "; the relation fails there, so F(Y) cannot be empty"
                                 : "; it satisfies [Y^(2)] = (1 + L^m)[Y] at the Poincare level, no contradiction");
  return tr;
}

FanoClassResult solve_fano_class(const MotivicClass& y, const MotivicClass& y_sym2, int m,
                                 const MotivicClass& sing) {
  if (m < 1) throw DomainError("solve_fano_class needs m >= 1");
  FanoClassResult r;
  MotivicClass lm = MotivicClass::lefschetz(m);
  r.numerator = y_sym2 - (MotivicClass::integer(1) + lm) * y + lm * sing;
  try {
    r.fano = r.numerator.divide_by_lefschetz(2);
  } catch (const DivisibilityError& e) {
    r.obstruction = e.what();
    r.obstruction_monomial = e.monomial();
    return r;
  }
  try {
    r.b0 = poincare(*r.fano).coeff(0);
  } catch (const MissingMeasureError&) {
    // b0 unknown without generator measures
  }
  r.connected = r.b0 && *r.b0 == 1;
  return r;
}

FanoClassResult solve_fano_class(const MotivicClass& y, int m, const MotivicClass& sing) {
  if (m < 1) throw DomainError("solve_fano_class needs m >= 1");
  return solve_fano_class(y, symmetric_power(y, 2), m, sing);
}

}  // namespace motivic::yfy
