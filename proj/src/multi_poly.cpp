#include "motivic/multi_poly.hpp"

#include <algorithm>
#include <numeric>

namespace motivic {

Exponents operator+(const Exponents& a, const Exponents& b) {
  if (a.powers.size() != b.powers.size()) throw AlignmentError("exponent vectors of different length");
  Exponents r = a;
  for (std::size_t i = 0; i < r.powers.size(); ++i) r.powers[i] += b.powers[i];
  return r;
}

int Exponents::total() const { return std::accumulate(powers.begin(), powers.end(), 0); }

bool Exponents::divides(const Exponents& b) const {
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] > b.powers[i]) return false;
  }
  return true;
}

Exponents Exponents::operator-(const Exponents& b) const {
  Exponents r = *this;
  for (std::size_t i = 0; i < r.powers.size(); ++i) r.powers[i] -= b.powers[i];
  return r;
}

Exponents Exponents::lcm(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  for (std::size_t i = 0; i < r.powers.size(); ++i) r.powers[i] = std::max(a.powers[i], b.powers[i]);
  return r;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw AlignmentError("duplicate variable '" + vars_[i] + "'");
    }
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(std::vector<int>(p.arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly p(std::move(variables));
  std::vector<int> e(p.arity(), 0);
  e[p.require_index(name)] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, std::vector<int> powers,
                              const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(std::move(powers), c);
  return p;
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t MultiPoly::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw AlignmentError("variable '" + std::string(name) + "' not in ring");
  return *i;
}

MultiPoly& MultiPoly::add_term(std::vector<int> powers, const Rational& c) {
  if (powers.size() != vars_.size()) throw AlignmentError("exponent vector length does not match variables");
  for (int e : powers) {
    if (e < 0) throw DomainError("negative exponent in MultiPoly");
  }
  return SparsePoly::add_term(Exponents{std::move(powers)}, c);
}

Rational MultiPoly::coeff(const std::vector<int>& powers) const {
  if (powers.size() != vars_.size()) throw AlignmentError("exponent vector length does not match variables");
  return SparsePoly::coeff(Exponents{powers});
}

std::optional<int> MultiPoly::degree_in(std::string_view name) const {
  if (terms_.empty()) return std::nullopt;
  std::size_t i = require_index(name);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.powers[i]);
  return d;
}

std::optional<int> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rational MultiPoly::constant_term() const { return coeff(std::vector<int>(vars_.size(), 0)); }

MultiPoly MultiPoly::coefficient_in(std::string_view name, int k) const {
  std::size_t i = require_index(name);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.powers[i] != k) continue;
    Exponents f = e;
    f.powers[i] = 0;
    r.SparsePoly::add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::truncated_in(std::string_view name, int max_power) const {
  std::size_t i = require_index(name);
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.powers[i] <= max_power) r.SparsePoly::add_term(e, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  std::vector<std::pair<std::vector<int>, Rational>> ts;
  for (const auto& [e, c] : terms_) ts.push_back({e.powers, c});
  return detail::format_terms(std::move(ts), vars_);
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw DomainError("unknown arithmetic op");
}

std::vector<std::string> union_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> r = a;
  for (const auto& v : b) {
    if (std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  }
  return r;
}

MultiPoly align(const MultiPoly& p, const std::vector<std::string>& variables) {
  MultiPoly r(variables);
  std::vector<std::optional<std::size_t>> target(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) target[i] = r.index_of(p.variables()[i]);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> f(variables.size(), 0);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (e.powers[i] == 0) continue;
      if (!target[i]) {
        throw AlignmentError("cannot align: variable '" + p.variables()[i] + "' missing from target ring");
      }
      f[*target[i]] = e.powers[i];
    }
    r.add_term(std::move(f), c);
  }
  return r;
}

bool equal_aligned(const MultiPoly& a, const MultiPoly& b) {
  auto vars = union_variables(a.variables(), b.variables());
  return align(a, vars) == align(b, vars);
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignments) {
  std::vector<std::string> vars;
  for (const auto& v : p.variables()) {
    if (!assignments.count(v)) vars.push_back(v);
  }
  for (const auto& v : p.variables()) {
    auto it = assignments.find(v);
    if (it != assignments.end()) vars = union_variables(vars, it->second.variables());
  }

  // Image of each variable of p, aligned to the result ring, with a cache of powers.
  std::vector<std::vector<MultiPoly>> powers(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    auto it = assignments.find(p.variables()[i]);
    MultiPoly image = it == assignments.end() ? MultiPoly::variable(vars, p.variables()[i])
                                              : align(it->second, vars);
    powers[i].push_back(MultiPoly::constant(vars, 1));
    powers[i].push_back(std::move(image));
  }
  auto power_of = [&](std::size_t i, int e) -> const MultiPoly& {
    auto& cache = powers[i];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  MultiPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(vars, c);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (e.powers[i] > 0) term = term * power_of(i, e.powers[i]);
    }
    r += term;
  }
  return r;
}

Rational coeff_of(const MultiPoly& p, const std::vector<int>& powers) { return p.coeff(powers); }

MultiPoly truncated_product(const MultiPoly& a, const MultiPoly& b, std::string_view var, int order) {
  if (!a.compatible(b)) throw AlignmentError("truncated_product: mismatched variables");
  auto idx = a.index_of(var);
  if (!idx) throw AlignmentError("truncation variable '" + std::string(var) + "' not in ring");
  MultiPoly r = a.zero_like();
  for (const auto& [ea, ca] : a.terms()) {
    if (ea.powers[*idx] > order) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (ea.powers[*idx] + eb.powers[*idx] > order) continue;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

Rational binomial(long e, int k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= Rational(Integer(e - i));
    r /= Rational(Integer(i + 1));
  }
  return r;
}

MultiPoly series_binomial(const MultiPoly& base, long exponent, int order, std::string_view var) {
  if (order < 0) throw DomainError("series order must be non-negative");
  if (!base.index_of(var)) throw AlignmentError("truncation variable '" + std::string(var) + "' not in ring");
  MultiPoly b = base.truncated_in(var, order);
  if (exponent >= 0) {
    MultiPoly r = b.one_like();
    for (long i = 0; i < exponent; ++i) r = truncated_product(r, b, var, order);
    return r;
  }
  MultiPoly c0 = b.coefficient_in(var, 0);
  if (c0.is_zero()) throw NonInvertibleError("series_binomial: zero constant term in " + std::string(var));
  if (!c0.is_constant()) {
    throw NonInvertibleError("series_binomial: constant term in " + std::string(var) +
                             " is not a unit of Q: " + c0.to_string());
  }
  Rational lead = c0.constant_term();
  // b = lead*(1 + h) with h of var-order >= 1, so h^k vanishes past k = order.
  MultiPoly h = b / lead - b.one_like();
  MultiPoly r = b.one_like();
  MultiPoly hk = b.one_like();
  for (int k = 1; k <= order; ++k) {
    hk = truncated_product(hk, h, var, order);
    if (hk.is_zero()) break;
    r += hk * binomial(exponent, k);
  }
  Rational scale = 1;
  for (long i = 0; i < -exponent; ++i) scale /= lead;
  return r * scale;
}

MultiPoly to_multi(const UniPoly& p, const std::string& var) {
  MultiPoly r({var});
  for (const auto& [e, c] : p.terms()) r.add_term(std::vector<int>{e}, c);
  return r;
}

MultiPoly to_multi(const BiPoly& p, const std::string& u, const std::string& v) {
  MultiPoly r({u, v});
  for (const auto& [e, c] : p.terms()) r.add_term(std::vector<int>{e.u, e.v}, c);
  return r;
}

UniPoly to_uni(const MultiPoly& p, std::string_view var) {
  MultiPoly a = align(p, {std::string(var)});
  UniPoly r;
  for (const auto& [e, c] : a.terms()) r.add_term(e.powers[0], c);
  return r;
}

BiPoly to_bi(const MultiPoly& p, std::string_view u, std::string_view v) {
  MultiPoly a = align(p, {std::string(u), std::string(v)});
  BiPoly r;
  for (const auto& [e, c] : a.terms()) r.add_term({e.powers[0], e.powers[1]}, c);
  return r;
}

}  // namespace motivic
