#include "motivic/sparse_poly.hpp"

#include <algorithm>
#include <numeric>

namespace motivic {

namespace detail {

namespace {

int total(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string monomial_text(const std::vector<int>& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string format_terms(std::vector<std::pair<std::vector<int>, Rational>> terms,
                         const std::vector<std::string>& variables) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = total(a.first), tb = total(b.first);
    if (ta != tb) return ta < tb;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(e, variables);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + '*' + mono;
    }
  }
  return out;
}

}  // namespace detail

UniPoly UniPoly::monomial(int exponent, const Rational& c) {
  if (exponent < 0) throw DomainError("negative exponent in UniPoly");
  UniPoly p;
  p.add_term(exponent, c);
  return p;
}

UniPoly UniPoly::dense(const std::vector<Rational>& coefficients) {
  UniPoly p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) p.add_term(static_cast<int>(i), coefficients[i]);
  return p;
}

std::optional<int> UniPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> UniPoly::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational UniPoly::evaluate(const Rational& x) const {
  // Horner over the sparse exponents, descending.
  Rational acc = 0;
  int current = degree().value_or(0);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->first; --current) acc *= x;
    acc += it->second;
  }
  for (; current > 0; --current) acc *= x;
  return acc;
}

UniPoly UniPoly::compose_power(int k) const {
  if (k < 0) throw DomainError("compose_power needs k >= 0");
  UniPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

UniPoly UniPoly::scale_variable(const Rational& s) const {
  UniPoly r;
  for (const auto& [e, c] : terms_) {
    Rational f = 1;
    for (int i = 0; i < e; ++i) f *= s;
    r.add_term(e, c * f);
  }
  return r;
}

UniPoly UniPoly::truncate(int max_degree) const {
  UniPoly r;
  for (const auto& [e, c] : terms_) {
    if (e > max_degree) break;
    r.add_term(e, c);
  }
  return r;
}

bool UniPoly::has_nonnegative_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second > 0 && is_integer(t.second); });
}

std::string UniPoly::to_string(std::string_view var) const {
  std::vector<std::pair<std::vector<int>, Rational>> ts;
  for (const auto& [e, c] : terms_) ts.push_back({{e}, c});
  return detail::format_terms(std::move(ts), {std::string(var)});
}

BiPoly BiPoly::monomial(int u_power, int v_power, const Rational& c) {
  if (u_power < 0 || v_power < 0) throw DomainError("negative exponent in BiPoly");
  BiPoly p;
  p.add_term({u_power, v_power}, c);
  return p;
}

BiPoly BiPoly::square_variables() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term({2 * e.u, 2 * e.v}, c);
  return r;
}

UniPoly BiPoly::specialize_diagonal(const Rational& s) const {
  UniPoly r;
  for (const auto& [e, c] : terms_) {
    Rational f = 1;
    for (int i = 0; i < e.u + e.v; ++i) f *= s;
    r.add_term(e.u + e.v, c * f);
  }
  return r;
}

Rational BiPoly::evaluate(const Rational& u, const Rational& v) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int i = 0; i < e.u; ++i) m *= u;
    for (int i = 0; i < e.v; ++i) m *= v;
    acc += m;
  }
  return acc;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == BiExponent{});
}

std::string BiPoly::to_string(std::string_view u, std::string_view v) const {
  std::vector<std::pair<std::vector<int>, Rational>> ts;
  for (const auto& [e, c] : terms_) ts.push_back({{e.u, e.v}, c});
  return detail::format_terms(std::move(ts), {std::string(u), std::string(v)});
}

}  // namespace motivic
