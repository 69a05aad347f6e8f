#include "motivic/generation.hpp"

#include <map>
#include <set>

#include "motivic/linear_solve.hpp"

namespace motivic::gen {

std::vector<std::string> composition_variables(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("X" + std::to_string(i));
  return v;
}

MultiPoly compose(const MultiPoly& a, const std::vector<MultiPoly>& fs) {
  auto xs = composition_variables(fs.size());
  std::vector<std::string> ring;
  for (const auto& f : fs) ring = union_variables(ring, f.variables());
  std::map<std::string, MultiPoly> assign;
  for (std::size_t i = 0; i < fs.size(); ++i) assign.emplace(xs[i], align(fs[i], ring));
  MultiPoly r = substitute(align(a, xs), assign);
  // constant A leaves no image variables behind
  return align(r, ring);
}

namespace {

void enumerate(std::size_t n, int max_total, std::vector<int>& cur, std::size_t pos, int used,
               std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; used + k <= max_total; ++k) {
    cur[pos] = k;
    enumerate(n, max_total, cur, pos + 1, used + k, out);
  }
  cur[pos] = 0;
}

struct Grading {
  std::vector<bool> graded;
  int degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.powers.size(); ++i) {
      if (graded[i]) d += e.powers[i];
    }
    return d;
  }
  std::optional<int> degree(const MultiPoly& p) const {
    std::optional<int> d;
    for (const auto& [e, c] : p.terms()) {
      int k = degree(e);
      if (!d || k > *d) d = k;
    }
    return d;
  }
};

}  // namespace

GenerationResult generated_by(const MultiPoly& g_in, const std::vector<MultiPoly>& fs_in,
                              const std::vector<std::string>& grading_variables,
                              const GenerationOptions& options) {
  if (fs_in.empty()) throw DomainError("generated_by: need at least one generator f");
  std::vector<std::string> ring = g_in.variables();
  for (const auto& f : fs_in) ring = union_variables(ring, f.variables());
  ring = union_variables(ring, grading_variables);
  MultiPoly g = align(g_in, ring);
  std::vector<MultiPoly> fs;
  for (const auto& f : fs_in) fs.push_back(align(f, ring));

  Grading grade;
  grade.graded.assign(ring.size(), grading_variables.empty());
  for (const auto& name : grading_variables) grade.graded[*g.index_of(name)] = true;

  GenerationResult res;
  const std::size_t n = fs.size();
  if (n == 1 && !fs[0].is_zero()) {
    Grading by_total{std::vector<bool>(ring.size(), true)};
    const Grading& measure = grade.degree(fs[0]).value_or(0) > 0 ? grade : by_total;
    int df = measure.degree(fs[0]).value_or(0);
    int dg = measure.degree(g).value_or(0);
    int exact = df == 0 ? 1 : dg / df;
    res.max_degree = options.max_degree.value_or(std::max(exact, 1));
    res.complete = res.max_degree >= exact;
  } else {
    res.max_degree = options.max_degree.value_or(std::max(grade.degree(g).value_or(0), 1));
    res.complete = false;
  }

  // Unknowns: the coefficients of the monomials X^alpha of A.
  std::vector<std::vector<int>> alphas;
  std::vector<int> cur(n, 0);
  enumerate(n, res.max_degree, cur, 0, 0, alphas);
  if (!options.allow_constant) alphas.erase(alphas.begin());  // the all-zero vector comes first

  std::vector<std::vector<MultiPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(fs[i].one_like());
    for (int k = 1; k <= res.max_degree; ++k) powers[i].push_back(powers[i].back() * fs[i]);
  }
  std::vector<MultiPoly> images;
  for (const auto& al : alphas) {
    MultiPoly p = g.one_like();
    for (std::size_t i = 0; i < n; ++i) {
      if (al[i] > 0) p = p * powers[i][al[i]];
    }
    images.push_back(std::move(p));
  }

  std::set<Exponents> monomials;
  for (const auto& [e, c] : g.terms()) monomials.insert(e);
  for (const auto& p : images) {
    for (const auto& [e, c] : p.terms()) monomials.insert(e);
  }
  std::vector<Exponents> rows(monomials.begin(), monomials.end());
  Matrix a(rows.size(), std::vector<Rational>(alphas.size()));
  std::vector<Rational> b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < alphas.size(); ++j) a[r][j] = images[j].coeff(rows[r]);
    b[r] = g.coeff(rows[r]);
  }
  auto mono_text = [&](const Exponents& e) { return MultiPoly::monomial(ring, e.powers).to_string(); };

  std::map<int, std::vector<std::size_t>> by_layer;
  for (std::size_t r = 0; r < rows.size(); ++r) by_layer[grade.degree(rows[r])].push_back(r);
  for (const auto& [deg, idx] : by_layer) {
    Matrix la;
    std::vector<Rational> lb;
    for (auto r : idx) {
      la.push_back(a[r]);
      lb.push_back(b[r]);
    }
    LinearSolution s = solve_linear(la, lb, alphas.size());
    LayerReport rep;
    rep.degree = deg;
    rep.equations = idx.size();
    rep.consistent = s.consistent;
    if (!s.consistent) rep.failing_monomial = mono_text(rows[idx[*s.inconsistent_equation]]);
    res.layers.push_back(rep);
  }

  LinearSolution s = solve_linear(a, b, alphas.size());
  res.generated = s.consistent;
  if (!s.consistent) {
    res.failing_monomial = mono_text(rows[*s.inconsistent_equation]);
    return res;
  }
  auto xs = composition_variables(n);
  MultiPoly A(xs);
  for (std::size_t j = 0; j < alphas.size(); ++j) A.add_term(alphas[j], s.solution[j]);
  res.a = A;
  return res;
}

}  // namespace motivic::gen
