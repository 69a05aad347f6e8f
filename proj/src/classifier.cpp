#include "motivic/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "motivic/errors.hpp"

namespace motivic::bounds {

namespace {

const char* kRogora = "Rogora: a k-dimensional X in P^n (k >= 4) with a (2k-4)-dimensional family of lines is a "
                      "1-dimensional family of quadrics, a 2-dimensional family of (k-2)-planes, a linear section "
                      "of G(1,4), or has codimension <= 2";
const char* kBeheshtiRiedl = "Beheshti-Riedl: lines on a smooth degree-d hypersurface in P^n have the expected "
                             "dimension 2n - d - 3 when n >= 2d - 4";
const char* kBel = "Bertram-Ein-Lazarsfeld: smooth, degree d, codimension e in P^r with d <= r/(2e) implies a "
                   "complete intersection";
const char* kFaltings = "Faltings: defined by <= n/2 equations implies a complete intersection";
const char* kReldim = "Poincare coefficient cascade: the relation forces dim F(Y) = 2m - 4 and "
                      "b0(F(Y)) = b2(b2 + 1)/2";
const char* kFamilies = "family constructions (P^1 x quadric, plane families): F(Y) cannot be connected";
const char* kQuadrics = "intersections of two quadrics have b2 >= 2, so b0(F(Y)) = b2(b2 + 1)/2 >= 3";
const char* kHartshorne = "Hartshorne's conjecture in codimension 2 (assumed): gates weaken to 2d - 4 <= n, n >= 7";
const char* kDdj = "Debarre-de Jong analogue for complete intersections (assumed): dim F(Y) = n - d + m - 2";

}  // namespace

std::string to_string(FamilyType f) {
  switch (f) {
    case FamilyType::none: return "none";
    case FamilyType::quadric_pencil: return "quadric_pencil";
    case FamilyType::plane_family: return "plane_family";
    case FamilyType::g14_section: return "g14_section";
    case FamilyType::unknown: return "unknown";
  }
  return "unknown";
}

FamilyType parse_family_type(const std::string& s) {
  if (s == "none") return FamilyType::none;
  if (s == "quadric_pencil") return FamilyType::quadric_pencil;
  if (s == "plane_family") return FamilyType::plane_family;
  if (s == "g14_section") return FamilyType::g14_section;
  if (s == "unknown") return FamilyType::unknown;
  throw ParseError("unknown family_type '" + s + "'");
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::cubic_hypersurface: return "cubic_hypersurface";
    case Branch::cubic_or_two_quadrics: return "cubic_or_two_quadrics";
    case Branch::excluded_family_case: return "excluded_family_case";
    case Branch::excluded_22_ci: return "excluded_22_ci";
    case Branch::relation_impossible: return "relation_impossible";
    case Branch::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<int> VarietyProfile::variety_degree() const {
  if (degree_d) return degree_d;
  if (ci_degrees && !ci_degrees->empty()) {
    return std::accumulate(ci_degrees->begin(), ci_degrees->end(), 1, std::multiplies<>());
  }
  return std::nullopt;
}

std::optional<int> VarietyProfile::defining_equations() const {
  if (equation_count) return equation_count;
  if (ci_degrees) return static_cast<int>(ci_degrees->size());
  return std::nullopt;
}

void VarietyProfile::validate() const {
  if (ambient_n < 1) throw DomainError("ambient_n must be >= 1");
  if (dim_m < 0 || dim_m > ambient_n) throw DomainError("dim_m must satisfy 0 <= dim_m <= ambient_n");
  if (degree_d && *degree_d < 1) throw DomainError("degree_d must be >= 1");
  if (ci_degrees) {
    for (int d : *ci_degrees) {
      if (d < 1) throw DomainError("ci_degrees must be >= 1");
    }
    if (static_cast<int>(ci_degrees->size()) != codimension()) {
      throw DomainError("a complete intersection needs codimension-many degrees: got " +
                        std::to_string(ci_degrees->size()) + " for codimension " + std::to_string(codimension()));
    }
  }
  if (equation_count && *equation_count < 1) throw DomainError("equation_count must be >= 1");
  if (b2 && *b2 < 0) throw DomainError("b2 must be >= 0");
  if (containing_hypersurface_degree && *containing_hypersurface_degree < 1) {
    throw DomainError("containing_hypersurface_degree must be >= 1");
  }
}

int expected_fano_dim_hypersurface(int m, int d) { return 2 * (m + 1) - d - 3; }

int expected_fano_dim_ci(int n, int m, const std::vector<int>& degrees) {
  if (degrees.empty()) throw DomainError("expected_fano_dim: no degrees");
  return n - std::accumulate(degrees.begin(), degrees.end(), 0) + m - 2;
}

int expected_fano_dim(const VarietyProfile& p) {
  if (p.ci_degrees && !p.ci_degrees->empty()) {
    if (p.ci_degrees->size() == 1) return expected_fano_dim_hypersurface(p.dim_m, p.ci_degrees->front());
    return expected_fano_dim_ci(p.ambient_n, p.dim_m, *p.ci_degrees);
  }
  if (p.degree_d && p.codimension() == 1) return expected_fano_dim_hypersurface(p.dim_m, *p.degree_d);
  throw DomainError("expected_fano_dim: degree data missing (need ci_degrees, or degree_d for a hypersurface)");
}

bool kollar_empty_fano(int n, int r) {
  if (n < 1 || r < 1) throw DomainError("kollar_empty_fano needs n >= 1 and r >= 1");
  return r > 2 * n - 3;
}

bool bel_complete_intersection(int d, int r_ambient, int e_codim) {
  if (d < 1 || r_ambient < 1 || e_codim < 1) throw DomainError("bel_complete_intersection needs positive inputs");
  // d <= r/(2e), exactly, as 2e*d <= r
  return 2L * e_codim * d <= r_ambient;
}

GencodimBound gencodim_part1(int n, int u, const std::vector<int>& degrees, int m) {
  if (degrees.empty()) throw DomainError("gencodim_part1: degrees must be nonempty");
  if (static_cast<int>(degrees.size()) != u) throw DomainError("gencodim_part1: u must equal the number of degrees");
  for (int r : degrees) {
    if (r < 1) throw DomainError("gencodim_part1: degrees must be >= 1");
    if (kollar_empty_fano(n, r)) {
      throw DomainError("gencodim_part1: degree " + std::to_string(r) + " exceeds 2n - 3 = " +
                        std::to_string(2 * n - 3) +
                        "; Kollar's bound applies instead (a general such hypersurface contains no lines, so Y "
                        "cannot satisfy the relation)");
    }
  }
  GencodimBound g;
  g.max_degree = *std::max_element(degrees.begin(), degrees.end());
  g.bound = (u + 1) * (n - (g.max_degree + 2)) + (g.max_degree + 1);
  g.target = 2 * m - 4;
  g.satisfied = g.bound <= g.target;
  return g;
}

GencodimPart2 gencodim_part2(int n, int u, const std::vector<int>& degrees, int m) {
  if (u < 2) throw DomainError("gencodim_part2 needs u >= 2 hypersurfaces");
  if (static_cast<int>(degrees.size()) != u) throw DomainError("gencodim_part2: u must equal the number of degrees");
  if (m < 2) throw DomainError("gencodim_part2 needs dim Y >= 2");
  int sum = 0;
  for (int r : degrees) {
    if (r < 1) throw DomainError("gencodim_part2: degrees must be >= 1");
    if (kollar_empty_fano(n, r)) throw DomainError("gencodim_part2: degree exceeds 2n - 3; Kollar's bound applies");
    sum += r;
  }
  if (sum > n) {
    throw DomainError("gencodim_part2: sum of degrees " + std::to_string(sum) +
                      " exceeds n, so the complete intersection is not uniruled");
  }
  GencodimPart2 g;
  for (int r : degrees) g.exact_lower_bound += 2 * n - 3 - r;
  g.exact_lower_bound -= (u - 1) * (n - 1);
  g.chain_bound = u * (n - 2) - 1;
  g.general_bound = 2 * n - 5;
  g.target = 2 * m - 4;
  g.relation_possible = g.exact_lower_bound <= g.target;
  return g;
}

namespace {

struct Builder {
  Verdict v;
  bool fire(std::string name, bool value, std::string detail = {}) {
    v.conditions_fired.push_back({std::move(name), value, std::move(detail)});
    return value;
  }
  void cite(const char* c) {
    for (const auto& x : v.citations) {
      if (x == c) return;
    }
    v.citations.emplace_back(c);
  }
  Verdict done(Branch b, std::string reason) {
    v.branch = b;
    v.reason = std::move(reason);
    return std::move(v);
  }
};

std::string ineq(long lhs, const char* op, long rhs) {
  return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

}  // namespace

Verdict resyfy_classify(const VarietyProfile& p) {
  p.validate();
  Builder b;
  const int n = p.ambient_n, m = p.dim_m;

  if (!b.fire("m_at_least_7", m >= 7, ineq(m, ">=", 7))) {
    return b.done(Branch::inconclusive, "the classification needs m >= 7");
  }
  bool smooth = b.fire("smooth", p.smooth);
  bool nondeg = b.fire("nondegenerate", p.nondegenerate);
  if (!smooth || !nondeg) {
    return b.done(Branch::inconclusive, "the classification covers smooth nondegenerate varieties only");
  }

  b.cite(kReldim);
  if (p.fano_dim) {
    if (!b.fire("fano_dim_is_2m_minus_4", *p.fano_dim == 2 * m - 4, ineq(*p.fano_dim, "==", 2 * m - 4))) {
      return b.done(Branch::relation_impossible, "the relation forces dim F(Y) = 2m - 4");
    }
  } else {
    b.fire("fano_dim_is_2m_minus_4", true, "taken from the Poincare cascade (not supplied)");
  }

  // Numerical hypotheses of the classification.
  auto deg = p.variety_degree();
  auto eqs = p.defining_equations();
  bool gate = false;
  if (deg) gate |= b.fire("degree_at_most_n_over_4", 4L * *deg <= n, ineq(4L * *deg, "<=", n));
  if (eqs) gate |= b.fire("equations_at_most_n_over_2", 2L * *eqs <= n, ineq(2L * *eqs, "<=", n));
  if (p.assume_hartshorne) {
    b.cite(kHartshorne);
    if (deg) {
      gate |= b.fire("hartshorne_2d_minus_4_at_most_n", 2L * *deg - 4 <= n && n >= 7,
                     ineq(2L * *deg - 4, "<=", n) + ", n = " + std::to_string(n));
    }
    if (p.containing_hypersurface_degree) {
      int r = *p.containing_hypersurface_degree;
      gate |= b.fire("contained_in_hypersurface_2r_minus_4_at_most_n", 2L * r - 4 <= n, ineq(2L * r - 4, "<=", n));
    }
  }
  if (p.assume_ddj) {
    b.cite(kDdj);
    gate |= b.fire("ddj_assumed", true, "numerical conditions removed");
  }
  if (!gate) {
    return b.done(Branch::inconclusive, "none of the numerical hypotheses (d <= n/4, <= n/2 equations) holds");
  }

  // Rogora's case split.
  b.cite(kRogora);
  switch (p.family_type) {
    case FamilyType::quadric_pencil:
    case FamilyType::plane_family:
      b.fire("rogora_family_case", true, to_string(p.family_type));
      b.cite(kFamilies);
      return b.done(Branch::excluded_family_case,
                    "declared " + to_string(p.family_type) + ": such varieties satisfy the relation only with "
                    "disconnected F(Y)");
    case FamilyType::g14_section:
      b.fire("rogora_g14_section", true, "linear sections of G(1,4) have dimension <= 6");
      return b.done(Branch::inconclusive, "declared a linear section of G(1,4), inconsistent with m >= 7");
    case FamilyType::unknown:
      b.fire("rogora_family_known", false);
      return b.done(Branch::inconclusive, "family structure undeclared; Rogora's case split cannot be applied");
    case FamilyType::none:
      b.fire("rogora_family_case", false);
      break;
  }
  const int codim = p.codimension();
  if (!b.fire("codimension_at_most_2", codim <= 2, ineq(codim, "<=", 2))) {
    return b.done(Branch::relation_impossible, "outside the family cases Rogora forces codimension <= 2");
  }
  if (codim == 0) return b.done(Branch::relation_impossible, "Y = P^n is degenerate as a subvariety");

  if (codim == 1) {
    auto d = p.ci_degrees ? std::optional<int>(p.ci_degrees->front()) : p.degree_d;
    if (!d) return b.done(Branch::inconclusive, "hypersurface degree missing");
    b.cite(kBeheshtiRiedl);
    bool in_range = b.fire("beheshti_riedl_range", n >= 2 * *d - 4, ineq(n, ">=", 2L * *d - 4));
    int expected = expected_fano_dim_hypersurface(m, *d);
    bool match = b.fire("expected_dim_is_2m_minus_4", expected == 2 * m - 4,
                        "2(m+1) - d - 3 = " + std::to_string(expected));
    if (*d == 3) {
      b.fire("is_cubic", true);
      return b.done(Branch::cubic_hypersurface, "hypersurface of degree 3");
    }
    if (in_range && !match) {
      return b.done(Branch::relation_impossible, "the expected dimension 2m - d - 1 equals 2m - 4 only for d = 3");
    }
    return b.done(Branch::inconclusive, "degree outside the Beheshti-Riedl range");
  }

  // codimension 2
  bool ci = p.ci_degrees.has_value();
  b.fire("ci_degrees_declared", ci);
  if (deg) {
    b.cite(kBel);
    ci |= b.fire("bel_complete_intersection", bel_complete_intersection(*deg, n, 2), ineq(4L * *deg, "<=", n));
  }
  if (eqs && 2L * *eqs <= n) {
    b.cite(kFaltings);
    ci |= b.fire("faltings_complete_intersection", true, ineq(2L * *eqs, "<=", n));
  }
  if (p.assume_hartshorne && n >= 7) ci |= b.fire("hartshorne_complete_intersection", true);
  if (!ci) return b.done(Branch::inconclusive, "codimension 2 but not known to be a complete intersection");
  if (!p.ci_degrees) return b.done(Branch::inconclusive, "complete intersection degrees not supplied");

  const auto& ds = *p.ci_degrees;
  int sum = std::accumulate(ds.begin(), ds.end(), 0);
  int expected = expected_fano_dim_ci(n, m, ds);
  if (!b.fire("degree_sum_is_4", sum == 4, "d1 + d2 = " + std::to_string(sum) +
                                               ", expected dim n - d + m - 2 = " + std::to_string(expected))) {
    return b.done(Branch::relation_impossible, "the expected dimension 2m - (d1 + d2) equals 2m - 4 only for d1 + d2 = 4");
  }
  if (!b.fire("both_quadrics", ds[0] == 2 && ds[1] == 2, "nondegenerate forces d_i >= 2")) {
    return b.done(Branch::relation_impossible, "a linear equation contradicts nondegeneracy");
  }
  b.cite(kQuadrics);
  bool connected = p.fano_connected.value_or(false);
  if (p.fano_connected) b.fire("fano_connected", *p.fano_connected);
  bool b2_large = p.b2 && *p.b2 >= 2;
  if (p.b2) b.fire("b2_at_least_2", b2_large, "b2 = " + std::to_string(*p.b2));
  if (connected) {
    return b.done(Branch::excluded_22_ci, "connected F(Y) forces b2 = 1, but a (2,2) complete intersection has b2 >= 2");
  }
  if (b2_large && p.fano_connected != false) {
    return b.done(Branch::excluded_22_ci,
                  "b2 >= 2 gives b0(F(Y)) = b2(b2 + 1)/2 >= 3; with the cubic branch this leaves cubics only");
  }
  return b.done(Branch::cubic_or_two_quadrics, "(2,2) complete intersection not excluded by the supplied data");
}

}  // namespace motivic::bounds
