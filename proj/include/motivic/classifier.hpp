#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivic/multi_poly.hpp"

namespace motivic::bounds {

enum class FamilyType { none, quadric_pencil, plane_family, g14_section, unknown };

std::string to_string(FamilyType f);
FamilyType parse_family_type(const std::string& s);

/// Declared numerical data of Y in P^n. Nothing here is verified
/// geometrically; the classifier only routes on the declarations.
struct VarietyProfile {
  int ambient_n = 0;
  int dim_m = 0;
  /// deg Y. For a complete intersection it defaults to the product of
  /// ci_degrees when absent.
  std::optional<int> degree_d;
  /// Degrees d_i of a complete intersection (one entry for a hypersurface).
  std::optional<std::vector<int>> ci_degrees;
  std::optional<int> equation_count;
  bool smooth = true;
  bool nondegenerate = true;
  std::optional<bool> fano_connected;
  FamilyType family_type = FamilyType::none;
  /// Second Betti number of Y, when supplied.
  std::optional<int> b2;
  /// dim F(Y) as established from the relation (2m - 4 expected).
  std::optional<int> fano_dim;
  bool assume_hartshorne = false;
  bool assume_ddj = false;
  /// Degree of some hypersurface containing Y (read only under assume_hartshorne).
  std::optional<int> containing_hypersurface_degree;

  int codimension() const { return ambient_n - dim_m; }
  /// deg Y from degree_d or the product of ci_degrees.
  std::optional<int> variety_degree() const;
  /// equation_count, else the number of ci_degrees.
  std::optional<int> defining_equations() const;
  /// Throws DomainError when the declarations are inconsistent.
  void validate() const;
};

enum class Branch {
  cubic_hypersurface,
  cubic_or_two_quadrics,
  excluded_family_case,
  excluded_22_ci,
  relation_impossible,
  inconclusive
};

std::string to_string(Branch b);

struct Predicate {
  std::string name;
  bool value = false;
  std::string detail;
};

struct Verdict {
  Branch branch = Branch::inconclusive;
  std::vector<Predicate> conditions_fired;
  std::vector<std::string> citations;
  std::string reason;
};

/// 2(m+1) - d - 3: lines on a hypersurface of degree d in P^{m+1}.
int expected_fano_dim_hypersurface(int m, int d);
/// n - sum(d_i) + m - 2 for a complete intersection in P^n.
int expected_fano_dim_ci(int n, int m, const std::vector<int>& degrees);
/// Dispatches on the profile: a single degree uses the hypersurface
/// formula, several degrees the complete-intersection one.
int expected_fano_dim(const VarietyProfile& profile);

/// A general hypersurface of degree r in P^n contains no lines iff r > 2n - 3.
bool kollar_empty_fano(int n, int r);

/// d <= r/(2e): a smooth variety of degree d and codimension e in P^r is
/// then a complete intersection.
bool bel_complete_intersection(int d, int r_ambient, int e_codim);

struct GencodimBound {
  int max_degree = 0;  // R
  int bound = 0;       // (u + 1)(n - (R + 2)) + (R + 1)
  int target = 0;      // 2m - 4
  bool satisfied = false;
};

/// Necessary condition for an intersection of u general hypersurfaces of
/// degrees r_i <= 2n - 3 to satisfy the relation.
GencodimBound gencodim_part1(int n, int u, const std::vector<int>& degrees, int m);

struct GencodimPart2 {
  int exact_lower_bound = 0;  // sum(2n - 3 - r_i) - (u - 1)(n - 1)
  int chain_bound = 0;        // u(n - 2) - 1
  int general_bound = 0;      // 2n - 5
  int target = 0;             // 2m - 4
  bool relation_possible = false;
};

/// Complete intersection of u >= 2 general hypersurfaces with
/// sum r_i <= n: dim F(Y) >= 2n - 5 > 2m - 4.
GencodimPart2 gencodim_part2(int n, int u, const std::vector<int>& degrees, int m);

Verdict resyfy_classify(const VarietyProfile& profile);

}  // namespace motivic::bounds
