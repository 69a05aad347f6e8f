#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/multi_poly.hpp"

namespace motivic {

/// A declared symbolic generator, e.g. the class of a genus-g curve.
struct GeneratorEntry {
  std::string name;  // bare name; printed as "[name]"
  int dimension = 0;
  UniPoly poincare;
  BiPoly hodge_deligne;
  /// Point counts over F_q are available; requires `point_count`.
  bool effective = false;
  std::optional<UniPoly> point_count;  // polynomial in q
};

/// Frozen list of generators. Construction checks: names unique and
/// nonempty, deg(poincare) = 2*dimension, HD(-t,-t) = poincare, and an
/// effective entry carries a point-count polynomial.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  explicit GeneratorTable(std::vector<GeneratorEntry> entries);

  const std::vector<GeneratorEntry>& entries() const { return entries_; }
  const GeneratorEntry* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  /// Smooth projective curve of genus g: p = 1 + 2g t + t^2,
  /// HD = 1 - g u - g v + uv. Not effective (its point count is not a
  /// function of g alone).
  static GeneratorEntry genus_curve(std::string name, int genus);

 private:
  std::vector<GeneratorEntry> entries_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

/// Table with a single genus-4 curve V.
TablePtr standard_odp_table();

/// L^lefschetz times a product of generators (name -> multiplicity).
struct ClassMonomial {
  int lefschetz = 0;
  std::map<std::string, int> generators;

  int generator_count() const;
  /// Print/storage order: fewer generators first, then generator names,
  /// then ascending L-power.
  friend bool operator<(const ClassMonomial& a, const ClassMonomial& b);
  friend bool operator==(const ClassMonomial&, const ClassMonomial&) = default;
};

/// Integer combination of ClassMonomials: an element of the subring of the
/// Grothendieck ring generated by L and the declared generators.
class MotivicClass {
 public:
  using Terms = std::map<ClassMonomial, Integer>;

  MotivicClass() = default;
  explicit MotivicClass(TablePtr table) : table_(std::move(table)) {}

  static MotivicClass integer(const Integer& n);
  static MotivicClass lefschetz(int power = 1, const Integer& c = 1);
  static MotivicClass generator(std::string name, TablePtr table = nullptr);
  /// Integer-coefficient polynomial in L; DomainError on fractions.
  static MotivicClass from_lefschetz_poly(const UniPoly& p, TablePtr table = nullptr);

  const Terms& terms() const { return terms_; }
  const TablePtr& table() const { return table_; }
  MotivicClass with_table(TablePtr table) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_pure_lefschetz() const;
  std::set<std::string> generators_used() const;
  Integer coeff(int lefschetz_power, const std::map<std::string, int>& generators = {}) const;

  /// The class as a polynomial in L; UnsupportedError if generators occur.
  UniPoly lefschetz_polynomial() const;

  MotivicClass& add_term(const ClassMonomial& m, const Integer& c);

  MotivicClass& operator+=(const MotivicClass& o);
  MotivicClass& operator-=(const MotivicClass& o);
  friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
  friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
  friend MotivicClass operator-(const MotivicClass& a);
  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
  friend MotivicClass operator*(const Integer& s, const MotivicClass& a);
  /// Term maps are compared; tables are not.
  friend bool operator==(const MotivicClass& a, const MotivicClass& b) { return a.terms_ == b.terms_; }

  /// Replace generator `name` by a class.
  MotivicClass substitute_generator(const std::string& name, const MotivicClass& image) const;
  /// Exact division by L^k; DivisibilityError naming a term of L-degree < k.
  MotivicClass divide_by_lefschetz(int k) const;

  /// "1 - L + L^3 + L*[V]".
  std::string to_string() const;

 private:
  void adopt_table(const MotivicClass& o);

  Terms terms_;
  TablePtr table_;
};

/// Parses "1 - L + L^3 + L*[V]". Allowed names are L and bracketed
/// generators; coefficients must be integers.
MotivicClass parse_class(std::string_view text, TablePtr table = nullptr);

/// [c^(1)], ..., [c^(n)] read off
/// zeta_c(s) = prod_k (1 - L^k s)^(-c_k), truncated at s^n.
std::vector<MotivicClass> kapranov_zeta(const MotivicClass& c, int n);

/// [c^(n)] for a pure-L class.
MotivicClass symmetric_power(const MotivicClass& c, int n);

/// [c^(n)] for non-negative coefficients by splitting c into cells L^k and
/// convolving (L^k)^(j) = L^{kj} with multiset counts.
MotivicClass symmetric_power_by_convolution(const MotivicClass& c, int n);

/// [Y^(2)] + ([P^(m-1)] - 1)[Y], with [Y^(2)] computed from the zeta
/// function. m = 0 returns [Y^(2)]; m < 0 is a DomainError.
MotivicClass hilb2_from_sym2(const MotivicClass& y, int m);
/// Same with [Y^(2)] supplied.
MotivicClass hilb2_from_sym2(const MotivicClass& y, const MotivicClass& y_sym2, int m);

/// 1 + L + ... + L^m.
MotivicClass projective_space_class(int m);

/// Smooth quadric of dimension m-1: [P^(m-1)], plus L^((m-1)/2) for odd m.
MotivicClass quadric_class(int m);

/// Cubic threefold with one ordinary double point, via the projection from
/// the node: Bl_p Y = Bl_V P^3 with V the genus-4 curve of lines through p.
/// Returns 1 - L + L^3 + L*[V].
MotivicClass odp_cubic_threefold_class(const TablePtr& table);
/// The unsimplified blowup expression [P^3] + L([V] - [P^1] - 1).
MotivicClass odp_cubic_threefold_blowup_expression(const TablePtr& table);

}  // namespace motivic
