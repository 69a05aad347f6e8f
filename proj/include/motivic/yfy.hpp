#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivic/measures.hpp"

namespace motivic::yfy {

struct Violation {
  std::string monomial;
  std::string reason;
};

/// Outcome of reading the Y-F(Y) relation through the Poincare measure:
/// lhs = 1/2 p^2 + 1/2 p(t^2) - (1 + t^{2m}) p must equal t^4 p_F.
struct FanoReport {
  UniPoly lhs;
  bool divisible_by_t4 = false;
  std::optional<UniPoly> p_fano;
  std::optional<int> dim_fano;
  std::optional<Rational> b0_fano;
  std::vector<Violation> violations;
};

/// 1/2 p^2 + 1/2 p(t^2) - (1 + t^{2m}) p.
UniPoly relation_lhs(const UniPoly& p_y, int m);

/// Derives p_F, dim F and b0(F) from p_Y. Requires m >= 1, constant term 1,
/// leading term t^{2m} and non-negative integer coefficients, else
/// MalformedPoincareError. A failed relation comes back as violations.
FanoReport solve_fano_poincare(const UniPoly& p_y, int m);

/// The top-coefficient computation with indeterminate Betti numbers.
struct RelDimFacts {
  int m = 0;
  std::vector<std::string> betti_variables;  // b1 .. b_{2m-1}
  /// Coefficients of t^{4m}, t^{4m-1}, ..., t^{4m-4}, raw (all b_i free).
  std::vector<MultiPoly> raw_top_coefficients;
  /// Same after b1 = b_{2m-1} = 0.
  std::vector<MultiPoly> top_coefficients;
  /// t^{4m-4} coefficient after also imposing duality b_{2m-i} = b_i.
  MultiPoly top_coefficient_dual;
  /// 1/2 b2^2 + 1/2 b2 in the same ring.
  MultiPoly expected_top;
  bool first_four_vanish = false;
  bool top_matches = false;
  /// t^2 coefficient of the lhs: 1/2 b1^2 + 1/2 b1.
  MultiPoly t2_coefficient;
};

RelDimFacts reldim_symbolic(int m);

/// One step of the emptiness cascade: the equation read at t^degree solved
/// for a single unknown.
struct CascadeStep {
  int degree = 0;
  int unknown = 0;              // index k of b_k
  std::string equation;         // the univariate equation, "= 0" implied
  std::optional<Integer> value; // the unique non-negative integer root
  std::vector<Integer> roots;   // all non-negative integer roots
  /// The step has the shape b_k^2 + b_k = 0 (up to the factor 1/2).
  bool has_claimed_shape = false;
};

/// Run of the inductive argument that assuming F(Y) empty, i.e.
/// 1/2 p^2 + 1/2 p(t^2) = (1 + t^{2m}) p with b0 = b_{2m} = 1, is
/// contradictory.
struct NoEmptyTrace {
  int m = 0;
  std::vector<CascadeStep> steps;
  /// true when every b_1..b_{2m-1} was determined.
  bool fully_determined = false;
  std::optional<UniPoly> forced_p;
  /// lhs of the emptiness relation at the forced p (zero = consistent).
  std::optional<UniPoly> residual;
  /// The relation admits no non-negative solution.
  bool contradiction = false;
  /// The cascade forced b_1 = ... = b_{2m-1} = 0.
  bool all_betti_zero = false;
  /// (1/2 p^2 + 1/2 p(t^2), (1 + t^{2m}) p) at p = t^{2m}, doubled:
  /// (2 t^{4m}, 2 (1 + t^{2m}) t^{2m}).
  std::pair<UniPoly, UniPoly> top_only_pair;
  bool top_only_pair_differs = false;
  std::string summary;
};

NoEmptyTrace noemp_contradiction(int m);

struct FanoClassResult {
  MotivicClass numerator;  // [Y^(2)] - (1 + L^m)[Y] + L^m [Sing Y]
  std::optional<MotivicClass> fano;
  std::optional<std::string> obstruction;
  std::optional<std::string> obstruction_monomial;
  /// Constant term of the Poincare polynomial of the derived [F(Y)].
  std::optional<Rational> b0;
  bool connected = false;
};

/// [F(Y)] = ([Y^(2)] - (1 + L^m)[Y] + L^m sing) / L^2, with [Y^(2)] from
/// the zeta function (pure-L classes only). m >= 1.
FanoClassResult solve_fano_class(const MotivicClass& y, int m, const MotivicClass& sing);
FanoClassResult solve_fano_class(const MotivicClass& y, const MotivicClass& y_sym2, int m,
                                 const MotivicClass& sing);

}  // namespace motivic::yfy
