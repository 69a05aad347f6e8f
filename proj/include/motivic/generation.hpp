#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivic/multi_poly.hpp"

namespace motivic::gen {

/// Whether g = A(f_1, ..., f_N) for a polynomial A with rational (scalar)
/// coefficients. This is composition, not ideal membership: the
/// coefficients of A may not involve any ring variable.
struct GenerationOptions {
  /// Allow A to have a constant term.
  bool allow_constant = false;
  /// Bound on deg A. When absent and N = 1 the bound
  /// deg g / deg f is exact (top layers multiply without cancellation);
  /// for N > 1 the grading degree of g is used and the search is not
  /// exhaustive.
  std::optional<int> max_degree;
};

/// Consistency of the equations read off one grading layer of g.
struct LayerReport {
  int degree = 0;
  std::size_t equations = 0;
  bool consistent = true;
  /// A monomial whose coefficient equation cannot be met, when inconsistent.
  std::optional<std::string> failing_monomial;
};

struct GenerationResult {
  bool generated = false;
  /// The degree bound covers every possible A.
  bool complete = false;
  int max_degree = 0;
  /// A as a polynomial in X1, ..., XN (free coefficients set to 0).
  std::optional<MultiPoly> a;
  std::vector<LayerReport> layers;
  std::optional<std::string> failing_monomial;
};

/// Solves for the coefficients of A by linear algebra over Q, one unknown
/// per monomial of degree <= the bound. Layers are taken by total degree in
/// `grading_variables` (all variables when empty).
GenerationResult generated_by(const MultiPoly& g, const std::vector<MultiPoly>& fs,
                              const std::vector<std::string>& grading_variables = {},
                              const GenerationOptions& options = {});

/// Names X1, ..., XN used for A.
std::vector<std::string> composition_variables(std::size_t n);

/// A(f_1, ..., f_N) evaluated back in the ring of the f_i.
MultiPoly compose(const MultiPoly& a, const std::vector<MultiPoly>& fs);

}  // namespace motivic::gen
