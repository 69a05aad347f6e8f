#pragma once

#include <optional>
#include <vector>

#include "motivic/rational.hpp"

namespace motivic {

using Matrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  bool consistent = false;
  /// A particular solution with every free unknown set to 0 (when consistent).
  std::vector<Rational> solution;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  /// Index of an original equation that reduces to 0 = nonzero.
  std::optional<std::size_t> inconsistent_equation;
};

/// Solves A x = b exactly by Gauss-Jordan elimination
/// over Q. A has one row per equation; rows must all have `unknowns` entries.
LinearSolution solve_linear(const Matrix& a, const std::vector<Rational>& b, std::size_t unknowns);

}  // namespace motivic
