#include "motivic/linear_solve.hpp"

#include "motivic/errors.hpp"

namespace motivic {

LinearSolution solve_linear(const Matrix& a, const std::vector<Rational>& b, std::size_t unknowns) {
  if (a.size() != b.size()) throw DomainError("solve_linear: row count mismatch");
  const std::size_t rows = a.size();
  // Augmented matrix; the last column is the right-hand side.
  Matrix m(rows, std::vector<Rational>(unknowns + 1));
  std::vector<std::size_t> origin(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != unknowns) throw DomainError("solve_linear: ragged matrix");
    for (std::size_t j = 0; j < unknowns; ++j) m[i][j] = a[i][j];
    m[i][unknowns] = b[i];
    origin[i] = i;
  }

  LinearSolution out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(origin[piv], origin[r]);
    Rational inv = 1 / m[r][col];
    for (std::size_t j = col; j <= unknowns; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][unknowns] != 0) {
      out.consistent = false;
      out.inconsistent_equation = origin[i];
      return out;
    }
  }
  out.consistent = true;
  out.solution.assign(unknowns, Rational(0));
  for (std::size_t k = 0; k < r; ++k) out.solution[out.pivot_columns[k]] = m[k][unknowns];
  return out;
}

}  // namespace motivic
