#pragma once

// Independent test-side computations. Nothing here calls into the
// library's algebra beyond building and reading polynomials.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "motivic/multi_poly.hpp"
#include "motivic/rational.hpp"

namespace oracle {

using motivic::Integer;
using motivic::MultiPoly;
using motivic::Rational;

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// Sum over multisets of size n of cells (cells[k] copies of weight k) of
/// q^(sum of weights). This is #X^(n)(F_q) for X paved by affine cells.
inline Integer cell_multiset_count(const std::vector<long>& cells, int n, const Integer& q) {
  std::vector<int> weights;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    for (long i = 0; i < cells[k]; ++i) weights.push_back(static_cast<int>(k));
  }
  Integer total = 0;
  std::vector<std::size_t> pick(n, 0);
  std::function<void(int, std::size_t, int)> rec = [&](int depth, std::size_t from, int wsum) {
    if (depth == n) {
      total += ipow(q, wsum);
      return;
    }
    for (std::size_t i = from; i < weights.size(); ++i) rec(depth + 1, i, wsum + weights[i]);
  };
  rec(0, 0, 0);
  return total;
}

/// Points of P^d over a field with Q elements, by listing coordinate vectors
/// whose first nonzero entry is the element labelled 1.
inline long projective_points_brute(int d, long Q) {
  long count = 0;
  std::vector<long> v(d + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == d + 1) {
      for (long x : v) {
        if (x != 0) {
          count += x == 1;
          return;
        }
      }
      return;
    }
    for (long x = 0; x < Q; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

/// #X^(2)(F_q) = 1/2 (N(q)^2 + N(q^2)): unordered pairs of rational points
/// plus Frobenius-conjugate pairs.
inline Integer frobenius_sym2(const Integer& n_q, const Integer& n_q2) { return (n_q * n_q + n_q2) / 2; }

/// Generalized binomial coefficient C(e, k) from its product formula.
inline Rational binom(long e, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * Rational(e - i) / Rational(i + 1);
  r.canonicalize();
  return r;
}

/// Row reduction over Q; true when A x = b is solvable.
inline bool solvable(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return false;
  }
  return true;
}

inline void monomials_up_to(std::size_t nvars, int degree, std::vector<std::vector<int>>& out) {
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
}

/// p = sum h_i g_i with deg(h_i g_i) <= bound, decided by linear algebra on
/// the coefficients of the h_i. One-sided: false means no certificate of
/// that degree exists.
inline bool bounded_membership(const MultiPoly& p, const std::vector<MultiPoly>& gens, int bound) {
  std::size_t nv = p.arity();
  std::vector<std::vector<int>> targets;
  monomials_up_to(nv, bound, targets);
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t i = 0; i < targets.size(); ++i) row_of[targets[i]] = i;
  std::vector<std::vector<Rational>> columns;
  for (const auto& g : gens) {
    int dg = *g.total_degree();
    if (dg > bound) continue;
    std::vector<std::vector<int>> hs;
    monomials_up_to(nv, bound - dg, hs);
    for (const auto& h : hs) {
      std::vector<Rational> col(targets.size(), 0);
      for (const auto& [e, c] : g.terms()) {
        std::vector<int> s(nv);
        for (std::size_t k = 0; k < nv; ++k) s[k] = e.powers[k] + h[k];
        col[row_of.at(s)] += c;
      }
      columns.push_back(col);
    }
  }
  if (p.total_degree() && *p.total_degree() > bound) return false;
  std::vector<std::vector<Rational>> a(targets.size(), std::vector<Rational>(columns.size(), 0));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < targets.size(); ++i) a[i][j] = columns[j][i];
  }
  std::vector<Rational> b(targets.size(), 0);
  for (const auto& [e, c] : p.terms()) b[row_of.at(e.powers)] = c;
  return solvable(a, b);
}

}  // namespace oracle
