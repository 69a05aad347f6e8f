#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivic/generation.hpp"
#include "motivic/measures.hpp"

namespace motivic::studies {

struct Claim {
  std::string description;
  std::string expected;
  std::string computed;
  bool match = false;
  std::string citation;
};

/// overall is the conjunction of the claim matches.
struct Certificate {
  std::string name;
  std::vector<Claim> claims;
  bool overall = false;
  /// Informational lines for the text rendering.
  std::vector<std::string> notes;

  void add(std::string description, std::string expected, std::string computed, std::string citation = {});
  void add_bool(std::string description, bool value, std::string citation = {});
  void finish();
};

/// Rational identities recovering L from [Y] = 1 + bL + L^2 and [Y^(2)].
struct LefschetzRecovery {
  UniPoly l_squared;  // 2/(b^2+b-2) ([Y^(2)] - (1+L^2)[Y])
  UniPoly l;          // 1/b ([Y] - 2/(b^2+b-2)([Y^(2)] - (1+L^2)[Y]) - 1)
};

/// DomainError when b^2 + b - 2 = 0 (b = 1) or b = 0.
LefschetzRecovery lefschetz_recovery(int b);

Certificate cubic_surface_study(int b = 7);
/// [P^1 x Q] with Q the smooth quadric of dimension m-1.
Certificate quadric_family_study(int m);
/// Union of (m-2)-planes between a fixed (m-4)-plane and (m-1)-plane.
Certificate plane_family_study(int m);
Certificate odp_threefold_study(const TablePtr& table = standard_odp_table());
Certificate nongen_study();

/// #Y(F_q) = (1 + q + ... + q^{m-4})(1 + q + q^2) as a class in L.
MotivicClass plane_family_class(int m);
/// (1 + L)[Q].
MotivicClass quadric_family_class(int m);

/// Outcome of the criterion x^2 | P for P(L)[F(Y)] = Q(L, [Y], [Y^(2)])
/// on the nodal cubic threefold.
struct PolyGsOutcome {
  UniPoly p;
  int k = 0;              // x-adic order of P
  Rational lowest;        // coefficient of x^k
  bool expressible = false;
  /// "k>=2", "k=1" or "k=0".
  std::string branch;
  /// Q(x, y, z) when expressible, built from the relation itself.
  std::optional<MultiPoly> q;
  /// HD(Q(L, Y, Y^(2))) == P(uv) HD(F) when Q exists.
  bool hd_identity = false;
  /// (P(uv)/(uv)^k) HD(F) mod uv, which the k-stripping compares with a
  /// constant.
  BiPoly stripped_rhs_mod_uv;
  /// Bounded search for Q at the Hodge-Deligne level.
  gen::GenerationResult hd_search;
};

/// polyGS criterion for P (a polynomial in x) with a bounded HD-level
/// search up to `search_degree`.
PolyGsOutcome polygs_check(const UniPoly& p, const TablePtr& table = standard_odp_table(), int search_degree = 5);

/// 1/2 b (g^2 - g)(u^2 + v^2) computed from HD((L + b)[F]) mod uv with b and
/// g as ring variables.
MultiPoly odp_symbolic_obstruction();

std::vector<std::string> study_names();
/// Dispatch by name; m is used by the family studies (defaults 4 and 6).
Certificate run_study(const std::string& name, std::optional<int> m = std::nullopt);

}  // namespace motivic::studies
