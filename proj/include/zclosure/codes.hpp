#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zclosure/closures.hpp"
#include "zclosure/field.hpp"
#include "zclosure/linalg.hpp"

namespace zclosure {

/// coefficient * T_0^alpha[0] * ... * T_r^alpha[r].
struct GridTerm {
  std::vector<unsigned> alpha;
  Elem coefficient = 0;
};

/// max sum_t alpha_t p^t over terms with nonzero coefficient. Throws
/// UndefinedDegree when every coefficient is zero.
std::uint64_t wdeg(std::span<const GridTerm> terms, const PrimeField& field);

/// Reed-Muller code: evaluations of squarefree monomials of degree <= d
/// (ordered by degree, then mask) on all cube points in mask order.
struct RMCode {
  PrimeField field;
  int n;
  int d;
  std::vector<std::uint32_t> monomials;
  FpMatrix generator;
};

/// n <= 12. Negative d gives an empty generator; d > n is clamped to n.
RMCode rm_generator(const PrimeField& field, int n, int d);

/// Whether the nullspace of RM(n, d) equals the span of the signed vectors
/// [(-1)^|a| Q(a)] with deg Q <= n - d - 1 (empty for d = n). n <= 10.
bool check_rm_duality(const PrimeField& field, int n, int d);

/// Weighted Reed-Muller code on the grid [0, p-1]^r x [0, k]: evaluations of
/// T^alpha, alpha in the grid with sum_t alpha_t p^t <= d. Points are in
/// lexicographic order of (t_0, ..., t_r); monomials by weighted degree, then
/// lexicographically. 0^0 = 1.
struct WeightedRMCode {
  PrimeField field;
  int r;
  int k;
  int d;
  /// (k+1) p^r - 1, the largest weighted degree on the grid.
  int big_n;
  std::vector<std::vector<unsigned>> points;
  std::vector<std::vector<unsigned>> monomials;
  FpMatrix generator;
};

/// k in [1, p-1], p^r (k+1) <= 4096.
WeightedRMCode weighted_rm_generator(const PrimeField& field, int r, int k, int d);

struct WeightedDuality {
  /// dim W(S, d)^perp == dim W(S, N-d-1).
  bool dimensions_match = false;
  /// An all-nonzero gamma with sum_t gamma_t P(t) Q(t) = 0 for all generator
  /// rows P of W(S, d) and Q of W(S, N-d-1), when one exists.
  std::optional<std::vector<Elem>> gamma;

  bool holds() const noexcept { return dimensions_match && gamma.has_value(); }
};

WeightedDuality weighted_duality(const PrimeField& field, int r, int k, int d);
bool check_weighted_duality(const PrimeField& field, int r, int k, int d);

struct SupportCriterion {
  bool holds = false;
  /// v with W v = 0, v_j != 0 and support inside {j} + S (present iff holds).
  std::optional<std::vector<Elem>> certificate;
};

/// Whether every row-space vector that vanishes on the columns S also
/// vanishes at column j. Decided twice: by a nullspace search restricted to
/// {j} + S and by comparing ranks of the column restrictions; a
/// disagreement raises Internal. j must not lie in S.
SupportCriterion support_criterion(const FpMatrix& w, std::span<const std::size_t> s, std::size_t j);

/// n in zcl_{n,d}(E) decided on the Reed-Muller generator: the point 1^n is
/// in the closure iff the dual code has a vector supported on underline(E)
/// plus 1^n that is nonzero at 1^n. n <= 12.
bool top_point_in_closure_via_dual(const ClosureQuery& q);

}  // namespace zclosure
