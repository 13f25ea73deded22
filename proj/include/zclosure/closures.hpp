#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zclosure/cube.hpp"
#include "zclosure/field.hpp"
#include "zclosure/linalg.hpp"

namespace zclosure {

/// A degree-d closure question about the symmetric set underline(E) in {0,1}^n.
struct ClosureQuery {
  PrimeField field;
  int n;
  int d;
  SymmetricSet e;
  /// Set when the requested degree exceeded n and was clamped to n.
  bool degree_clamped = false;

  /// Validates the inputs and clamps d into [0, n]; negative d is rejected.
  static ClosureQuery make(PrimeField field, int n, int d, SymmetricSet e);
};

enum class ClosureMethod { BruteForce, Symcl, LayerFormula, MainTheorem };

std::string_view to_string(ClosureMethod method);

struct ClosureResult {
  SymmetricSet closure;
  ClosureMethod method;
  /// Rank of the degree-d evaluation matrix of underline(E), when computed.
  std::optional<std::size_t> hilbert_dim;
};

/// Squarefree monomials of degree <= d ordered by degree, then mask value.
/// These index the columns of every evaluation matrix.
class MonomialIndex {
 public:
  MonomialIndex(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return size_; }
  std::vector<std::uint32_t> masks() const;
  /// Column of the monomial with the given mask (popcount <= d).
  std::size_t column(std::uint32_t mask) const noexcept;
  /// Columns of the monomials that evaluate to 1 at x, i.e. submasks of x of
  /// size <= d. Written to `out` (cleared first).
  void support_of_point(std::uint32_t x, std::vector<std::uint32_t>& out) const;

 private:
  int n_;
  int d_;
  std::size_t size_;
  std::vector<std::uint64_t> degree_offset_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// Rank of the evaluation matrix of `points` against monomials of degree <= d.
std::size_t hilbert_dim(const PrimeField& field, int n, int d, std::span<const std::uint32_t> points);
std::size_t hilbert_dim(const ClosureQuery& q);

/// Degree-d Zariski closure by the Hilbert rank criterion over the full
/// point set: j is kept only when every weight-j point's evaluation row lies
/// in the row space spanned by underline(E).
ClosureResult zcl_bruteforce(const ClosureQuery& q);

/// Degree-d symmetric closure from the (d+1)-column system
/// sum_k c_k C(i, k) = 0, i in E. Polynomial in n; no cube enumeration.
ClosureResult symcl(const ClosureQuery& q);

/// Closed form for a single layer E = {i}: {i} outside [d, n-d], otherwise
/// i (+) p^l with l = ell_p(d).
ClosureResult layer_zcl(const ClosureQuery& q);

/// Whether the main theorem applies: n >= 4 p^l - 1 and E inside [d, n-d].
bool main_theorem_applies(const ClosureQuery& q);

/// symcl labelled as the Zariski closure; throws PreconditionUnmet when the
/// theorem's hypotheses fail.
ClosureResult zcl_fast(const ClosureQuery& q);

/// zcl_fast when it applies, brute force otherwise.
ClosureResult zcl_auto(const ClosureQuery& q);

/// n = (k+1) p^r - 1 with k in [1, p-1].
struct TopLayerShape {
  unsigned k = 0;
  unsigned r = 0;
};

/// Decomposes n, or std::nullopt when n has no such form.
std::optional<TopLayerShape> top_layer_shape(int n, const PrimeField& field);

struct TopLayerCheck {
  TopLayerShape shape;
  bool via_zcl = false;
  bool via_symcl = false;
};

/// Decides n in zcl_{n,d}(E) and n in symcl_{n,d}(E) independently, for n
/// of the form (k+1) p^r - 1 (InvalidShape otherwise).
TopLayerCheck top_layer_equivalence_check(const ClosureQuery& q);

}  // namespace zclosure
