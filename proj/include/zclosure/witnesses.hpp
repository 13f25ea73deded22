#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zclosure/cube.hpp"
#include "zclosure/field.hpp"
#include "zclosure/polynomials.hpp"

namespace zclosure {

using WitnessPolynomial = std::variant<SymmetricPoly, MultilinearPoly>;

/// Where a witness must vanish and where it must not.
struct VanishingSpec {
  std::vector<int> vanish_weights;
  std::vector<std::uint32_t> vanish_points;
  /// Each listed layer must carry a nonzero value: at some point, or at every
  /// point when `nonvanish_on_all_points` is set.
  std::vector<int> nonvanish_weights;
  std::vector<std::uint32_t> nonvanish_points;
  bool nonvanish_on_all_points = false;
};

struct WitnessReport {
  WitnessPolynomial polynomial;
  int claimed_degree = 0;
  VanishingSpec spec;
  bool verified = false;
  std::string form;
};

/// Checks every vanishing condition by evaluation and the degree bound
/// (sigma coefficients or mask popcounts). Does not modify `w`.
bool verify_witness(const WitnessReport& w, int n);

/// h_i = prod_{t < l} (1 - (sigma_{p^t} - i_t)^(p-1)) with l = ell_p(i),
/// tabulated on weights 0..n and converted to the sigma basis.
SymmetricPoly build_h(int i, const PrimeField& field, int n);

/// Integer coefficients c_0..c_d with Q(Z) = sum_u c_u C(Z, u) and
/// Q(first_node + z) = values[z] for z in [0, d]. Exact; throws Internal on
/// 64-bit overflow.
std::vector<std::int64_t> newton_interpolate(std::int64_t first_node, std::span<const std::int64_t> values);

/// r_{i,j} = sum_{u<k} c_u sigma_{p^l u} where Q = sum c_u C(Z, u) vanishes on
/// [1, k-1] and Q(k) = 1, k = (j - i) / p^l, l = ell_p(i). Needs i < j <= n
/// and j = i mod p^l (InvalidPair otherwise).
SymmetricPoly build_r(int i, int j, const PrimeField& field, int n);

/// Reports bundling each construction with the conditions it must satisfy.
WitnessReport h_report(int i, const PrimeField& field, int n);
WitnessReport r_report(int i, int j, const PrimeField& field, int n);

/// (1 + X1 + X2 + X3 + X4)(1 + X2 + X3 + X4 + X5) over F_2, expanded and
/// multilinearized.
MultilinearPoly counterexample_polynomial();
/// The polynomial above with its spec: vanish on layers {1, 4}, nonzero at 0^5, degree <= 2.
WitnessReport counterexample_report();

enum class ProductForm { GmTimesSymmetric, AffineTimesSymmetric };

std::string to_string(ProductForm form);

/// c + sum_i a_i X_i.
struct AffineForm {
  Elem constant = 0;
  std::vector<Elem> linear;

  MultilinearPoly expand(const PrimeField& field) const;
};

struct ProductWitness {
  ProductForm form;
  std::optional<GeneralizedMonomial> monomial;  // GmTimesSymmetric only; S = T = {} is the constant 1
  std::vector<AffineForm> affine_factors;       // AffineTimesSymmetric
  SymmetricPoly cofactor;
  WitnessReport report;
};

/// Bounded exhaustive search for a witness of j not in zcl_{n,d}(E) of the
/// requested product shape. Caps: n <= 6 (gm form); n <= 5 and p = 2
/// (affine form). Returns the first verified witness in a fixed order, or
/// std::nullopt when the space is exhausted.
std::optional<ProductWitness> search_product_witness(const PrimeField& field, int n, int d, const SymmetricSet& e, int j,
                                                     ProductForm form);

}  // namespace zclosure
