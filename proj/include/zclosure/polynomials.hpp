#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zclosure/cube.hpp"
#include "zclosure/field.hpp"

namespace zclosure {

/// Polynomial degree; std::nullopt is the degree of the zero polynomial
/// (minus infinity). It is never encoded as -1.
using Degree = std::optional<int>;

/// True when deg <= bound, treating the zero polynomial as below every bound.
inline bool degree_at_most(Degree deg, int bound) noexcept { return !deg || *deg <= bound; }

/// F_p-combination of squarefree monomials X^S, keyed by the mask of S
/// (bit i-1 for X_i). Zero coefficients are never stored.
class MultilinearPoly {
 public:
  MultilinearPoly(PrimeField field, int n);

  static MultilinearPoly constant(PrimeField field, int n, Elem c);
  static MultilinearPoly variable(PrimeField field, int n, int i);  // X_i, 1-based

  const PrimeField& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  const std::map<std::uint32_t, Elem>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Degree degree() const noexcept;
  Elem coefficient(std::uint32_t mask) const noexcept;

  /// Adds c * X^mask.
  void add_term(std::uint32_t mask, Elem c);

  Elem evaluate(const CubePoint& x) const;
  /// Values on all 2^n points indexed by mask (subset-sum transform).
  std::vector<Elem> value_table() const;

  MultilinearPoly operator+(const MultilinearPoly& other) const;
  MultilinearPoly operator-(const MultilinearPoly& other) const;
  /// Product reduced with X_i^2 = X_i.
  MultilinearPoly operator*(const MultilinearPoly& other) const;
  MultilinearPoly scaled(Elem c) const;

  friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const MultilinearPoly& other) const;

  PrimeField field_;
  int n_;
  std::map<std::uint32_t, Elem> terms_;
};

/// One term of an arbitrary polynomial: exponent vector (length n) and an
/// integer coefficient, reduced mod p on input.
struct RawTerm {
  std::vector<unsigned> exponents;
  std::int64_t coefficient = 0;
};

/// Replaces every X_i^e (e >= 1) by X_i and combines like terms.
MultilinearPoly multilinearize(const PrimeField& field, int n, std::span<const RawTerm> terms);

/// X^(S,T) = prod_{s in S} X_s prod_{t in T} (1 - X_t) with S, T disjoint masks.
struct GeneralizedMonomial {
  int n = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  int degree() const noexcept { return std::popcount(s) + std::popcount(t); }
  bool evaluate(std::uint32_t x) const noexcept { return (x & s) == s && (x & t) == 0; }
  MultilinearPoly expand(const PrimeField& field) const;
};

GeneralizedMonomial make_generalized_monomial(int n, std::uint32_t s, std::uint32_t t);

/// A symmetric polynomial function sum_k c_k sigma_k, k in [0, n]. On the cube
/// sigma_k(x) = C(|x|, k) mod p, so values depend only on the weight.
class SymmetricPoly {
 public:
  SymmetricPoly(PrimeField field, int n);
  SymmetricPoly(PrimeField field, int n, std::vector<Elem> sigma_coeffs);

  /// sigma_k itself.
  static SymmetricPoly sigma(PrimeField field, int n, int k);

  const PrimeField& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(int k) const noexcept { return coeffs_[static_cast<std::size_t>(k)]; }
  bool is_zero() const noexcept;
  /// Largest k with c_k != 0; equals the multilinear degree.
  Degree degree() const noexcept;

  SymmetricPoly operator+(const SymmetricPoly& other) const;
  SymmetricPoly scaled(Elem c) const;

  friend bool operator==(const SymmetricPoly& a, const SymmetricPoly& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  PrimeField field_;
  int n_;
  std::vector<Elem> coeffs_;
};

Elem eval_multilinear(const MultilinearPoly& poly, const CubePoint& x);

/// sum_k c_k C(w, k) mod p. Throws InvalidWeight for w outside [0, n].
Elem sym_eval_at_weight(const SymmetricPoly& f, int w);

/// Values on every weight 0..n.
std::vector<Elem> sym_weight_values(const SymmetricPoly& f);

/// The unique symmetric polynomial taking values[w] on weight w, found by
/// forward substitution through the unitriangular matrix [C(w, k)].
SymmetricPoly weights_to_sigma_coeffs(const PrimeField& field, std::span<const Elem> values);

/// f^+: vanishes on layer j + 1 exactly when f vanishes on layer j.
SymmetricPoly f_plus(const SymmetricPoly& f);
/// f^-: inverse of f_plus, c-_u = c_u + c_{u+1}. Vanishes on layer j - 1
/// exactly when f vanishes on layer j.
SymmetricPoly f_minus(const SymmetricPoly& f);

/// Expands sum_k c_k sigma_k into squarefree monomials (n within the cap).
MultilinearPoly sym_to_multilinear(const SymmetricPoly& f);

}  // namespace zclosure
