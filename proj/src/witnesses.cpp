#include "zclosure/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "zclosure/error.hpp"
#include "zclosure/linalg.hpp"

namespace zclosure {
namespace {

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) raise(ErrorKind::Internal, "interpolation overflowed 64-bit integers");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) raise(ErrorKind::Internal, "interpolation overflowed 64-bit integers");
  return out;
}

void require_weight(int w, int n) {
  if (w < 0 || w > n) raise(ErrorKind::InvalidWeight, "weight " + std::to_string(w) + " outside [0, " + std::to_string(n) + "]");
}

bool verify_symmetric(const SymmetricPoly& f, const VanishingSpec& spec) {
  const std::vector<Elem> values = sym_weight_values(f);
  const int n = f.n();
  for (int w : spec.vanish_weights) {
    require_weight(w, n);
    if (values[w] != 0) return false;
  }
  for (std::uint32_t x : spec.vanish_points) {
    if (values[std::popcount(x)] != 0) return false;
  }
  for (int w : spec.nonvanish_weights) {
    require_weight(w, n);
    if (values[w] == 0) return false;
  }
  for (std::uint32_t x : spec.nonvanish_points) {
    if (values[std::popcount(x)] == 0) return false;
  }
  return true;
}

bool verify_multilinear(const MultilinearPoly& f, const VanishingSpec& spec) {
  const int n = f.n();
  const std::vector<Elem> table = f.value_table();
  for (int w : spec.vanish_weights) {
    require_weight(w, n);
    for (CubePoint x : LayerPoints(n, w)) {
      if (table[x.bits] != 0) return false;
    }
  }
  for (std::uint32_t x : spec.vanish_points) {
    if (x >= table.size() || table[x] != 0) return false;
  }
  for (int w : spec.nonvanish_weights) {
    require_weight(w, n);
    bool any = false;
    bool all = true;
    for (CubePoint x : LayerPoints(n, w)) {
      if (table[x.bits] != 0) {
        any = true;
      } else {
        all = false;
      }
    }
    if (spec.nonvanish_on_all_points ? !all : !any) return false;
  }
  for (std::uint32_t x : spec.nonvanish_points) {
    if (x >= table.size() || table[x] == 0) return false;
  }
  return true;
}

std::vector<Elem> padded(std::span<const Elem> coeffs, int n) {
  std::vector<Elem> out(static_cast<std::size_t>(n) + 1, 0);
  std::copy_n(coeffs.begin(), std::min(coeffs.size(), out.size()), out.begin());
  return out;
}

std::uint32_t layer_mask(int n, int w) {
  std::uint32_t out = 0;
  for (CubePoint x : LayerPoints(n, w)) out |= std::uint32_t{1} << x.bits;
  return out;
}

// Degree of the 0/1 function on {0,1}^n (n <= 5) with support `support`, over F_2.
int indicator_degree(std::uint32_t support, int n) {
  std::uint32_t anf = support;
  for (int bit = 0; bit < n; ++bit) {
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
      if (x & (std::uint32_t{1} << bit)) anf ^= ((anf >> (x ^ (std::uint32_t{1} << bit))) & 1u) << x;
    }
  }
  int deg = -1;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
    if ((anf >> x) & 1u) deg = std::max(deg, std::popcount(x));
  }
  return deg;
}

struct SearchSetup {
  int n;
  int d;
};

SearchSetup validate_search(const PrimeField& field, int n, int d, const SymmetricSet& e, int j, int cap) {
  (void)field;
  if (n < 0) raise(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (n > cap) {
    raise(ErrorKind::SizeCapExceeded, "witness search is capped at n = " + std::to_string(cap) + ", got " + std::to_string(n));
  }
  if (d < 0) raise(ErrorKind::InvalidArgument, "degree bound must be nonnegative");
  if (e.n() != n) raise(ErrorKind::DimensionMismatch, "weight set was built for a different n");
  require_weight(j, n);
  return {n, std::min(d, n)};
}

WitnessReport product_report(WitnessPolynomial poly, int n, int d, const SymmetricSet& e, int j, std::string form) {
  WitnessReport report{std::move(poly), d, {}, false, std::move(form)};
  report.spec.vanish_weights = e.weights();
  report.spec.nonvanish_weights = {j};
  report.verified = verify_witness(report, n);
  if (!report.verified) raise(ErrorKind::Internal, "search produced a witness that fails verification");
  return report;
}

std::optional<ProductWitness> search_gm(const PrimeField& field, int n, int d, const SymmetricSet& e, int j) {
  for (int g = 0; g <= d; ++g) {
    const int cofactor_degree = d - g;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
      const int s_size = std::popcount(s);
      if (s_size > g) continue;
      for (std::uint32_t t = 0; t < (std::uint32_t{1} << n); ++t) {
        if ((s & t) != 0 || std::popcount(t) != g - s_size) continue;
        // The monomial is nonzero exactly on the weights [|S|, n - |T|]; the
        // symmetric cofactor must then vanish on E there and not at j.
        const int lo = s_size;
        const int hi = n - std::popcount(t);
        if (j < lo || j > hi) continue;
        FpMatrix rows(field, 0, static_cast<std::size_t>(cofactor_degree) + 1);
        std::vector<Elem> row(static_cast<std::size_t>(cofactor_degree) + 1);
        for (int w : e.weights()) {
          if (w < lo || w > hi) continue;
          for (int k = 0; k <= cofactor_degree; ++k) row[k] = binom_mod_p(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(k), field);
          rows.append_row(row);
        }
        for (const std::vector<Elem>& v : nullspace_basis(rows)) {
          Elem at_j = 0;
          for (int k = 0; k <= cofactor_degree; ++k) {
            at_j = field.add(at_j, field.mul(v[k], binom_mod_p(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(k), field)));
          }
          if (at_j == 0) continue;
          const GeneralizedMonomial gm = make_generalized_monomial(n, s, t);
          SymmetricPoly cofactor(field, n, padded(v, n));
          MultilinearPoly product = gm.expand(field) * sym_to_multilinear(cofactor);
          ProductWitness out{ProductForm::GmTimesSymmetric, gm, {}, cofactor,
                             product_report(std::move(product), n, d, e, j, to_string(ProductForm::GmTimesSymmetric))};
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ProductWitness> search_affine(const PrimeField& field, int n, int d, const SymmetricSet& e, int j) {
  if (field.p() != 2) raise(ErrorKind::InvalidArgument, "affine-form search is implemented over F_2 only");
  const std::uint32_t points = std::uint32_t{1} << n;
  const std::uint32_t all = points >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << points) - 1);

  // Affine forms c + <a, x> with a != 0, ordered by a then c; support = {x : form(x) = 1}.
  struct Form {
    std::uint32_t linear;
    Elem constant;
    std::uint32_t support;
  };
  std::vector<Form> forms;
  for (std::uint32_t a = 1; a < points; ++a) {
    for (Elem c = 0; c < 2; ++c) {
      std::uint32_t support = 0;
      for (std::uint32_t x = 0; x < points; ++x) {
        if ((c ^ (std::popcount(a & x) & 1u)) != 0) support |= std::uint32_t{1} << x;
      }
      forms.push_back({a, c, support});
    }
  }

  // Every nonzero symmetric cofactor, by degree then coefficient vector.
  struct Cofactor {
    std::vector<Elem> coeffs;
    std::uint32_t support;
  };
  std::vector<Cofactor> cofactors;
  for (std::uint32_t code = 1; code < (std::uint32_t{1} << (n + 1)); ++code) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs[k] = (code >> (n - k)) & 1u;
    const std::vector<Elem> values = sym_weight_values(SymmetricPoly(field, n, coeffs));
    std::uint32_t support = 0;
    for (std::uint32_t x = 0; x < points; ++x) {
      if (values[std::popcount(x)] != 0) support |= std::uint32_t{1} << x;
    }
    cofactors.push_back({std::move(coeffs), support});
  }
  std::stable_sort(cofactors.begin(), cofactors.end(), [](const Cofactor& a, const Cofactor& b) {
    auto deg = [](const std::vector<Elem>& c) {
      int out = -1;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) out = static_cast<int>(k);
      }
      return out;
    };
    return deg(a.coeffs) < deg(b.coeffs);
  });

  std::uint32_t e_points = 0;
  for (int w : e.weights()) e_points |= layer_mask(n, w);
  const std::uint32_t j_points = layer_mask(n, j);

  // Products of affine forms are tracked by their support (an affine
  // subspace); more than n factors never give a new nonempty support.
  struct Node {
    std::uint32_t support;
    std::vector<std::size_t> factors;
  };
  std::vector<Node> level{{all, {}}};
  std::unordered_set<std::uint32_t> seen{all};
  std::unordered_map<std::uint32_t, int> degree_cache;

  for (int k = 0; k <= n && !level.empty(); ++k) {
    for (const Node& node : level) {
      for (const Cofactor& cof : cofactors) {
        const std::uint32_t support = node.support & cof.support;
        if ((support & e_points) != 0 || (support & j_points) == 0) continue;
        auto [it, inserted] = degree_cache.try_emplace(support, 0);
        if (inserted) it->second = indicator_degree(support, n);
        if (it->second > d) continue;

        std::vector<AffineForm> factors;
        MultilinearPoly product = MultilinearPoly::constant(field, n, 1);
        for (std::size_t idx : node.factors) {
          AffineForm f{forms[idx].constant, std::vector<Elem>(static_cast<std::size_t>(n), 0)};
          for (int i = 0; i < n; ++i) f.linear[i] = (forms[idx].linear >> i) & 1u;
          product = product * f.expand(field);
          factors.push_back(std::move(f));
        }
        SymmetricPoly cofactor(field, n, cof.coeffs);
        product = product * sym_to_multilinear(cofactor);
        ProductWitness out{ProductForm::AffineTimesSymmetric, std::nullopt, std::move(factors), cofactor,
                           product_report(std::move(product), n, d, e, j, to_string(ProductForm::AffineTimesSymmetric))};
        return out;
      }
    }
    std::vector<Node> next;
    for (const Node& node : level) {
      for (std::size_t idx = 0; idx < forms.size(); ++idx) {
        const std::uint32_t support = node.support & forms[idx].support;
        if ((support & j_points) == 0 || !seen.insert(support).second) continue;
        Node child{support, node.factors};
        child.factors.push_back(idx);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

bool verify_witness(const WitnessReport& w, int n) {
  return std::visit(
      [&](const auto& poly) {
        if (poly.n() != n) return false;
        if (!degree_at_most(poly.degree(), w.claimed_degree)) return false;
        using T = std::decay_t<decltype(poly)>;
        if constexpr (std::is_same_v<T, SymmetricPoly>) {
          return verify_symmetric(poly, w.spec);
        } else {
          return verify_multilinear(poly, w.spec);
        }
      },
      w.polynomial);
}

SymmetricPoly build_h(int i, const PrimeField& field, int n) {
  if (i < 0) raise(ErrorKind::InvalidWeight, "weight must be nonnegative");
  if (n < 0) raise(ErrorKind::InvalidArgument, "n must be nonnegative");
  const unsigned l = ell_p(static_cast<std::uint64_t>(i), field);
  const PAryDigits target = p_ary_digits(static_cast<std::uint64_t>(i), field);
  std::vector<Elem> values(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    const PAryDigits digits = p_ary_digits(static_cast<std::uint64_t>(w), field);
    Elem v = 1;
    for (unsigned t = 0; t < l; ++t) {
      const Elem diff = field.sub(digits.digit(t), target.digit(t));
      v = field.mul(v, field.sub(1, field.pow(diff, field.p() - 1)));
    }
    values[w] = v;
  }
  return weights_to_sigma_coeffs(field, values);
}

std::vector<std::int64_t> newton_interpolate(std::int64_t first_node, std::span<const std::int64_t> values) {
  if (values.empty()) raise(ErrorKind::InvalidArgument, "interpolation needs at least one value");
  constexpr std::int64_t kMaxShift = std::int64_t{1} << 20;
  if (first_node > kMaxShift || first_node < -kMaxShift) raise(ErrorKind::InvalidArgument, "first node too far from 0");

  // Forward differences at the first node: Q(first_node + z) = sum_m b_m C(z, m).
  std::vector<std::int64_t> diff(values.begin(), values.end());
  std::vector<std::int64_t> coeffs(values.size());
  for (std::size_t m = 0; m < values.size(); ++m) {
    coeffs[m] = diff[0];
    for (std::size_t z = 0; z + 1 < diff.size() - m; ++z) diff[z] = checked_sub(diff[z + 1], diff[z]);
  }

  // Re-base one unit at a time: C(Z - 1, m) = sum_{u <= m} (-1)^(m-u) C(Z, u)
  // and C(Z + 1, m) = C(Z, m) + C(Z, m - 1).
  const std::size_t size = coeffs.size();
  for (std::int64_t step = 0; step < first_node; ++step) {
    std::int64_t suffix = 0;
    for (std::size_t u = size; u-- > 0;) {
      suffix = checked_sub(coeffs[u], suffix);
      coeffs[u] = suffix;
    }
  }
  for (std::int64_t step = 0; step < -first_node; ++step) {
    for (std::size_t u = 0; u + 1 < size; ++u) coeffs[u] = checked_add(coeffs[u], coeffs[u + 1]);
  }
  return coeffs;
}

SymmetricPoly build_r(int i, int j, const PrimeField& field, int n) {
  if (i < 0 || j > n) {
    raise(ErrorKind::InvalidPair, "need 0 <= i < j <= n, got i = " + std::to_string(i) + ", j = " + std::to_string(j));
  }
  if (j <= i) raise(ErrorKind::InvalidPair, "need i < j, got i = " + std::to_string(i) + ", j = " + std::to_string(j));
  const unsigned l = ell_p(static_cast<std::uint64_t>(i), field);
  const std::uint64_t modulus = int_pow(field.p(), l);
  const auto gap = static_cast<std::uint64_t>(j - i);
  if (gap % modulus != 0) {
    raise(ErrorKind::InvalidPair, "j - i = " + std::to_string(gap) + " is not a multiple of " + std::to_string(modulus));
  }
  const auto k = static_cast<std::size_t>(gap / modulus);
  std::vector<std::int64_t> values(k, 0);
  values.back() = 1;
  const std::vector<std::int64_t> c = newton_interpolate(1, values);
  std::vector<Elem> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t u = 0; u < k; ++u) coeffs[u * modulus] = field.from_int(c[u]);
  return SymmetricPoly(field, n, std::move(coeffs));
}

WitnessReport h_report(int i, const PrimeField& field, int n) {
  const unsigned l = ell_p(static_cast<std::uint64_t>(i), field);
  const std::uint64_t modulus = int_pow(field.p(), l);
  WitnessReport report{build_h(i, field, n), static_cast<int>(modulus - 1), {}, false, "h"};
  for (int w = 0; w <= n; ++w) {
    const bool same_class = static_cast<std::uint64_t>(w) % modulus == static_cast<std::uint64_t>(i) % modulus;
    (same_class ? report.spec.nonvanish_weights : report.spec.vanish_weights).push_back(w);
  }
  report.spec.nonvanish_on_all_points = true;
  report.verified = verify_witness(report, n);
  return report;
}

WitnessReport r_report(int i, int j, const PrimeField& field, int n) {
  SymmetricPoly r = build_r(i, j, field, n);
  const auto modulus = static_cast<int>(int_pow(field.p(), ell_p(static_cast<std::uint64_t>(i), field)));
  WitnessReport report{std::move(r), j - i - modulus, {}, false, "r"};
  for (int w = i + modulus; w < j; w += modulus) report.spec.vanish_weights.push_back(w);
  report.spec.nonvanish_weights = {j};
  report.spec.nonvanish_on_all_points = true;
  report.verified = verify_witness(report, n);
  return report;
}

MultilinearPoly counterexample_polynomial() {
  constexpr int n = 5;
  const PrimeField f2(2);
  // Factors as exponent vectors of their terms: 1 + X1 + X2 + X3 + X4 and 1 + X2 + X3 + X4 + X5.
  auto factor_terms = [](int first, int last) {
    std::vector<std::vector<unsigned>> terms{std::vector<unsigned>(n, 0)};
    for (int v = first; v <= last; ++v) {
      std::vector<unsigned> e(n, 0);
      e[v - 1] = 1;
      terms.push_back(std::move(e));
    }
    return terms;
  };
  std::vector<RawTerm> raw;
  for (const auto& a : factor_terms(1, 4)) {
    for (const auto& b : factor_terms(2, 5)) {
      RawTerm t{std::vector<unsigned>(n), 1};
      for (int v = 0; v < n; ++v) t.exponents[v] = a[v] + b[v];
      raw.push_back(std::move(t));
    }
  }
  return multilinearize(f2, n, raw);
}

WitnessReport counterexample_report() {
  WitnessReport report{counterexample_polynomial(), 2, {}, false, "counterexample"};
  report.spec.vanish_weights = {1, 4};
  report.spec.nonvanish_points = {0};
  report.verified = verify_witness(report, 5);
  return report;
}

std::string to_string(ProductForm form) {
  return form == ProductForm::GmTimesSymmetric ? "gm-times-symmetric" : "affine-times-symmetric";
}

MultilinearPoly AffineForm::expand(const PrimeField& field) const {
  const int n = static_cast<int>(linear.size());
  MultilinearPoly out = MultilinearPoly::constant(field, n, constant);
  for (int i = 0; i < n; ++i) out.add_term(std::uint32_t{1} << i, linear[i]);
  return out;
}

std::optional<ProductWitness> search_product_witness(const PrimeField& field, int n, int d, const SymmetricSet& e, int j,
                                                     ProductForm form) {
  if (form == ProductForm::GmTimesSymmetric) {
    const SearchSetup s = validate_search(field, n, d, e, j, 6);
    return search_gm(field, s.n, s.d, e, j);
  }
  const SearchSetup s = validate_search(field, n, d, e, j, 5);
  return search_affine(field, s.n, s.d, e, j);
}

}  // namespace zclosure
