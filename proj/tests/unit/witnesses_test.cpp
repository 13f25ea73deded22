#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "zclosure/closures.hpp"
#include "zclosure/error.hpp"
#include "zclosure/witnesses.hpp"

using namespace zclosure;

namespace {

// C(z, u) for any integer z, exact.
oracle::BigInt general_binom(std::int64_t z, int u) {
  oracle::BigInt num = 1;
  oracle::BigInt den = 1;
  for (int t = 0; t < u; ++t) {
    num *= z - t;
    den *= t + 1;
  }
  return num / den;
}

std::uint32_t value_at(const SymmetricPoly& f, int w) { return oracle::sym_value(f.coeffs(), w, f.field().p()); }

// Direct check that `f` is a witness for j against E: degree <= d, zero on
// every point of E, nonzero somewhere on layer j.
bool is_witness(const MultilinearPoly& f, int d, const SymmetricSet& e, int j) {
  if (!degree_at_most(f.degree(), d)) return false;
  bool hit = false;
  for (std::uint32_t x = 0; x < (1u << f.n()); ++x) {
    const Elem v = f.evaluate({f.n(), x});
    if (e.contains(std::popcount(x)) && v != 0) return false;
    if (std::popcount(x) == j && v != 0) hit = true;
  }
  return hit;
}

}  // namespace

TEST_CASE("interpolation hits every node exactly") {
  std::mt19937_64 rng(5);
  for (std::int64_t first : {-7, -1, 0, 1, 4, 30}) {
    for (std::size_t len = 1; len <= 8; ++len) {
      std::vector<std::int64_t> values(len);
      for (auto& v : values) v = static_cast<std::int64_t>(rng() % 41) - 20;
      const auto c = newton_interpolate(first, values);
      REQUIRE(c.size() == len);
      for (std::size_t z = 0; z < len; ++z) {
        oracle::BigInt q = 0;
        for (std::size_t u = 0; u < len; ++u) q += oracle::BigInt(c[u]) * general_binom(first + static_cast<std::int64_t>(z), static_cast<int>(u));
        CHECK(q == values[z]);
      }
    }
  }
  CHECK_THROWS_AS(newton_interpolate(0, std::vector<std::int64_t>{}), Error);
  // Large alternating data overflows 64 bits in the differences.
  std::vector<std::int64_t> wild(70);
  for (std::size_t z = 0; z < wild.size(); ++z) wild[z] = z % 2 == 0 ? (std::int64_t{1} << 60) : -(std::int64_t{1} << 60);
  try {
    newton_interpolate(0, wild);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Internal);
  }
}

TEST_CASE("h_i is the indicator of the residue class of i") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    const int n = 30;
    for (int i = 0; i <= n; ++i) {
      const int m = static_cast<int>(int_pow(p, ell_p(i, f)));
      const SymmetricPoly h = build_h(i, f, n);
      for (int w = 0; w <= n; ++w) CHECK(value_at(h, w) == (w % m == i % m ? 1u : 0u));
      CHECK(degree_at_most(h.degree(), m - 1));
      const auto report = h_report(i, f, n);
      CHECK(report.verified);
      CHECK(report.claimed_degree == m - 1);
    }
  }
}

TEST_CASE("r_ij separates j from the earlier members of its class") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    const int n = 30;
    for (int i = 0; i <= n; ++i) {
      const int m = static_cast<int>(int_pow(p, ell_p(i, f)));
      for (int j = i + 1; j <= n; ++j) {
        if ((j - i) % m != 0) {
          CHECK_THROWS_AS(build_r(i, j, f, n), Error);
          continue;
        }
        const SymmetricPoly r = build_r(i, j, f, n);
        for (int w = i + m; w < j; w += m) CHECK(value_at(r, w) == 0);
        CHECK(value_at(r, j) != 0);
        CHECK(degree_at_most(r.degree(), j - i - m));
        CHECK(r_report(i, j, f, n).verified);
      }
    }
  }
  try {
    build_r(3, 3, PrimeField(2), 5);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPair);
  }
  CHECK_THROWS_AS(build_r(1, 9, PrimeField(2), 5), Error);
}

TEST_CASE("counterexample polynomial") {
  const auto f = counterexample_polynomial();
  for (std::uint32_t x = 0; x < 32; ++x) {
    auto bit = [&](int v) { return (x >> (v - 1)) & 1u; };
    const std::uint32_t a = 1 + bit(1) + bit(2) + bit(3) + bit(4);
    const std::uint32_t b = 1 + bit(2) + bit(3) + bit(4) + bit(5);
    CHECK(f.evaluate({5, x}) == (a * b) % 2);
  }
  CHECK(f.degree() == 2);
  CHECK(f.terms().size() == 13);
  const auto report = counterexample_report();
  CHECK(report.verified);
  CHECK(is_witness(f, 2, SymmetricSet::from_weights(5, {1, 4}), 0));

  // Breaking the spec must break verification.
  WitnessReport tampered = report;
  tampered.spec.vanish_weights.push_back(2);
  CHECK_FALSE(verify_witness(tampered, 5));
  tampered = report;
  tampered.claimed_degree = 1;
  CHECK_FALSE(verify_witness(tampered, 5));
  tampered = report;
  tampered.spec.nonvanish_points = {0b00011};
  CHECK_FALSE(verify_witness(tampered, 5));
  CHECK_FALSE(verify_witness(report, 4));
}

TEST_CASE("product-form searches are sound") {
  const PrimeField f(2);
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 2; ++d) {
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
        const auto e = SymmetricSet::from_weights(n, oracle::weights(oracle::bitmap(n, bits)));
        const auto closure = zcl_bruteforce(ClosureQuery::make(f, n, d, e)).closure;
        for (int j = 0; j <= n; ++j) {
          if (e.contains(j)) continue;
          for (ProductForm form : {ProductForm::GmTimesSymmetric, ProductForm::AffineTimesSymmetric}) {
            const auto found = search_product_witness(f, n, d, e, j, form);
            if (closure.contains(j)) {
              CHECK_FALSE(found.has_value());
              continue;
            }
            if (!found) continue;
            const auto& poly = std::get<MultilinearPoly>(found->report.polynomial);
            CHECK(is_witness(poly, d, e, j));
            CHECK(found->form == form);
          }
        }
      }
    }
  }
}

TEST_CASE("searches on the counterexample instance") {
  const PrimeField f(2);
  const auto e = SymmetricSet::from_weights(5, {1, 4});
  CHECK_FALSE(search_product_witness(f, 5, 2, e, 0, ProductForm::GmTimesSymmetric).has_value());
  const auto affine = search_product_witness(f, 5, 2, e, 0, ProductForm::AffineTimesSymmetric);
  REQUIRE(affine.has_value());
  CHECK(is_witness(std::get<MultilinearPoly>(affine->report.polynomial), 2, e, 0));
  // The factors and cofactor multiply back to the reported polynomial.
  MultilinearPoly product = sym_to_multilinear(affine->cofactor);
  for (const AffineForm& a : affine->affine_factors) product = product * a.expand(f);
  CHECK(product == std::get<MultilinearPoly>(affine->report.polynomial));

  CHECK_THROWS_AS(search_product_witness(PrimeField(3), 4, 1, SymmetricSet::from_weights(4, {1}), 0,
                                         ProductForm::AffineTimesSymmetric),
                  Error);
  try {
    search_product_witness(f, 7, 2, SymmetricSet::from_weights(7, {1}), 0, ProductForm::GmTimesSymmetric);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::SizeCapExceeded);
  }
}

TEST_CASE("gm search finds witnesses where a single layer suffices") {
  // d = 1, n = 4, E = {2} over F_3: sigma_1 - 2 already separates layers 1 and 3.
  const PrimeField f(3);
  const auto e = SymmetricSet::from_weights(4, {2});
  for (int j : {1, 3}) {
    const auto found = search_product_witness(f, 4, 1, e, j, ProductForm::GmTimesSymmetric);
    REQUIRE(found.has_value());
    REQUIRE(found->monomial.has_value());
    MultilinearPoly product = found->monomial->expand(f) * sym_to_multilinear(found->cofactor);
    CHECK(product == std::get<MultilinearPoly>(found->report.polynomial));
    CHECK(is_witness(product, 1, e, j));
  }
}
