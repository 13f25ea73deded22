#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "zclosure/error.hpp"
#include "zclosure/polynomials.hpp"

using namespace zclosure;

namespace {

MultilinearPoly random_poly(const PrimeField& f, int n, std::mt19937_64& rng) {
  MultilinearPoly out(f, n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (rng() % 3 == 0) out.add_term(m, static_cast<Elem>(rng() % f.p()));
  }
  return out;
}

std::vector<Elem> random_sigma(const PrimeField& f, int n, std::mt19937_64& rng) {
  std::vector<Elem> c(n + 1);
  for (Elem& x : c) x = static_cast<Elem>(rng() % f.p());
  return c;
}

}  // namespace

TEST_CASE("multilinear products and sums agree pointwise") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int n = 0; n <= 6; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_poly(f, n, rng);
        const auto b = random_poly(f, n, rng);
        const auto va = a.value_table();
        const auto vb = b.value_table();
        const auto prod = (a * b).value_table();
        const auto sum = (a + b).value_table();
        const auto diff = (a - b).value_table();
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
          CHECK(prod[x] == (va[x] * vb[x]) % p);
          CHECK(sum[x] == (va[x] + vb[x]) % p);
          CHECK(diff[x] == (va[x] + p - vb[x]) % p);
          CHECK(a.evaluate({n, x}) == va[x]);
        }
      }
    }
  }
}

TEST_CASE("degree of the zero polynomial is not a number") {
  const PrimeField f(3);
  MultilinearPoly z(f, 3);
  CHECK_FALSE(z.degree().has_value());
  CHECK(degree_at_most(z.degree(), 0));
  z.add_term(0b101, 2);
  CHECK(z.degree() == 2);
  z.add_term(0b101, 1);
  CHECK(z.is_zero());
  CHECK_FALSE(SymmetricPoly(f, 4).degree().has_value());
}

TEST_CASE("multilinearization reduces exponents") {
  const PrimeField f(2);
  // (X1 + X2)^2 = X1^2 + 2 X1 X2 + X2^2 = X1 + X2 over F_2.
  const std::vector<RawTerm> terms{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
  const auto g = multilinearize(f, 2, terms);
  CHECK(g == MultilinearPoly::variable(f, 2, 1) + MultilinearPoly::variable(f, 2, 2));
  const std::vector<RawTerm> bad{{{1}, 1}};
  CHECK_THROWS_AS(multilinearize(f, 2, bad), Error);
}

TEST_CASE("generalized monomials") {
  const PrimeField f(3);
  for (std::uint32_t s = 0; s < 16; ++s) {
    for (std::uint32_t t = 0; t < 16; ++t) {
      if (s & t) {
        CHECK_THROWS_AS(make_generalized_monomial(4, s, t), Error);
        continue;
      }
      const auto gm = make_generalized_monomial(4, s, t);
      const auto values = gm.expand(f).value_table();
      for (std::uint32_t x = 0; x < 16; ++x) CHECK(values[x] == (gm.evaluate(x) ? 1u : 0u));
      CHECK(gm.expand(f).degree().value_or(0) == gm.degree());
    }
  }
}

TEST_CASE("symmetric polynomials: weight values, expansion, round trips") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int n = 0; n <= 8; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_sigma(f, n, rng);
        const SymmetricPoly g(f, n, c);
        const auto values = sym_weight_values(g);
        for (int w = 0; w <= n; ++w) CHECK(values[w] == oracle::sym_value(c, w, p));
        CHECK(weights_to_sigma_coeffs(f, values) == g);
        const auto table = sym_to_multilinear(g).value_table();
        for (std::uint32_t x = 0; x < (1u << n); ++x) CHECK(table[x] == values[std::popcount(x)]);
        CHECK(sym_to_multilinear(g).degree() == g.degree());
      }
    }
  }
  CHECK_THROWS_AS(sym_eval_at_weight(SymmetricPoly::sigma(PrimeField(2), 3, 1), 4), Error);
}

TEST_CASE("shifted polynomials move the zero set by one layer") {
  std::mt19937_64 rng(13);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int n = 1; n <= 8; ++n) {
      for (int trial = 0; trial < 30; ++trial) {
        const SymmetricPoly g(f, n, random_sigma(f, n, rng));
        const auto v = sym_weight_values(g);
        const auto up = sym_weight_values(f_plus(g));
        const auto down = sym_weight_values(f_minus(g));
        for (int w = 0; w + 1 <= n; ++w) {
          CHECK(up[w + 1] == v[w]);
          CHECK(down[w] == v[w + 1]);
        }
        CHECK(f_minus(f_plus(g)) == g);
        CHECK(f_plus(f_minus(g)) == g);
        CHECK(f_plus(g).degree() == g.degree());
        CHECK(f_minus(g).degree() == g.degree());
      }
    }
  }
}
