#include <doctest.h>

#include "oracles.hpp"
#include "zclosure/error.hpp"
#include "zclosure/field.hpp"

using namespace zclosure;

TEST_CASE("field arithmetic agrees with plain modular arithmetic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 46337u}) {
    const PrimeField f(p);
    for (std::uint64_t a = 0; a < std::min<std::uint64_t>(p, 60); ++a) {
      for (std::uint64_t b = 0; b < std::min<std::uint64_t>(p, 60); ++b) {
        const auto x = static_cast<Elem>(p - 1 - a);
        const auto y = static_cast<Elem>(b);
        CHECK(f.add(x, y) == (std::uint64_t{x} + y) % p);
        CHECK(f.sub(x, y) == (std::uint64_t{x} + p - y) % p);
        CHECK(f.mul(x, y) == (std::uint64_t{x} * y) % p);
      }
      if (a % p != 0) CHECK(f.mul(static_cast<Elem>(a), f.inv(static_cast<Elem>(a))) == 1);
    }
    CHECK(f.from_int(-1) == p - 1);
    CHECK(f.reduce(~std::uint64_t{0}) == (~std::uint64_t{0}) % p);
  }
}

TEST_CASE("field rejects non-primes and oversized primes") {
  for (std::uint32_t bad : {0u, 1u, 4u, 9u, 46341u, 65537u}) {
    CHECK_THROWS_AS(PrimeField{bad}, Error);
  }
  CHECK_THROWS_AS(PrimeField(3).inv(0), Error);
}

TEST_CASE("p-ary digits and ell_p") {
  const PrimeField f3(3);
  CHECK(p_ary_digits(0, f3).digits.empty());
  CHECK(p_ary_digits(11, f3).digits == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(p_ary_digit(11, 2, f3) == 1);
  CHECK(p_ary_digit(11, 7, f3) == 0);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (std::uint64_t d = 0; d < 200; ++d) {
      unsigned l = 0;
      while (int_pow(p, l) <= d) ++l;  // smallest l with d <= p^l - 1
      CHECK(ell_p(d, f) == l);
    }
  }
  CHECK(int_pow(2, 70) == ~std::uint64_t{0});
}

TEST_CASE("Lucas binomials match exact binomials") {
  const auto exact = oracle::pascal(300);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int n = 0; n <= 300; ++n) {
      for (int m = 0; m <= 300; ++m) {
        const std::uint32_t want = m <= n ? oracle::mod(exact[n][m], p) : 0;
        REQUIRE(binom_mod_p(n, m, f) == want);
      }
    }
  }
  CHECK(binom_mod_p(4, 2, PrimeField(2)) == oracle::binom(4, 2, 2));
}
