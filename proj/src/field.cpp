#include "zclosure/field.hpp"

#include <limits>
#include <string>

#include "zclosure/error.hpp"

namespace zclosure {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime || !is_prime(p)) {
    raise(ErrorKind::InvalidArgument,
          "p = " + std::to_string(p) + " must be a prime no larger than " + std::to_string(kMaxPrime));
  }
  barrett_ = std::numeric_limits<std::uint64_t>::max() / p_;

  auto tables = std::make_shared<Tables>();
  tables->fact.resize(p_);
  tables->inv_fact.resize(p_);
  tables->fact[0] = 1;
  for (std::uint32_t i = 1; i < p_; ++i) tables->fact[i] = mul(tables->fact[i - 1], i);
  tables->inv_fact[p_ - 1] = inv(tables->fact[p_ - 1]);
  for (std::uint32_t i = p_ - 1; i > 0; --i) tables->inv_fact[i - 1] = mul(tables->inv_fact[i], i);
  tables_ = std::move(tables);
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) raise(ErrorKind::InvalidArgument, "zero has no inverse");
  return pow(a, p_ - 2);
}

Elem PrimeField::from_int(std::int64_t v) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

Elem PrimeField::digit_binom(std::uint32_t a, std::uint32_t b) const noexcept {
  if (b > a) return 0;
  const auto& t = *tables_;
  return mul(t.fact[a], mul(t.inv_fact[b], t.inv_fact[a - b]));
}

PAryDigits p_ary_digits(std::uint64_t n, const PrimeField& field) {
  PAryDigits out;
  out.value = n;
  const std::uint64_t p = field.p();
  while (n > 0) {
    out.digits.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  }
  return out;
}

std::uint32_t p_ary_digit(std::uint64_t n, std::size_t t, const PrimeField& field) noexcept {
  const std::uint64_t p = field.p();
  for (std::size_t i = 0; i < t && n > 0; ++i) n /= p;
  return static_cast<std::uint32_t>(n % p);
}

unsigned ell_p(std::uint64_t d, const PrimeField& field) noexcept {
  // Smallest l with p^l > d.
  unsigned l = 0;
  std::uint64_t reach = d;
  while (reach > 0) {
    reach /= field.p();
    ++l;
  }
  return l;
}

std::uint64_t int_pow(std::uint64_t p, unsigned e) noexcept {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

Elem binom_mod_p(std::uint64_t n, std::uint64_t m, const PrimeField& field) noexcept {
  if (m > n) return 0;
  const std::uint64_t p = field.p();
  Elem acc = 1;
  while (m > 0) {
    const auto nd = static_cast<std::uint32_t>(n % p);
    const auto md = static_cast<std::uint32_t>(m % p);
    if (md > nd) return 0;
    acc = field.mul(acc, field.digit_binom(nd, md));
    n /= p;
    m /= p;
  }
  return acc;
}

}  // namespace zclosure
