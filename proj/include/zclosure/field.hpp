#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace zclosure {

/// Field elements are canonical representatives in [0, p-1].
using Elem = std::uint32_t;

/// The prime field F_p for 2 <= p <= 46337.
///
/// The bound keeps a*b + c below 2^32 for reduced operands, so all
/// arithmetic stays in native 64-bit integers. Factorial tables for the
/// digit binomials used by Lucas's theorem are built once and shared
/// between copies.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 46337;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem add(Elem a, Elem b) const noexcept {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept { return reduce(std::uint64_t{a} * b); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Fermat inverse a^(p-2). Precondition: a != 0.
  Elem inv(Elem a) const;

  /// Maps an arbitrary signed integer to its residue.
  Elem from_int(std::int64_t v) const noexcept;

  /// x mod p for any 64-bit x (Barrett reduction).
  Elem reduce(std::uint64_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<Elem>(r);
  }

  /// C(a, b) mod p for digits a, b in [0, p-1].
  Elem digit_binom(std::uint32_t a, std::uint32_t b) const noexcept;

  friend bool operator==(const PrimeField& x, const PrimeField& y) noexcept { return x.p_ == y.p_; }

 private:
  struct Tables {
    std::vector<Elem> fact;
    std::vector<Elem> inv_fact;
  };

  std::uint32_t p_;
  std::uint64_t barrett_;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Base-p expansion with trailing zero digits trimmed; zero has no digits.
struct PAryDigits {
  std::uint64_t value = 0;
  std::vector<std::uint32_t> digits;

  /// Digit t, or 0 past the most significant digit.
  std::uint32_t digit(std::size_t t) const noexcept { return t < digits.size() ? digits[t] : 0; }
};

PAryDigits p_ary_digits(std::uint64_t n, const PrimeField& field);

/// The t-th base-p digit of n.
std::uint32_t p_ary_digit(std::uint64_t n, std::size_t t, const PrimeField& field) noexcept;

/// ceil(log_p(d + 1)): the unique l with p^(l-1) <= d <= p^l - 1, and 0 for d = 0.
unsigned ell_p(std::uint64_t d, const PrimeField& field) noexcept;

/// p^e, saturating at UINT64_MAX.
std::uint64_t int_pow(std::uint64_t p, unsigned e) noexcept;

/// C(n, m) mod p by Lucas's theorem.
Elem binom_mod_p(std::uint64_t n, std::uint64_t m, const PrimeField& field) noexcept;

}  // namespace zclosure
