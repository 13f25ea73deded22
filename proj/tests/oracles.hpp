#pragma once

// Slow, direct reference implementations used to cross-check the library.
// Nothing here calls into the code under test except for plain data types.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Pascal triangle rows 0..max_n.
inline std::vector<std::vector<BigInt>> pascal(int max_n) {
  std::vector<std::vector<BigInt>> t(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    t[n].assign(n + 1, 1);
    for (int m = 1; m < n; ++m) t[n][m] = t[n - 1][m - 1] + t[n - 1][m];
  }
  return t;
}

inline std::uint32_t mod(const BigInt& v, std::uint32_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

/// C(w, k) mod p, exact.
inline std::uint32_t binom(int w, int k, std::uint32_t p) {
  if (k < 0 || k > w) return 0;
  BigInt num = 1;
  for (int t = 0; t < k; ++t) num = num * (w - t) / (t + 1);
  return mod(num, p);
}

/// Squarefree monomial masks of degree <= d on n variables.
inline std::vector<std::uint32_t> monomials(int n, int d) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) <= d) out.push_back(m);
  }
  return out;
}

/// Calls visit(values) for every polynomial of degree <= d, where values[x] is
/// the value at the cube point with mask x. p^(#monomials) polynomials.
inline void for_each_polynomial(std::uint32_t p, int n, int d,
                                const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  const auto monos = monomials(n, d);
  const std::uint32_t points = std::uint32_t{1} << n;
  std::vector<std::uint32_t> coeff(monos.size(), 0);
  std::vector<std::uint32_t> values(points, 0);
  while (true) {
    visit(values);
    // Mixed-radix increment, updating the value table incrementally.
    std::size_t pos = 0;
    while (pos < monos.size()) {
      const std::uint32_t old = coeff[pos];
      coeff[pos] = (old + 1) % p;
      const std::uint32_t delta = coeff[pos] >= old ? coeff[pos] - old : coeff[pos] + p - old;
      for (std::uint32_t x = 0; x < points; ++x) {
        if ((x & monos[pos]) == monos[pos]) values[x] = (values[x] + delta) % p;
      }
      if (coeff[pos] != 0) break;
      ++pos;
    }
    if (pos == monos.size()) return;
  }
}

/// Number of degree <= d polynomials vanishing on the listed points.
inline std::uint64_t count_vanishing(std::uint32_t p, int n, int d, const std::vector<std::uint32_t>& points) {
  std::uint64_t count = 0;
  for_each_polynomial(p, n, d, [&](const std::vector<std::uint32_t>& v) {
    for (std::uint32_t x : points) {
      if (v[x] != 0) return;
    }
    ++count;
  });
  return count;
}

/// Degree-d Zariski closure of the symmetric set with weights `e`, by listing
/// every polynomial: a weight survives when all polynomials vanishing on E
/// vanish on every point of that weight.
inline std::vector<bool> zcl(std::uint32_t p, int n, int d, const std::vector<bool>& e) {
  std::vector<bool> keep(n + 1, true);
  for_each_polynomial(p, n, d, [&](const std::vector<std::uint32_t>& v) {
    for (std::uint32_t x = 0; x < v.size(); ++x) {
      if (e[std::popcount(x)] && v[x] != 0) return;
    }
    for (std::uint32_t x = 0; x < v.size(); ++x) {
      if (v[x] != 0) keep[std::popcount(x)] = false;
    }
  });
  return keep;
}

/// Degree-d symmetric closure by listing every coefficient vector c_0..c_d of
/// sum c_k sigma_k.
inline std::vector<bool> symcl(std::uint32_t p, int n, int d, const std::vector<bool>& e) {
  std::vector<std::vector<std::uint32_t>> table(n + 1, std::vector<std::uint32_t>(d + 1));
  for (int w = 0; w <= n; ++w) {
    for (int k = 0; k <= d; ++k) table[w][k] = binom(w, k, p);
  }
  std::vector<bool> keep(n + 1, true);
  std::vector<std::uint32_t> c(d + 1, 0);
  auto value = [&](int w) {
    std::uint64_t s = 0;
    for (int k = 0; k <= d; ++k) s += std::uint64_t{c[k]} * table[w][k];
    return static_cast<std::uint32_t>(s % p);
  };
  while (true) {
    bool vanishes = true;
    for (int w = 0; w <= n && vanishes; ++w) vanishes = !e[w] || value(w) == 0;
    if (vanishes) {
      for (int w = 0; w <= n; ++w) {
        if (value(w) != 0) keep[w] = false;
      }
    }
    int pos = 0;
    while (pos <= d && (c[pos] = (c[pos] + 1) % p) == 0) ++pos;
    if (pos > d) break;
  }
  return keep;
}

/// Weight bitmap to a sorted list.
inline std::vector<int> weights(const std::vector<bool>& e) {
  std::vector<int> out;
  for (int w = 0; w < static_cast<int>(e.size()); ++w) {
    if (e[w]) out.push_back(w);
  }
  return out;
}

/// Bitmap of the weights set in `bits` (bit w for weight w).
inline std::vector<bool> bitmap(int n, std::uint64_t bits) {
  std::vector<bool> out(n + 1);
  for (int w = 0; w <= n; ++w) out[w] = (bits >> w) & 1u;
  return out;
}

/// Evaluates sum_k c_k C(w, k) mod p exactly.
inline std::uint32_t sym_value(const std::vector<std::uint32_t>& sigma, int w, std::uint32_t p) {
  BigInt s = 0;
  for (int k = 0; k < static_cast<int>(sigma.size()); ++k) s += BigInt(sigma[k]) * binom(w, k, p);
  return mod(s, p);
}

}  // namespace oracle
