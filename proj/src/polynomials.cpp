#include "zclosure/polynomials.hpp"

#include <string>

#include "zclosure/error.hpp"

namespace zclosure {
namespace {

constexpr int kMaxMaskBits = 32;

void require_dimension(int n) {
  if (n < 0 || n > kMaxMaskBits) {
    raise(ErrorKind::InvalidArgument, "multilinear dimension must lie in [0, 32], got " + std::to_string(n));
  }
}

std::uint32_t full_mask(int n) { return n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1); }

}  // namespace

// --- MultilinearPoly -------------------------------------------------------

MultilinearPoly::MultilinearPoly(PrimeField field, int n) : field_(std::move(field)), n_(n) { require_dimension(n); }

MultilinearPoly MultilinearPoly::constant(PrimeField field, int n, Elem c) {
  MultilinearPoly out(std::move(field), n);
  out.add_term(0, c);
  return out;
}

MultilinearPoly MultilinearPoly::variable(PrimeField field, int n, int i) {
  if (i < 1 || i > n) raise(ErrorKind::InvalidArgument, "variable index " + std::to_string(i) + " outside [1, n]");
  MultilinearPoly out(std::move(field), n);
  out.add_term(std::uint32_t{1} << (i - 1), 1);
  return out;
}

Degree MultilinearPoly::degree() const noexcept {
  Degree deg;
  for (const auto& [mask, c] : terms_) {
    const int d = std::popcount(mask);
    if (!deg || d > *deg) deg = d;
  }
  return deg;
}

Elem MultilinearPoly::coefficient(std::uint32_t mask) const noexcept {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? 0 : it->second;
}

void MultilinearPoly::add_term(std::uint32_t mask, Elem c) {
  if ((mask & ~full_mask(n_)) != 0) raise(ErrorKind::DimensionMismatch, "monomial mask uses variables beyond n");
  c = field_.reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Elem MultilinearPoly::evaluate(const CubePoint& x) const {
  if (x.n != n_) raise(ErrorKind::DimensionMismatch, "point dimension differs from polynomial dimension");
  Elem acc = 0;
  for (const auto& [mask, c] : terms_) {
    if ((mask & ~x.bits) == 0) acc = field_.add(acc, c);
  }
  return acc;
}

std::vector<Elem> MultilinearPoly::value_table() const {
  require_enumerable(n_, "value table");
  const std::size_t size = std::size_t{1} << n_;
  std::vector<Elem> table(size, 0);
  for (const auto& [mask, c] : terms_) table[mask] = c;
  for (int bit = 0; bit < n_; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t x = 0; x < size; ++x) {
      if (x & b) table[x] = field_.add(table[x], table[x ^ b]);
    }
  }
  return table;
}

void MultilinearPoly::require_compatible(const MultilinearPoly& other) const {
  if (!(field_ == other.field_) || n_ != other.n_) {
    raise(ErrorKind::DimensionMismatch, "polynomials live over different fields or dimensions");
  }
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& other) const {
  require_compatible(other);
  MultilinearPoly out = *this;
  for (const auto& [mask, c] : other.terms_) out.add_term(mask, c);
  return out;
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& other) const {
  require_compatible(other);
  MultilinearPoly out = *this;
  for (const auto& [mask, c] : other.terms_) out.add_term(mask, field_.neg(c));
  return out;
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& other) const {
  require_compatible(other);
  MultilinearPoly out(field_, n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma | mb, field_.mul(ca, cb));
  }
  return out;
}

MultilinearPoly MultilinearPoly::scaled(Elem c) const {
  MultilinearPoly out(field_, n_);
  for (const auto& [mask, coeff] : terms_) out.add_term(mask, field_.mul(coeff, field_.reduce(c)));
  return out;
}

MultilinearPoly multilinearize(const PrimeField& field, int n, std::span<const RawTerm> terms) {
  MultilinearPoly out(field, n);
  for (const RawTerm& term : terms) {
    if (term.exponents.size() != static_cast<std::size_t>(n)) {
      raise(ErrorKind::DimensionMismatch, "exponent vector length differs from n");
    }
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (term.exponents[static_cast<std::size_t>(i)] > 0) mask |= std::uint32_t{1} << i;
    }
    out.add_term(mask, field.from_int(term.coefficient));
  }
  return out;
}

// --- generalized monomials -------------------------------------------------

GeneralizedMonomial make_generalized_monomial(int n, std::uint32_t s, std::uint32_t t) {
  require_dimension(n);
  if ((s & t) != 0) raise(ErrorKind::InvalidArgument, "generalized monomial needs disjoint S and T");
  if (((s | t) & ~full_mask(n)) != 0) raise(ErrorKind::DimensionMismatch, "index set exceeds n");
  return {n, s, t};
}

MultilinearPoly GeneralizedMonomial::expand(const PrimeField& field) const {
  // prod_{t in T} (1 - X_t) = sum_{U subset T} (-1)^|U| X^U.
  MultilinearPoly out(field, n);
  std::uint32_t u = 0;
  do {
    out.add_term(s | u, (std::popcount(u) % 2 == 0) ? 1 : field.neg(1));
    u = (u - t) & t;
  } while (u != 0);
  return out;
}

// --- SymmetricPoly ---------------------------------------------------------

SymmetricPoly::SymmetricPoly(PrimeField field, int n)
    : field_(std::move(field)), n_(n), coeffs_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "dimension must be nonnegative");
}

SymmetricPoly::SymmetricPoly(PrimeField field, int n, std::vector<Elem> sigma_coeffs)
    : field_(std::move(field)), n_(n), coeffs_(std::move(sigma_coeffs)) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "dimension must be nonnegative");
  if (coeffs_.size() > static_cast<std::size_t>(n) + 1) {
    raise(ErrorKind::DimensionMismatch, "more sigma coefficients than n + 1");
  }
  coeffs_.resize(static_cast<std::size_t>(n) + 1, 0);
  for (Elem& c : coeffs_) c = field_.reduce(c);
}

SymmetricPoly SymmetricPoly::sigma(PrimeField field, int n, int k) {
  if (k < 0 || k > n) raise(ErrorKind::InvalidArgument, "sigma index outside [0, n]");
  SymmetricPoly out(std::move(field), n);
  out.coeffs_[static_cast<std::size_t>(k)] = 1;
  return out;
}

bool SymmetricPoly::is_zero() const noexcept {
  for (Elem c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Degree SymmetricPoly::degree() const noexcept {
  for (int k = n_; k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  }
  return std::nullopt;
}

SymmetricPoly SymmetricPoly::operator+(const SymmetricPoly& other) const {
  if (!(field_ == other.field_) || n_ != other.n_) raise(ErrorKind::DimensionMismatch, "incompatible symmetric polynomials");
  SymmetricPoly out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = field_.add(out.coeffs_[k], other.coeffs_[k]);
  return out;
}

SymmetricPoly SymmetricPoly::scaled(Elem c) const {
  SymmetricPoly out = *this;
  for (Elem& v : out.coeffs_) v = field_.mul(v, field_.reduce(c));
  return out;
}

Elem eval_multilinear(const MultilinearPoly& poly, const CubePoint& x) { return poly.evaluate(x); }

Elem sym_eval_at_weight(const SymmetricPoly& f, int w) {
  if (w < 0 || w > f.n()) raise(ErrorKind::InvalidWeight, "weight " + std::to_string(w) + " outside [0, n]");
  const PrimeField& field = f.field();
  Elem acc = 0;
  for (int k = 0; k <= w; ++k) {
    const Elem c = f.coeff(k);
    if (c != 0) acc = field.add(acc, field.mul(c, binom_mod_p(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(k), field)));
  }
  return acc;
}

std::vector<Elem> sym_weight_values(const SymmetricPoly& f) {
  std::vector<Elem> values(static_cast<std::size_t>(f.n()) + 1);
  for (int w = 0; w <= f.n(); ++w) values[static_cast<std::size_t>(w)] = sym_eval_at_weight(f, w);
  return values;
}

SymmetricPoly weights_to_sigma_coeffs(const PrimeField& field, std::span<const Elem> values) {
  if (values.empty()) raise(ErrorKind::InvalidArgument, "need at least one weight value");
  const int n = static_cast<int>(values.size()) - 1;
  std::vector<Elem> c(values.size(), 0);
  for (int w = 0; w <= n; ++w) {
    // values[w] = c_w + sum_{k<w} c_k C(w, k) since C(w, w) = 1.
    Elem acc = field.reduce(values[static_cast<std::size_t>(w)]);
    for (int k = 0; k < w; ++k) {
      const Elem ck = c[static_cast<std::size_t>(k)];
      if (ck != 0) {
        acc = field.sub(acc, field.mul(ck, binom_mod_p(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(k), field)));
      }
    }
    c[static_cast<std::size_t>(w)] = acc;
  }
  return SymmetricPoly(field, n, std::move(c));
}

SymmetricPoly f_plus(const SymmetricPoly& f) {
  // c+_u = sum_{v >= u} (-1)^(v-u) c_v, i.e. s_u = c_u - s_{u+1}.
  const PrimeField& field = f.field();
  std::vector<Elem> out(f.coeffs().size(), 0);
  Elem next = 0;
  for (int u = f.n(); u >= 0; --u) {
    next = field.sub(f.coeff(u), next);
    out[static_cast<std::size_t>(u)] = next;
  }
  return SymmetricPoly(field, f.n(), std::move(out));
}

SymmetricPoly f_minus(const SymmetricPoly& f) {
  // Q(Z + 1) = sum_u c_u (C(Z, u) + C(Z, u - 1)), so c-_u = c_u + c_{u+1}.
  const PrimeField& field = f.field();
  std::vector<Elem> out(f.coeffs().size(), 0);
  for (int u = 0; u <= f.n(); ++u) {
    out[static_cast<std::size_t>(u)] = u < f.n() ? field.add(f.coeff(u), f.coeff(u + 1)) : f.coeff(u);
  }
  return SymmetricPoly(field, f.n(), std::move(out));
}

MultilinearPoly sym_to_multilinear(const SymmetricPoly& f) {
  require_enumerable(f.n(), "sigma-basis expansion");
  MultilinearPoly out(f.field(), f.n());
  const std::uint32_t end = std::uint32_t{1} << f.n();
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    const Elem c = f.coeff(std::popcount(mask));
    if (c != 0) out.add_term(mask, c);
  }
  return out;
}

}  // namespace zclosure
