#include "zclosure/closures.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "zclosure/error.hpp"

namespace zclosure {
namespace {

std::vector<Elem> sigma_row(int w, int d, const PrimeField& field) {
  std::vector<Elem> row(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    row[static_cast<std::size_t>(k)] = binom_mod_p(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(k), field);
  }
  return row;
}

RowSpace symmetric_row_space(const ClosureQuery& q) {
  RowSpace space(q.field, static_cast<std::size_t>(q.d) + 1);
  for (int i : q.e.weights()) {
    if (space.full()) break;
    space.insert(sigma_row(i, q.d, q.field));
  }
  return space;
}

// Row space of the evaluation matrix of underline(E).
RowSpace evaluation_row_space(const ClosureQuery& q, const MonomialIndex& index) {
  RowSpace space(q.field, index.size());
  std::vector<std::uint32_t> support;
  for (int w : q.e.weights()) {
    for (CubePoint x : layer_points(q.n, w)) {
      if (space.full()) return space;
      index.support_of_point(x.bits, support);
      space.insert_support(support);
    }
  }
  return space;
}

bool layer_in_row_space(const RowSpace& space, const MonomialIndex& index, int n, int j) {
  if (space.full()) return true;
  std::vector<std::uint32_t> support;
  for (CubePoint x : layer_points(n, j)) {
    index.support_of_point(x.bits, support);
    if (!space.contains_support(support)) return false;
  }
  return true;
}

}  // namespace

ClosureQuery ClosureQuery::make(PrimeField field, int n, int d, SymmetricSet e) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (d < 0) raise(ErrorKind::InvalidArgument, "degree bound must be nonnegative");
  if (e.n() != n) raise(ErrorKind::DimensionMismatch, "weight set was built for a different n");
  const bool clamped = d > n;
  return ClosureQuery{std::move(field), n, clamped ? n : d, std::move(e), clamped};
}

std::string_view to_string(ClosureMethod method) {
  switch (method) {
    case ClosureMethod::BruteForce: return "bruteforce";
    case ClosureMethod::Symcl: return "symcl";
    case ClosureMethod::LayerFormula: return "layer-formula";
    case ClosureMethod::MainTheorem: return "main-theorem";
  }
  return "unknown";
}

// --- MonomialIndex ---------------------------------------------------------

MonomialIndex::MonomialIndex(int n, int d) : n_(n), d_(std::clamp(d, 0, n)) {
  if (n < 0 || n > 31) raise(ErrorKind::InvalidArgument, "monomial index needs n in [0, 31]");
  binom_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 2, 0));
  for (int a = 0; a <= n; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
  }
  degree_offset_.assign(static_cast<std::size_t>(d_) + 2, 0);
  for (int k = 0; k <= d_; ++k) degree_offset_[k + 1] = degree_offset_[k] + binom_[n][k];
  size_ = static_cast<std::size_t>(degree_offset_[d_ + 1]);
}

std::vector<std::uint32_t> MonomialIndex::masks() const {
  std::vector<std::uint32_t> out;
  out.reserve(size_);
  for (int k = 0; k <= d_; ++k) {
    if (k == 0) {
      out.push_back(0);
      continue;
    }
    for (CubePoint x : LayerPoints(n_, k)) out.push_back(x.bits);
  }
  return out;
}

std::size_t MonomialIndex::column(std::uint32_t mask) const noexcept {
  // Combinatorial number system: numeric order equals colex order within a degree.
  std::uint64_t rank = 0;
  int i = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1, ++i) {
    const int pos = std::countr_zero(m);
    rank += (i + 1 <= pos) ? binom_[pos][i + 1] : 0;
  }
  return static_cast<std::size_t>(degree_offset_[static_cast<std::size_t>(i)] + rank);
}

void MonomialIndex::support_of_point(std::uint32_t x, std::vector<std::uint32_t>& out) const {
  out.clear();
  int bits[32];
  int w = 0;
  for (std::uint32_t m = x; m != 0; m &= m - 1) bits[w++] = std::countr_zero(m);
  // Depth-first walk over subsets of the set bits of size <= d.
  std::uint32_t stack_mask[33];
  int stack_next[33];
  int depth = 0;
  stack_mask[0] = 0;
  stack_next[0] = 0;
  out.push_back(static_cast<std::uint32_t>(column(0)));
  while (depth >= 0) {
    if (depth < d_ && stack_next[depth] < w) {
      const int b = stack_next[depth]++;
      const std::uint32_t m = stack_mask[depth] | (std::uint32_t{1} << bits[b]);
      out.push_back(static_cast<std::uint32_t>(column(m)));
      ++depth;
      stack_mask[depth] = m;
      stack_next[depth] = b + 1;
    } else {
      --depth;
    }
  }
}

// --- closures --------------------------------------------------------------

std::size_t hilbert_dim(const PrimeField& field, int n, int d, std::span<const std::uint32_t> points) {
  require_enumerable(n, "Hilbert dimension");
  const MonomialIndex index(n, d);
  RowSpace space(field, index.size());
  std::vector<std::uint32_t> support;
  for (std::uint32_t x : points) {
    if (space.full()) break;
    if (n < 32 && (x >> n) != 0) raise(ErrorKind::DimensionMismatch, "point has bits beyond n");
    index.support_of_point(x, support);
    space.insert_support(support);
  }
  return space.rank();
}

std::size_t hilbert_dim(const ClosureQuery& q) {
  require_enumerable(q.n, "Hilbert dimension");
  return evaluation_row_space(q, MonomialIndex(q.n, q.d)).rank();
}

ClosureResult zcl_bruteforce(const ClosureQuery& q) {
  require_enumerable(q.n, "brute-force closure");
  const MonomialIndex index(q.n, q.d);
  const RowSpace space = evaluation_row_space(q, index);
  SymmetricSet closure = q.e;
  for (int j = 0; j <= q.n; ++j) {
    if (!q.e.contains(j) && layer_in_row_space(space, index, q.n, j)) closure.insert(j);
  }
  return {std::move(closure), ClosureMethod::BruteForce, space.rank()};
}

ClosureResult symcl(const ClosureQuery& q) {
  const RowSpace space = symmetric_row_space(q);
  SymmetricSet closure = q.e;
  for (int j = 0; j <= q.n; ++j) {
    if (!q.e.contains(j) && space.contains(sigma_row(j, q.d, q.field))) closure.insert(j);
  }
  return {std::move(closure), ClosureMethod::Symcl, std::nullopt};
}

ClosureResult layer_zcl(const ClosureQuery& q) {
  if (q.e.size() != 1) raise(ErrorKind::InvalidArgument, "layer closure needs exactly one weight");
  const int i = q.e.weights().front();
  if (i < q.d || i > q.n - q.d) return {q.e, ClosureMethod::LayerFormula, std::nullopt};
  const unsigned l = ell_p(static_cast<std::uint64_t>(q.d), q.field);
  return {e_oplus(q.e, int_pow(q.field.p(), l)), ClosureMethod::LayerFormula, std::nullopt};
}

bool main_theorem_applies(const ClosureQuery& q) {
  const unsigned l = ell_p(static_cast<std::uint64_t>(q.d), q.field);
  const std::uint64_t modulus = int_pow(q.field.p(), l);
  // modulus > n already rules the theorem out and keeps 4 * modulus from overflowing.
  if (modulus > static_cast<std::uint64_t>(q.n) || 4 * modulus - 1 > static_cast<std::uint64_t>(q.n)) return false;
  return q.e.is_subset_of(SymmetricSet::interval(q.n, q.d, q.n - q.d));
}

ClosureResult zcl_fast(const ClosureQuery& q) {
  if (!main_theorem_applies(q)) {
    const unsigned l = ell_p(static_cast<std::uint64_t>(q.d), q.field);
    raise(ErrorKind::PreconditionUnmet, "main theorem needs n >= 4 p^l - 1 (p^l = " +
                                            std::to_string(int_pow(q.field.p(), l)) + ", n = " + std::to_string(q.n) +
                                            ") and E inside [d, n-d]");
  }
  ClosureResult result = symcl(q);
  result.method = ClosureMethod::MainTheorem;
  return result;
}

ClosureResult zcl_auto(const ClosureQuery& q) { return main_theorem_applies(q) ? zcl_fast(q) : zcl_bruteforce(q); }

std::optional<TopLayerShape> top_layer_shape(int n, const PrimeField& field) {
  if (n < 1) return std::nullopt;
  std::uint64_t m = static_cast<std::uint64_t>(n) + 1;
  const std::uint64_t p = field.p();
  unsigned v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  if (m >= 2 && m <= p - 1) return TopLayerShape{static_cast<unsigned>(m - 1), v};
  if (m == 1 && v >= 1) return TopLayerShape{static_cast<unsigned>(p - 1), v - 1};
  return std::nullopt;
}

TopLayerCheck top_layer_equivalence_check(const ClosureQuery& q) {
  const auto shape = top_layer_shape(q.n, q.field);
  if (!shape) {
    raise(ErrorKind::InvalidShape, "n = " + std::to_string(q.n) + " is not of the form (k+1) p^r - 1 with k in [1, p-1]");
  }
  require_enumerable(q.n, "top-layer check");
  TopLayerCheck out;
  out.shape = *shape;

  const MonomialIndex index(q.n, q.d);
  const RowSpace cube_space = evaluation_row_space(q, index);
  out.via_zcl = q.e.contains(q.n) || layer_in_row_space(cube_space, index, q.n, q.n);

  const RowSpace sym_space = symmetric_row_space(q);
  out.via_symcl = q.e.contains(q.n) || sym_space.contains(sigma_row(q.n, q.d, q.field));
  return out;
}

}  // namespace zclosure
