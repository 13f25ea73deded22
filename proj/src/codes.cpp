#include "zclosure/codes.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "zclosure/error.hpp"

namespace zclosure {
namespace {

constexpr int kRmGeneratorCap = 12;
constexpr int kRmDualityCap = 10;
constexpr std::uint64_t kGridCap = 4096;

void require_cap(int n, int cap, const char* what) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (n > cap) {
    raise(ErrorKind::SizeCapExceeded, std::string(what) + " is capped at n = " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

FpMatrix signed_generator(const PrimeField& field, int n, int degree) {
  const std::uint32_t points = std::uint32_t{1} << n;
  FpMatrix out(field, 0, points);
  if (degree < 0) return out;
  const RMCode code = rm_generator(field, n, degree);
  std::vector<Elem> row(points);
  for (std::size_t r = 0; r < code.generator.rows(); ++r) {
    for (std::uint32_t a = 0; a < points; ++a) {
      const Elem v = code.generator.at(r, a);
      row[a] = (std::popcount(a) & 1) ? field.neg(v) : v;
    }
    out.append_row(row);
  }
  return out;
}

// Every row of `a` lies in the row space of `b`.
bool rows_inside(const FpMatrix& a, const FpMatrix& b) {
  RowSpace space(b.field(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) space.insert(b.row(r));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (!space.contains(a.row(r))) return false;
  }
  return true;
}

std::uint64_t weighted_degree(std::span<const unsigned> alpha, std::uint64_t p) {
  std::uint64_t total = 0;
  std::uint64_t scale = 1;
  for (unsigned a : alpha) {
    total += a * scale;
    scale *= p;
  }
  return total;
}

// Backtracking over the free coordinates of a nullspace basis (each free
// coordinate equals its own multiplier) so that every coordinate is nonzero.
class NonzeroCombination {
 public:
  NonzeroCombination(const PrimeField& field, std::vector<std::vector<Elem>> basis, std::size_t size)
      : field_(field), basis_(std::move(basis)), size_(size) {
    // A coordinate can be tested once every basis vector touching it is fixed.
    ready_after_.assign(basis_.size() + 1, {});
    for (std::size_t c = 0; c < size_; ++c) {
      std::size_t last = 0;
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        if (basis_[b][c] != 0) last = b + 1;
      }
      ready_after_[last].push_back(c);
    }
    lambda_.assign(basis_.size(), 0);
  }

  std::optional<std::vector<Elem>> solve() {
    if (!ready_after_[0].empty()) return std::nullopt;  // coordinates no combination can reach
    if (!search(0)) return std::nullopt;
    std::vector<Elem> out(size_, 0);
    for (std::size_t c = 0; c < size_; ++c) out[c] = value_at(c);
    return out;
  }

 private:
  Elem value_at(std::size_t c) const {
    Elem v = 0;
    for (std::size_t b = 0; b < basis_.size(); ++b) v = field_.add(v, field_.mul(lambda_[b], basis_[b][c]));
    return v;
  }

  bool search(std::size_t b) {
    if (b == basis_.size()) return true;
    for (Elem value = 1; value < field_.p(); ++value) {
      lambda_[b] = value;
      bool ok = true;
      for (std::size_t c : ready_after_[b + 1]) {
        if (value_at(c) == 0) {
          ok = false;
          break;
        }
      }
      if (ok && search(b + 1)) return true;
    }
    lambda_[b] = 0;
    return false;
  }

  const PrimeField& field_;
  std::vector<std::vector<Elem>> basis_;
  std::size_t size_;
  std::vector<std::vector<std::size_t>> ready_after_;
  std::vector<Elem> lambda_;
};

}  // namespace

std::uint64_t wdeg(std::span<const GridTerm> terms, const PrimeField& field) {
  std::optional<std::uint64_t> best;
  for (const GridTerm& term : terms) {
    if (field.reduce(term.coefficient) == 0) continue;
    const std::uint64_t w = weighted_degree(term.alpha, field.p());
    if (!best || w > *best) best = w;
  }
  if (!best) raise(ErrorKind::UndefinedDegree, "weighted degree of the zero polynomial");
  return *best;
}

RMCode rm_generator(const PrimeField& field, int n, int d) {
  require_cap(n, kRmGeneratorCap, "Reed-Muller generator");
  const std::uint32_t points = std::uint32_t{1} << n;
  RMCode code{field, n, std::min(d, n), {}, FpMatrix(field, 0, points)};
  if (d < 0) return code;
  code.monomials = MonomialIndex(n, code.d).masks();
  std::vector<Elem> row(points);
  for (std::uint32_t m : code.monomials) {
    for (std::uint32_t a = 0; a < points; ++a) row[a] = (a & m) == m ? 1 : 0;
    code.generator.append_row(row);
  }
  return code;
}

bool check_rm_duality(const PrimeField& field, int n, int d) {
  require_cap(n, kRmDualityCap, "Reed-Muller duality check");
  if (d < 0 || d > n) raise(ErrorKind::InvalidArgument, "degree must lie in [0, n]");
  const RMCode code = rm_generator(field, n, d);
  const std::vector<std::vector<Elem>> dual = nullspace_basis(code.generator);
  FpMatrix dual_rows(field, 0, code.generator.cols());
  for (const auto& v : dual) dual_rows.append_row(v);
  const FpMatrix formula = signed_generator(field, n, n - d - 1);
  return rank(formula) == dual.size() && rows_inside(dual_rows, formula) && rows_inside(formula, dual_rows);
}

WeightedRMCode weighted_rm_generator(const PrimeField& field, int r, int k, int d) {
  const std::uint64_t p = field.p();
  if (r < 0) raise(ErrorKind::InvalidArgument, "r must be nonnegative");
  if (k < 1 || static_cast<std::uint64_t>(k) > p - 1) raise(ErrorKind::InvalidArgument, "k must lie in [1, p-1]");
  const std::uint64_t size = int_pow(p, static_cast<unsigned>(r)) * static_cast<std::uint64_t>(k + 1);
  if (int_pow(p, static_cast<unsigned>(r)) > kGridCap || size > kGridCap) {
    raise(ErrorKind::SizeCapExceeded, "weighted grid has more than " + std::to_string(kGridCap) + " points");
  }

  WeightedRMCode code{field, r, k, d, static_cast<int>(size - 1), {}, {}, FpMatrix(field, 0, size)};
  // Lexicographic enumeration of [0, p-1]^r x [0, k]: the last coordinate varies fastest.
  std::vector<unsigned> bound(static_cast<std::size_t>(r) + 1, static_cast<unsigned>(p - 1));
  bound.back() = static_cast<unsigned>(k);
  std::vector<unsigned> t(bound.size(), 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    code.points.push_back(t);
    for (std::size_t c = t.size(); c-- > 0;) {
      if (t[c] < bound[c]) {
        ++t[c];
        break;
      }
      t[c] = 0;
    }
  }

  if (d < 0) return code;
  for (const auto& alpha : code.points) {
    if (weighted_degree(alpha, p) <= static_cast<std::uint64_t>(d)) code.monomials.push_back(alpha);
  }
  std::stable_sort(code.monomials.begin(), code.monomials.end(), [p](const auto& a, const auto& b) {
    return weighted_degree(a, p) < weighted_degree(b, p);
  });

  std::vector<Elem> row(size);
  for (const auto& alpha : code.monomials) {
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      Elem v = 1;
      for (std::size_t c = 0; c < alpha.size(); ++c) v = field.mul(v, field.pow(code.points[idx][c], alpha[c]));
      row[idx] = v;
    }
    code.generator.append_row(row);
  }
  return code;
}

WeightedDuality weighted_duality(const PrimeField& field, int r, int k, int d) {
  if (d < 0) raise(ErrorKind::InvalidArgument, "degree must be nonnegative");
  const WeightedRMCode code = weighted_rm_generator(field, r, k, d);
  const WeightedRMCode dual = weighted_rm_generator(field, r, k, code.big_n - d - 1);
  const std::size_t size = code.points.size();

  WeightedDuality out;
  out.dimensions_match = size - rank(code.generator) == rank(dual.generator);

  // Equations sum_t gamma_t P(t) Q(t) = 0; only independent ones are kept.
  RowSpace independent(field, size);
  FpMatrix system(field, 0, size);
  std::vector<Elem> eq(size);
  for (std::size_t a = 0; a < code.generator.rows() && !independent.full(); ++a) {
    for (std::size_t b = 0; b < dual.generator.rows() && !independent.full(); ++b) {
      for (std::size_t t = 0; t < size; ++t) eq[t] = field.mul(code.generator.at(a, t), dual.generator.at(b, t));
      if (independent.insert(eq)) system.append_row(eq);
    }
  }
  out.gamma = NonzeroCombination(field, nullspace_basis(system), size).solve();
  return out;
}

bool check_weighted_duality(const PrimeField& field, int r, int k, int d) { return weighted_duality(field, r, k, d).holds(); }

SupportCriterion support_criterion(const FpMatrix& w, std::span<const std::size_t> s, std::size_t j) {
  if (j >= w.cols()) raise(ErrorKind::DimensionMismatch, "column j out of range");
  if (std::find(s.begin(), s.end(), j) != s.end()) raise(ErrorKind::InvalidArgument, "j must not belong to S");
  std::vector<std::size_t> cols{j};
  cols.insert(cols.end(), s.begin(), s.end());

  // Certificate side: a dual vector living on {j} + S with v_j != 0.
  SupportCriterion out;
  for (const auto& v : nullspace_basis(w.select_columns(cols))) {
    if (v[0] == 0) continue;
    std::vector<Elem> cert(w.cols(), 0);
    const Elem scale = w.field().inv(v[0]);
    for (std::size_t i = 0; i < cols.size(); ++i) cert[cols[i]] = w.field().add(cert[cols[i]], w.field().mul(v[i], scale));
    out.certificate = std::move(cert);
    break;
  }

  // Implication side: column j adds nothing to the rank of the columns S.
  const std::size_t with_j = rank(w.select_columns(cols));
  const std::size_t without_j = rank(w.select_columns(std::span<const std::size_t>(cols).subspan(1)));
  out.holds = with_j == without_j;

  if (out.holds != out.certificate.has_value()) {
    raise(ErrorKind::Internal, "support criterion: certificate search and rank test disagree");
  }
  if (out.certificate) {
    for (Elem x : w.multiply(*out.certificate)) {
      if (x != 0) raise(ErrorKind::Internal, "support criterion: certificate is not in the dual");
    }
  }
  return out;
}

bool top_point_in_closure_via_dual(const ClosureQuery& q) {
  if (q.e.contains(q.n)) return true;
  const RMCode code = rm_generator(q.field, q.n, q.d);
  std::vector<std::size_t> s;
  for (const CubePoint& x : enumerate_symmetric(q.e)) s.push_back(x.bits);
  const std::size_t top = (std::size_t{1} << q.n) - 1;
  return support_criterion(code.generator, s, top).holds;
}

}  // namespace zclosure
