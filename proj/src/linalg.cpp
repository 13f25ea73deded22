#include "zclosure/linalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "zclosure/error.hpp"

namespace zclosure {

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  FpMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) raise(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = field.from_int(rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t size) {
  FpMatrix m(std::move(field), size, size);
  for (std::size_t i = 0; i < size; ++i) m.data_[i * size + i] = 1;
  return m;
}

void FpMatrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) raise(ErrorKind::DimensionMismatch, "row length differs from column count");
  for (Elem v : values) data_.push_back(field_.reduce(v));
  ++rows_;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  }
  return t;
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> columns) const {
  FpMatrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] >= cols_) raise(ErrorKind::DimensionMismatch, "column index out of range");
      out.data_[r * columns.size() + i] = data_[r * cols_ + columns[i]];
    }
  }
  return out;
}

std::vector<Elem> FpMatrix::multiply(std::span<const Elem> v) const {
  if (v.size() != cols_) raise(ErrorKind::DimensionMismatch, "vector length differs from column count");
  std::vector<Elem> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += std::uint64_t{data_[r * cols_ + c]} * v[c];
      if (acc >= (std::uint64_t{1} << 62)) acc = field_.reduce(acc);
    }
    out[r] = field_.reduce(acc);
  }
  return out;
}

RrefResult rref(const FpMatrix& m) {
  const PrimeField& f = m.field();
  FpMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pick = lead_row;
    while (pick < a.rows() && a.at(pick, col) == 0) ++pick;
    if (pick == a.rows()) continue;
    if (pick != lead_row) {
      auto x = a.row(pick);
      auto y = a.row(lead_row);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto pivot_row = a.row(lead_row);
    const Elem scale = f.inv(pivot_row[col]);
    for (std::size_t c = col; c < a.cols(); ++c) pivot_row[c] = f.mul(pivot_row[c], scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row) continue;
      auto target = a.row(r);
      const Elem factor = target[col];
      if (factor == 0) continue;
      const Elem neg = f.neg(factor);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (pivot_row[c] != 0) target[c] = f.reduce(target[c] + std::uint64_t{neg} * pivot_row[c]);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) {
  RowSpace space(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !space.full(); ++r) space.insert(m.row(r));
  return space.rank();
}

std::vector<std::vector<Elem>> nullspace_basis(const FpMatrix& m) {
  const RrefResult red = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;

  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = f.neg(red.reduced.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const FpMatrix& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) raise(ErrorKind::DimensionMismatch, "vector length differs from column count");
  RowSpace space(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !space.full(); ++r) space.insert(m.row(r));
  return space.contains(v);
}

// --- RowSpace --------------------------------------------------------------

RowSpace::RowSpace(PrimeField field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

std::size_t RowSpace::reduce_dense(std::vector<Elem>& v) const {
  const PrimeField& f = field_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t piv = pivots_[i];
    const Elem factor = v[piv];
    if (factor == 0) continue;
    const Elem neg = f.neg(factor);
    const std::vector<Elem>& row = dense_[i];
    for (std::size_t c = piv; c < cols_; ++c) {
      const Elem b = row[c];
      if (b != 0) v[c] = f.reduce(v[c] + std::uint64_t{neg} * b);
    }
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] != 0) return c;
  }
  return cols_;
}

std::size_t RowSpace::reduce_packed(std::vector<std::uint64_t>& v) const {
  const std::size_t nw = words();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t piv = pivots_[i];
    if (((v[piv >> 6] >> (piv & 63)) & 1u) == 0) continue;
    const std::vector<std::uint64_t>& row = bits_[i];
    for (std::size_t w = piv >> 6; w < nw; ++w) v[w] ^= row[w];
  }
  for (std::size_t w = 0; w < nw; ++w) {
    if (v[w] != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(v[w]));
  }
  return cols_;
}

bool RowSpace::insert_dense(std::vector<Elem> v) {
  const std::size_t lead = reduce_dense(v);
  if (lead == cols_) return false;
  const Elem scale = field_.inv(v[lead]);
  for (std::size_t c = lead; c < cols_; ++c) v[c] = field_.mul(v[c], scale);
  const auto pos = static_cast<std::ptrdiff_t>(std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
  pivots_.insert(pivots_.begin() + pos, lead);
  dense_.insert(dense_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::insert_packed(std::vector<std::uint64_t> v) {
  const std::size_t lead = reduce_packed(v);
  if (lead == cols_) return false;
  const auto pos = static_cast<std::ptrdiff_t>(std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
  pivots_.insert(pivots_.begin() + pos, lead);
  bits_.insert(bits_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::insert(std::span<const Elem> v) {
  if (v.size() != cols_) raise(ErrorKind::DimensionMismatch, "row length differs from column count");
  if (full()) return false;
  if (packed()) {
    std::vector<std::uint64_t> bits(words(), 0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] & 1u) bits[c >> 6] |= std::uint64_t{1} << (c & 63);
    }
    return insert_packed(std::move(bits));
  }
  std::vector<Elem> row(v.size());
  for (std::size_t c = 0; c < cols_; ++c) row[c] = field_.reduce(v[c]);
  return insert_dense(std::move(row));
}

bool RowSpace::contains(std::span<const Elem> v) const {
  if (v.size() != cols_) raise(ErrorKind::DimensionMismatch, "row length differs from column count");
  if (full()) return true;
  if (packed()) {
    std::vector<std::uint64_t> bits(words(), 0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] & 1u) bits[c >> 6] |= std::uint64_t{1} << (c & 63);
    }
    return reduce_packed(bits) == cols_;
  }
  std::vector<Elem> row(v.size());
  for (std::size_t c = 0; c < cols_; ++c) row[c] = field_.reduce(v[c]);
  return reduce_dense(row) == cols_;
}

bool RowSpace::insert_support(std::span<const std::uint32_t> ones) {
  if (full()) return false;
  if (packed()) {
    std::vector<std::uint64_t> bits(words(), 0);
    for (std::uint32_t c : ones) bits[c >> 6] ^= std::uint64_t{1} << (c & 63);
    return insert_packed(std::move(bits));
  }
  std::vector<Elem> row(cols_, 0);
  for (std::uint32_t c : ones) row[c] = field_.add(row[c], 1);
  return insert_dense(std::move(row));
}

bool RowSpace::contains_support(std::span<const std::uint32_t> ones) const {
  if (full()) return true;
  if (packed()) {
    std::vector<std::uint64_t> bits(words(), 0);
    for (std::uint32_t c : ones) bits[c >> 6] ^= std::uint64_t{1} << (c & 63);
    return reduce_packed(bits) == cols_;
  }
  std::vector<Elem> row(cols_, 0);
  for (std::uint32_t c : ones) row[c] = field_.add(row[c], 1);
  return reduce_dense(row) == cols_;
}

}  // namespace zclosure
