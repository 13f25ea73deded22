#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zclosure/field.hpp"

namespace zclosure {

/// Dense row-major matrix over F_p. Entries are always reduced.
class FpMatrix {
 public:
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p; every row must have the same length.
  static FpMatrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0);
  static FpMatrix identity(PrimeField field, std::size_t size);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) noexcept { data_[r * cols_ + c] = field_.reduce(v); }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  FpMatrix transposed() const;
  /// Columns listed in `columns`, in that order.
  FpMatrix select_columns(std::span<const std::size_t> columns) const;
  std::vector<Elem> multiply(std::span<const Elem> v) const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan with first-nonzero pivoting.
RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Basis of {v : M v = 0}, one vector per free column.
std::vector<std::vector<Elem>> nullspace_basis(const FpMatrix& m);

/// Whether v lies in the row space of M. Throws DimensionMismatch on length.
bool in_row_space(const FpMatrix& m, std::span<const Elem> v);

/// Incrementally maintained echelon basis of a row space.
///
/// Candidate rows are reduced against the basis in O(rank * cols); over F_2
/// the rows are bit-packed. `contains` does not mutate, so a frozen basis can
/// be queried concurrently.
class RowSpace {
 public:
  RowSpace(PrimeField field, std::size_t cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool full() const noexcept { return rank() == cols_; }

  /// Adds v; returns true when the rank grew.
  bool insert(std::span<const Elem> v);
  bool contains(std::span<const Elem> v) const;

  /// Insert / test a 0-1 row given by the indices of its nonzero entries.
  bool insert_support(std::span<const std::uint32_t> ones);
  bool contains_support(std::span<const std::uint32_t> ones) const;

 private:
  bool packed() const noexcept { return field_.p() == 2; }
  std::size_t words() const noexcept { return (cols_ + 63) / 64; }

  // Reduce in place; returns the index of the leading nonzero or cols_.
  std::size_t reduce_dense(std::vector<Elem>& v) const;
  std::size_t reduce_packed(std::vector<std::uint64_t>& v) const;
  bool insert_dense(std::vector<Elem> v);
  bool insert_packed(std::vector<std::uint64_t> v);

  PrimeField field_;
  std::size_t cols_;
  // Echelon rows sorted by pivot column; exactly one of the row stores is used.
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Elem>> dense_;
  std::vector<std::vector<std::uint64_t>> bits_;
};

}  // namespace zclosure
