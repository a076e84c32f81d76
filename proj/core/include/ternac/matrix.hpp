#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "ternac/scalar.hpp"

namespace ternac {

using Vector = std::vector<Scalar>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact scalars.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  bool is_zero() const;
  bool is_real() const;

  ExactMatrix transposed() const;
  Vector apply(std::span<const Scalar> v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Incremental row echelon form. Rows are cleared of denominators and
/// eliminated fraction-free over Z[i] (Z when everything is real), with the
/// content divided out after each step, so only the echelon rows are stored.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols);
  RowEchelon(RowEchelon&&) noexcept;
  RowEchelon& operator=(RowEchelon&&) noexcept;
  ~RowEchelon();

  /// Returns true when the row increased the rank.
  bool add_row(std::span<const Scalar> row);
  std::size_t rank() const;
  std::size_t cols() const { return cols_; }

  /// Reduced row echelon form of the rows seen so far (leading entries 1).
  std::vector<Vector> reduced() const;
  std::vector<std::size_t> pivots() const;

 private:
  struct Impl;
  std::size_t cols_;
  std::unique_ptr<Impl> impl_;
};

/// Rank over the field.
std::size_t rank(const ExactMatrix& m);

/// Basis of {v : M v = 0}, in reduced row echelon form: each vector's first
/// nonzero entry is 1 and leading positions strictly increase.
std::vector<Vector> nullspace(const ExactMatrix& m);

/// Basis of the column space (image), canonicalized like nullspace().
std::vector<Vector> column_space(const ExactMatrix& m);

/// Canonical basis of the span of `vectors` (reduced row echelon form,
/// zero rows dropped).
std::vector<Vector> canonical_basis(std::vector<Vector> vectors);

}  // namespace ternac
