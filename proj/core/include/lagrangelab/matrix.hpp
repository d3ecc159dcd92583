#pragma once

#include "lagrangelab/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <iosfwd>
#include <span>
#include <vector>

namespace lagrangelab {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Integer> row(std::size_t r) const;
  [[nodiscard]] std::span<Integer> row(std::size_t r);
  [[nodiscard]] IntVector column(std::size_t c) const;
  [[nodiscard]] const std::vector<Integer>& entries() const noexcept { return data_; }

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntMatrix select_rows(std::span<const std::size_t> idx) const;
  [[nodiscard]] IntMatrix select_cols(std::span<const std::size_t> idx) const;
  [[nodiscard]] bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

[[nodiscard]] IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
[[nodiscard]] IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
[[nodiscard]] RatVector multiply(const IntMatrix& a, std::span<const Rational> v);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Dense rational matrix, row-major. Used for inverses and dual bases.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(const IntMatrix& m);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const;
  [[nodiscard]] RatVector column(std::size_t c) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

[[nodiscard]] RatVector multiply(const RatMatrix& a, std::span<const Rational> v);

/// Exact rank by fraction-free elimination.
[[nodiscard]] std::size_t rank(const IntMatrix& m);

/// Exact determinant of a square matrix (Bareiss).
[[nodiscard]] Integer determinant(const IntMatrix& m);

/// Exact inverse; nullopt when singular.
[[nodiscard]] std::optional<RatMatrix> inverse(const IntMatrix& m);

}  // namespace lagrangelab
