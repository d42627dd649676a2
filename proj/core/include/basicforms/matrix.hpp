#pragma once

#include "basicforms/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace basicforms {

using ScalarVector = std::vector<Scalar>;

/// Dense row-major matrix over Q(a).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<ScalarVector>& rows);
  /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
  static Matrix from_columns(std::size_t rows, const std::vector<ScalarVector>& columns);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] ScalarVector column(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  [[nodiscard]] ScalarVector apply(std::span<const Scalar> v) const;
  [[nodiscard]] Matrix transpose() const;

  /// Appends rows of `below`; column counts must agree unless one side is 0 x 0.
  void append_rows(const Matrix& below);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

[[nodiscard]] Matrix hstack(const Matrix& lhs, const Matrix& rhs);

}  // namespace basicforms
