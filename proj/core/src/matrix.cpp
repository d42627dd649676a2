#include "basicforms/matrix.hpp"

#include "basicforms/errors.hpp"

namespace basicforms {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<ScalarVector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<ScalarVector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ScalarVector Matrix::column(std::size_t c) const {
  ScalarVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ScalarVector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
  ScalarVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

void Matrix::append_rows(const Matrix& below) {
  if (below.rows_ == 0) {
    if (rows_ == 0 && cols_ == 0) cols_ = below.cols_;
    return;
  }
  if (rows_ == 0 && cols_ == 0) {
    *this = below;
    return;
  }
  if (below.cols_ != cols_) throw DimensionMismatch("cannot stack matrices with different column counts");
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
  rows_ += below.rows_;
}

Matrix hstack(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) out(r, c) = lhs(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, lhs.cols() + c) = rhs(r, c);
  }
  return out;
}

}  // namespace basicforms
