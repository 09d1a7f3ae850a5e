#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace kmh {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vector apply(const Vector& v) const;
  // Rows of *this followed by rows of o.
  Matrix stacked(const Matrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Gauss-Jordan reduction in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
Scalar determinant(Matrix m);
// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
std::vector<Vector> nullspace(Matrix m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Matrix power(const Matrix& m, std::size_t k);

}  // namespace kmh
