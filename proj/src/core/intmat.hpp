#pragma once

#include <cstdint>
#include <vector>

namespace kmh {

using Exponent = std::vector<int64_t>;

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

Exponent add(const Exponent& x, const Exponent& y);
Exponent sub(const Exponent& x, const Exponent& y);
Exponent negate(const Exponent& x);
Exponent scale(int64_t k, const Exponent& x);
int64_t dot(const Exponent& x, const Exponent& y);
bool is_zero(const Exponent& x);

// Dense row-major integer matrix with overflow-checked products.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  int64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Exponent column(std::size_t j) const;

  Exponent apply(const Exponent& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  bool is_identity() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<int64_t> data_;
};

}  // namespace kmh
