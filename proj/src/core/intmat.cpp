#include "intmat.hpp"

#include "error.hpp"

namespace kmh {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in product");
  return r;
}

Exponent add(const Exponent& x, const Exponent& y) {
  Exponent r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_add(x[i], y[i]);
  return r;
}

Exponent sub(const Exponent& x, const Exponent& y) {
  Exponent r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_add(x[i], -y[i]);
  return r;
}

Exponent negate(const Exponent& x) {
  Exponent r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

Exponent scale(int64_t k, const Exponent& x) {
  Exponent r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = checked_mul(k, x[i]);
  return r;
}

int64_t dot(const Exponent& x, const Exponent& y) {
  int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(x[i], y[i]));
  return s;
}

bool is_zero(const Exponent& x) {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Exponent IntMatrix::column(std::size_t j) const {
  Exponent c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Exponent IntMatrix::apply(const Exponent& v) const {
  Exponent r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    int64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s = checked_add(s, checked_mul(at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      int64_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) = checked_add(r.at(i, j), checked_mul(a, o.at(k, j)));
    }
  return r;
}

bool IntMatrix::is_identity() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace kmh
