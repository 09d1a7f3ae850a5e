#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace kmh {

// a + b*sqrt(d) with a, b rational and d a squarefree integer other than 0, 1.
// Rational values are stored with b = 0, d = 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}
  Scalar(const mpq_class& v) : a_(v) { a_.canonicalize(); }
  Scalar(const mpq_class& a, const mpq_class& b, long d);

  static Scalar parse(std::string_view text);
  static Scalar sqrt_of(long d);

  std::string str() const;

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_real() const { return sgn(b_) == 0 || d_ > 0; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& irrational_part() const { return b_; }
  long radicand() const { return d_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // Total order on representations, for use as container keys.
  int compare(const Scalar& o) const;

  Scalar inverse() const;
  Scalar pow(long e) const;
  std::complex<double> numeric() const;
  double abs() const { return std::abs(numeric()); }
  // Sign of a real scalar; throws FieldMismatch for non-real values.
  int sign() const;
  // Square root inside Q or Q(sqrt d), if one exists.
  std::optional<Scalar> sqrt() const;

 private:
  void normalize();
  static long combine_radicand(const Scalar& x, const Scalar& y);

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

struct ScalarLess {
  bool operator()(const Scalar& x, const Scalar& y) const { return x.compare(y) < 0; }
};

std::optional<mpq_class> rational_sqrt(const mpq_class& q);
// Square root of a rational, adjoining sqrt(d) when q is not a square.
Scalar adjoin_sqrt(const mpq_class& q);

}  // namespace kmh
