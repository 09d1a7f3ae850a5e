#include "scalar.hpp"

#include <cmath>

#include "error.hpp"

namespace kmh {

namespace {

// Splits n (nonzero) as k^2 * m with m squarefree; returns (k, m).
std::pair<long, long> squarefree_split(long n) {
  long sign = n < 0 ? -1 : 1;
  long m = n < 0 ? -n : n;
  long k = 1;
  for (long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      k *= p;
    }
  }
  return {k, sign * m};
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty()) throw Error(ErrorCode::ConfigError, "empty scalar");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ConfigError, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ConfigError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

Scalar::Scalar(const mpq_class& a, const mpq_class& b, long d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) {
    d_ = 0;
    return;
  }
  if (d == 0) throw Error(ErrorCode::FieldMismatch, "radicand 0 with nonzero coefficient");
  auto [k, m] = squarefree_split(d);
  b_ *= k;
  d_ = m;
  normalize();
}

void Scalar::normalize() {
  if (sgn(b_) == 0) {
    d_ = 0;
  } else if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

Scalar Scalar::sqrt_of(long d) {
  if (d == 0) return Scalar(0);
  auto [k, m] = squarefree_split(d);
  if (m == 1) return Scalar(k);
  return Scalar(mpq_class(0), mpq_class(k), m);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return Scalar(parse_rational(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size())
    throw Error(ErrorCode::ConfigError, "bad scalar '" + s + "'");
  long d;
  try {
    d = std::stol(s.substr(pos + 5, close - pos - 5));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, "bad radicand in '" + s + "'");
  }
  std::string prefix = s.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*')
    prefix.pop_back();
  else
    prefix += "1";
  std::size_t split = std::string::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      split = i;
      break;
    }
  }
  mpq_class a(0), b;
  if (split == std::string::npos) {
    b = parse_rational(prefix);
  } else {
    a = parse_rational(prefix.substr(0, split));
    b = parse_rational(prefix.substr(split));
  }
  return Scalar(a, b, d);
}

std::string Scalar::str() const {
  if (is_rational()) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string coeff;
  if (b_ == 1)
    coeff = root;
  else if (b_ == -1)
    coeff = "-" + root;
  else
    coeff = b_.get_str() + "*" + root;
  if (sgn(a_) == 0) return coeff;
  std::string out = a_.get_str();
  if (coeff[0] != '-') out += "+";
  return out + coeff;
}

long Scalar::combine_radicand(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw Error(ErrorCode::FieldMismatch, "scalars from different quadratic fields: " + x.str() + ", " + y.str());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ += o.a_;
    return *this;
  }
  d_ = combine_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = combine_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  long d = combine_radicand(*this, o);
  mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Internal, "division by zero scalar");
  if (is_rational()) return Scalar(mpq_class(1) / a_);
  mpq_class norm = a_ * a_ - b_ * b_ * d_;
  return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

int Scalar::compare(const Scalar& o) const {
  if (d_ != o.d_) return d_ < o.d_ ? -1 : 1;
  int c = cmp(a_, o.a_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(b_, o.b_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r(1);
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

std::complex<double> Scalar::numeric() const {
  double a = a_.get_d(), b = b_.get_d();
  if (d_ == 0) return {a, 0.0};
  if (d_ > 0) return {a + b * std::sqrt(static_cast<double>(d_)), 0.0};
  return {a, b * std::sqrt(static_cast<double>(-d_))};
}

int Scalar::sign() const {
  if (!is_real()) throw Error(ErrorCode::FieldMismatch, "sign of non-real scalar " + str());
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  int c = cmp(a_ * a_, b_ * b_ * d_);
  return c > 0 ? sa : sb;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return Scalar(0);
  if (is_rational()) {
    if (auto r = rational_sqrt(a_)) return Scalar(*r);
    return std::nullopt;
  }
  // (u + v sqrt d)^2 = a + b sqrt d  =>  u^2 + d v^2 = a, 2uv = b.
  auto n = rational_sqrt(a_ * a_ - b_ * b_ * d_);
  if (n) {
    for (const mpq_class& u2 : {mpq_class((a_ + *n) / 2), mpq_class((a_ - *n) / 2)}) {
      auto u = rational_sqrt(u2);
      if (u && sgn(*u) != 0) {
        mpq_class v = b_ / (2 * *u);
        return Scalar(*u, v, d_);
      }
    }
  }
  return std::nullopt;
}

Scalar adjoin_sqrt(const mpq_class& q) {
  if (auto r = rational_sqrt(q)) return Scalar(*r);
  mpz_class prod = q.get_num() * q.get_den();
  if (!prod.fits_slong_p()) throw Error(ErrorCode::Overflow, "radicand too large");
  return Scalar(mpq_class(0), mpq_class(mpz_class(1), q.get_den()), prod.get_si());
}

}  // namespace kmh
