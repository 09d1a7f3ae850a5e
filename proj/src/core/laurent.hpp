#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intmat.hpp"
#include "scalar.hpp"

namespace kmh {

// tau on Y, given by its values on the coordinate basis.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<Scalar> values);
  static Character trivial(std::size_t rank) { return Character(std::vector<Scalar>(rank, Scalar(1))); }

  std::size_t rank() const { return values_.size(); }
  const std::vector<Scalar>& values() const { return values_; }
  Scalar operator()(const Exponent& lambda) const;
  // The character lambda -> tau(m(lambda)).
  Character compose(const IntMatrix& m) const;
  bool operator==(const Character& o) const { return values_ == o.values_; }
  std::string str() const;

 private:
  std::vector<Scalar> values_;
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Scalar>;

  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}
  static LaurentPoly monomial(const Exponent& e, const Scalar& c = Scalar(1));
  static LaurentPoly constant(std::size_t rank, const Scalar& c);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Scalar> as_constant() const;
  void add_term(const Exponent& e, const Scalar& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Scalar& c) const;
  LaurentPoly shifted(const Exponent& e) const;
  bool operator==(const LaurentPoly& o) const;

  LaurentPoly twist(const IntMatrix& m) const;
  Scalar evaluate(const Character& tau) const;
  // Exact quotient by 1 - c Z^mu, if the division leaves no remainder.
  std::optional<LaurentPoly> divide_binomial(const Scalar& c, const Exponent& mu) const;
  std::string str() const;

 private:
  std::size_t rank_;
  Terms terms_;
};

// 1 - scale * Z^direction; canonical when the first nonzero entry of direction is negative.
struct BinomialFactor {
  Scalar scale;
  Exponent direction;

  LaurentPoly as_poly() const;
  Scalar evaluate(const Character& tau) const;
  std::string str() const;
  int compare(const BinomialFactor& o) const;
  bool operator==(const BinomialFactor& o) const { return compare(o) == 0; }
  bool operator<(const BinomialFactor& o) const { return compare(o) < 0; }
};

class RationalElt {
 public:
  explicit RationalElt(std::size_t rank = 0) : num_(rank) {}
  RationalElt(LaurentPoly num) : num_(std::move(num)) {}
  // num / prod(1 - c_i Z^{mu_i}); factors are canonicalized and the result reduced.
  static RationalElt fraction(LaurentPoly num, const std::vector<BinomialFactor>& den);
  static RationalElt constant(std::size_t rank, const Scalar& c) { return RationalElt(LaurentPoly::constant(rank, c)); }
  static RationalElt monomial(const Exponent& e, const Scalar& c = Scalar(1)) {
    return RationalElt(LaurentPoly::monomial(e, c));
  }

  std::size_t rank() const { return num_.rank(); }
  const LaurentPoly& numerator() const { return num_; }
  const std::vector<BinomialFactor>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::optional<LaurentPoly> as_polynomial() const;
  LaurentPoly denominator_poly() const;

  RationalElt operator+(const RationalElt& o) const;
  RationalElt operator-(const RationalElt& o) const;
  RationalElt operator-() const;
  RationalElt operator*(const RationalElt& o) const;
  RationalElt operator*(const Scalar& c) const;
  RationalElt& operator+=(const RationalElt& o) { return *this = *this + o; }
  bool equals(const RationalElt& o) const;

  // Succeeds when the numerator splits into binomials 1 - c Z^mu with c in pool.
  std::optional<RationalElt> inverse(const std::vector<Scalar>& pool) const;
  RationalElt twist(const IntMatrix& m) const;
  Scalar evaluate(const Character& tau) const;
  bool regular_at(const Character& tau) const;
  std::string str() const;

 private:
  void reduce();

  LaurentPoly num_;
  std::vector<BinomialFactor> den_;  // sorted
};

}  // namespace kmh
