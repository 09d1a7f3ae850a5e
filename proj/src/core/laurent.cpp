#include <set>
#include "laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace kmh {

namespace {

std::string exponent_str(const Exponent& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "]";
}

int first_sign(const Exponent& e) {
  for (auto v : e)
    if (v != 0) return v > 0 ? 1 : -1;
  return 0;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Canonical {
  Scalar coeff{1};
  Exponent shift;
  std::vector<BinomialFactor> factors;
};

// 1 / (1 - c Z^mu) = coeff * Z^shift / prod(factors).
void canonicalize(Scalar c, Exponent mu, Canonical& out) {
  int s = first_sign(mu);
  if (s == 0) {
    Scalar v = Scalar(1) - c;
    if (v.is_zero()) throw Error(ErrorCode::Internal, "constant denominator factor vanishes");
    out.coeff *= v.inverse();
    return;
  }
  if (s > 0) {
    c = c.inverse();
    out.coeff *= -c;
    mu = negate(mu);
    out.shift = add(out.shift, mu);
  }
  int64_t g = 0;
  for (auto v : mu) g = std::gcd(g, v < 0 ? -v : v);
  if (g % 2 == 0) {
    if (auto r = c.sqrt()) {
      Exponent half(mu.size());
      for (std::size_t i = 0; i < mu.size(); ++i) half[i] = mu[i] / 2;
      canonicalize(*r, half, out);
      canonicalize(-*r, half, out);
      return;
    }
  }
  out.factors.push_back(BinomialFactor{c, mu});
}

}  // namespace

Character::Character(std::vector<Scalar> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v.is_zero()) throw Error(ErrorCode::ConfigError, "character values must be nonzero");
}

Scalar Character::operator()(const Exponent& lambda) const {
  Scalar r(1);
  for (std::size_t j = 0; j < values_.size(); ++j)
    if (lambda[j] != 0) r *= values_[j].pow(lambda[j]);
  return r;
}

Character Character::compose(const IntMatrix& m) const {
  std::vector<Scalar> v;
  for (std::size_t j = 0; j < m.cols(); ++j) v.push_back((*this)(m.column(j)));
  return Character(std::move(v));
}

std::string Character::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ", ";
    s += values_[i].str();
  }
  return s + ")";
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Scalar& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const Scalar& c) {
  return monomial(Exponent(rank, 0), c);
}

std::optional<Scalar> LaurentPoly::as_constant() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() == 1 && kmh::is_zero(terms_.begin()->first)) return terms_.begin()->second;
  return std::nullopt;
}

void LaurentPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(rank_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(add(e1, e2), c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
  LaurentPoly r(rank_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  LaurentPoly r(rank_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(add(e, s), v);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

LaurentPoly LaurentPoly::twist(const IntMatrix& m) const {
  LaurentPoly r(rank_);
  for (const auto& [e, v] : terms_) r.add_term(m.apply(e), v);
  return r;
}

Scalar LaurentPoly::evaluate(const Character& tau) const {
  Scalar s(0);
  for (const auto& [e, v] : terms_) s += v * tau(e);
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divide_binomial(const Scalar& c, const Exponent& mu) const {
  if (terms_.empty()) return *this;
  int64_t g = 0;
  for (auto v : mu) g = std::gcd(g, v < 0 ? -v : v);
  if (g == 0) throw Error(ErrorCode::Internal, "binomial with zero direction");
  Exponent mu0(mu.size());
  std::size_t p = mu.size();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    mu0[i] = mu[i] / g;
    if (p == mu.size() && mu0[i] != 0) p = i;
  }
  const int64_t m = mu0[p];
  // Coset representative -> (position along mu0 -> coefficient).
  std::map<Exponent, std::map<int64_t, Scalar>> cosets;
  for (const auto& [e, v] : terms_) {
    int64_t t = m > 0 ? floor_div(e[p], m) : -floor_div(e[p], -m);
    cosets[sub(e, scale(t, mu0))].emplace(t, v);
  }
  LaurentPoly q(rank_);
  for (const auto& [nu, series] : cosets) {
    int64_t tmin = series.begin()->first, tmax = series.rbegin()->first;
    if (tmax - tmin < g) return std::nullopt;
    std::map<int64_t, Scalar> quot;
    auto coeff = [&](const std::map<int64_t, Scalar>& mp, int64_t t) {
      auto it = mp.find(t);
      return it == mp.end() ? Scalar(0) : it->second;
    };
    for (int64_t t = tmin; t <= tmax; ++t) {
      Scalar v = coeff(series, t) + c * coeff(quot, t - g);
      if (t <= tmax - g) {
        if (!v.is_zero()) quot.emplace(t, v);
      } else if (!v.is_zero()) {
        return std::nullopt;
      }
    }
    for (const auto& [t, v] : quot) q.add_term(add(nu, scale(t, mu0)), v);
  }
  return q;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, v] : terms_) {
    if (!s.empty()) s += " + ";
    if (kmh::is_zero(e))
      s += v.str();
    else
      s += (v.is_one() ? std::string() : v.str() + "*") + "Z^" + exponent_str(e);
  }
  return s;
}

LaurentPoly BinomialFactor::as_poly() const {
  LaurentPoly p = LaurentPoly::constant(direction.size(), Scalar(1));
  p.add_term(direction, -scale);
  return p;
}

Scalar BinomialFactor::evaluate(const Character& tau) const { return Scalar(1) - scale * tau(direction); }

std::string BinomialFactor::str() const {
  return "(1 - " + (scale.is_one() ? std::string() : scale.str() + "*") + "Z^" + exponent_str(direction) + ")";
}

int BinomialFactor::compare(const BinomialFactor& o) const {
  if (direction != o.direction) return direction < o.direction ? -1 : 1;
  return scale.compare(o.scale);
}

RationalElt RationalElt::fraction(LaurentPoly num, const std::vector<BinomialFactor>& den) {
  Canonical can;
  can.shift = Exponent(num.rank(), 0);
  for (const auto& f : den) canonicalize(f.scale, f.direction, can);
  RationalElt r;
  r.num_ = num.shifted(can.shift) * can.coeff;
  r.den_ = std::move(can.factors);
  std::sort(r.den_.begin(), r.den_.end());
  r.reduce();
  return r;
}

void RationalElt::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (std::size_t i = 0; i < den_.size();) {
    if (auto q = num_.divide_binomial(den_[i].scale, den_[i].direction)) {
      num_ = std::move(*q);
      den_.erase(den_.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
}

namespace {

LaurentPoly product_poly(std::size_t rank, const std::vector<BinomialFactor>& fs) {
  LaurentPoly p = LaurentPoly::constant(rank, Scalar(1));
  for (const auto& f : fs) p = p * f.as_poly();
  return p;
}

}  // namespace

std::optional<RationalElt> RationalElt::inverse(const std::vector<Scalar>& pool) const {
  if (num_.is_zero()) return std::nullopt;
  LaurentPoly n = num_;
  std::vector<BinomialFactor> found;
  while (n.terms().size() > 1) {
    const Exponent& base = n.terms().begin()->first;
    std::set<Exponent> dirs;
    for (const auto& [e, v] : n.terms()) {
      Exponent d = sub(e, base);
      int64_t g = 0;
      for (auto x : d) g = std::gcd(g, x < 0 ? -x : x);
      if (g == 0) continue;
      for (auto& x : d) x /= g;
      dirs.insert(d);
      dirs.insert(negate(d));
    }
    bool progress = false;
    for (const auto& mu : dirs) {
      for (const auto& c : pool)
        if (auto q = n.divide_binomial(c, mu)) {
          n = std::move(*q);
          found.push_back(BinomialFactor{c, mu});
          progress = true;
          break;
        }
      if (progress) break;
    }
    if (!progress) return std::nullopt;
  }
  const auto& [lam, a] = *n.terms().begin();
  LaurentPoly top = product_poly(rank(), den_) * LaurentPoly::monomial(negate(lam), a.inverse());
  return fraction(top, found);
}

std::optional<LaurentPoly> RationalElt::as_polynomial() const {
  if (den_.empty()) return num_;
  return std::nullopt;
}

LaurentPoly RationalElt::denominator_poly() const {
  LaurentPoly p = LaurentPoly::constant(rank(), Scalar(1));
  for (const auto& f : den_) p = p * f.as_poly();
  return p;
}

RationalElt RationalElt::operator+(const RationalElt& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) {
    RationalElt r;
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.reduce();
    return r;
  }
  std::vector<BinomialFactor> uni, extra_a, extra_b;
  std::set_union(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(uni));
  std::set_difference(uni.begin(), uni.end(), den_.begin(), den_.end(), std::back_inserter(extra_a));
  std::set_difference(uni.begin(), uni.end(), o.den_.begin(), o.den_.end(), std::back_inserter(extra_b));
  RationalElt r;
  r.num_ = num_ * product_poly(rank(), extra_a) + o.num_ * product_poly(rank(), extra_b);
  r.den_ = std::move(uni);
  r.reduce();
  return r;
}

RationalElt RationalElt::operator-() const {
  RationalElt r = *this;
  r.num_ = r.num_ * Scalar(-1);
  return r;
}

RationalElt RationalElt::operator-(const RationalElt& o) const { return *this + (-o); }

RationalElt RationalElt::operator*(const RationalElt& o) const {
  if (is_zero() || o.is_zero()) return RationalElt(rank() ? rank() : o.rank());
  RationalElt r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  std::sort(r.den_.begin(), r.den_.end());
  if (!den_.empty() || !o.den_.empty()) r.reduce();
  return r;
}

RationalElt RationalElt::operator*(const Scalar& c) const {
  if (c.is_zero()) return RationalElt(rank());
  RationalElt r = *this;
  r.num_ = r.num_ * c;
  return r;
}

bool RationalElt::equals(const RationalElt& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  std::vector<BinomialFactor> only_a, only_b;
  std::set_difference(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(only_a));
  std::set_difference(o.den_.begin(), o.den_.end(), den_.begin(), den_.end(), std::back_inserter(only_b));
  return num_ * product_poly(rank(), only_b) == o.num_ * product_poly(rank(), only_a);
}

RationalElt RationalElt::twist(const IntMatrix& m) const {
  if (den_.empty()) return RationalElt(num_.twist(m));
  std::vector<BinomialFactor> den;
  for (const auto& f : den_) den.push_back(BinomialFactor{f.scale, m.apply(f.direction)});
  return fraction(num_.twist(m), den);
}

Scalar RationalElt::evaluate(const Character& tau) const {
  Scalar d(1);
  for (const auto& f : den_) {
    Scalar v = f.evaluate(tau);
    if (v.is_zero()) throw Error(ErrorCode::PoleAtCharacter, "denominator factor " + f.str() + " vanishes at " + tau.str());
    d *= v;
  }
  return num_.evaluate(tau) / d;
}

bool RationalElt::regular_at(const Character& tau) const {
  for (const auto& f : den_)
    if (f.evaluate(tau).is_zero()) return false;
  return true;
}

std::string RationalElt::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ")/(";
  for (const auto& f : den_) s += f.str();
  return s + ")";
}

}  // namespace kmh
