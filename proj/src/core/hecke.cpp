#include <algorithm>
#include "hecke.hpp"

#include "error.hpp"

namespace kmh {

RationalElt HeckeElt::coeff(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RationalElt(rank_) : it->second;
}

void HeckeElt::add_term(const WeylElement& w, const RationalElt& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  if (r.rank_ == 0) r.rank_ = o.rank_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const { return *this + o * Scalar(-1); }

HeckeElt HeckeElt::operator*(const Scalar& c) const {
  HeckeElt r(rank_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

HeckeElt HeckeElt::times(const RationalElt& theta) const {
  HeckeElt r(rank_);
  for (const auto& [w, v] : terms_) r.add_term(w, v * theta);
  return r;
}

bool HeckeElt::equals(const HeckeElt& o) const {
  for (const auto& [w, v] : terms_)
    if (!v.equals(o.coeff(w))) return false;
  for (const auto& [w, v] : o.terms_)
    if (!terms_.count(w)) return false;
  return true;
}

HeckeAlgebra::HeckeAlgebra(WeylGroupPtr group, ParameterSet params) : group_(std::move(group)), params_(std::move(params)) {
  const auto& sys = system();
  if (params_.sigma.size() != sys.size() || params_.sigma_prime.size() != sys.size())
    throw Error(ErrorCode::IncompatibleData, "parameter count does not match the matrix size");
  for (std::size_t s = 0; s < sys.size(); ++s) {
    const Scalar& sg = params_.sigma[s];
    const Scalar& sp = params_.sigma_prime[s];
    Exponent minus = negate(sys.simple_coroots()[s]);
    LaurentPoly num = LaurentPoly::constant(rank(), sg * sg - Scalar(1));
    num.add_term(minus, sg * (sp - sp.inverse()));
    q_.push_back(RationalElt::fraction(num, {BinomialFactor{Scalar(1), minus}, BinomialFactor{Scalar(-1), minus}}));
    for (const Scalar& c : {Scalar(1), sg * sp, sg * sp.inverse()})
      for (const Scalar& b : {c, c.inverse()}) {
        std::vector<Scalar> vals{b};
        if (auto r = b.sqrt()) vals.push_back(*r);
        for (const auto& v : vals)
          for (const auto& x : {v, -v})
            if (std::find(pool_.begin(), pool_.end(), x) == pool_.end()) pool_.push_back(x);
      }
  }
}

HeckeElt HeckeAlgebra::T(const WeylElement& w) const {
  HeckeElt h(rank());
  h.add_term(w, constant(Scalar(1)));
  return h;
}

HeckeElt HeckeAlgebra::theta(const RationalElt& x) const {
  HeckeElt h(rank());
  h.add_term(group_->identity(), x);
  return h;
}

RationalElt HeckeAlgebra::q_reflection(const Reflection& r) const { return twist(r.conjugator, q_[r.base]); }

RationalElt HeckeAlgebra::omega_tilde(std::size_t s, const RationalElt& x) const {
  return q_[s] * (x - twist(group_->simple(s), x));
}

RationalElt HeckeAlgebra::omega_reflection(const Reflection& r, const RationalElt& x) const {
  return q_reflection(r) * (x - twist(r.element, x));
}

void HeckeAlgebra::check(const HeckeElt& h) const {
  if (h.rank() != 0 && h.rank() != rank())
    throw Error(ErrorCode::IncompatibleData, "Hecke element from a different root datum");
}

HeckeElt HeckeAlgebra::mult_T_s(const HeckeElt& h, std::size_t s) const {
  check(h);
  HeckeElt out(rank());
  const Scalar q = sigma(s) * sigma(s);
  const WeylElement& sw = group_->simple(s);
  for (const auto& [w, c] : h.terms()) {
    RationalElt twisted = twist(sw, c);
    WeylElement ws = group_->right_mult(w, s);
    if (ws.length() > w.length()) {
      out.add_term(ws, twisted);
    } else {
      out.add_term(w, twisted * (q - Scalar(1)));
      out.add_term(ws, twisted * q);
    }
    RationalElt om = omega_tilde(s, c);
    if (!om.is_zero()) out.add_term(w, om);
  }
  return out;
}

HeckeElt HeckeAlgebra::mult_T(const HeckeElt& h, const WeylElement& w) const {
  HeckeElt r = h;
  for (auto s : w.word()) r = mult_T_s(r, s);
  return r;
}

HeckeElt HeckeAlgebra::multiply(const HeckeElt& a, const HeckeElt& b) const {
  check(a);
  check(b);
  HeckeElt out(rank());
  for (const auto& [v, c] : b.terms()) out = out + mult_T(a, v).times(c);
  return out;
}

HeckeElt HeckeAlgebra::power(const HeckeElt& a, unsigned k) const {
  HeckeElt r = one();
  for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

HeckeElt HeckeAlgebra::f_s(std::size_t s) const {
  HeckeElt h = T(group_->simple(s));
  h.add_term(group_->identity(), -q_[s]);
  return h;
}

HeckeElt HeckeAlgebra::f_word(const std::vector<std::size_t>& word) const {
  HeckeElt r = one();
  for (auto s : word) r = multiply(r, f_s(s));
  return r;
}

RationalElt HeckeAlgebra::zeta(const Reflection& r) const {
  Scalar sg = sigma_of(r);
  return constant(sg * sg) - q_reflection(r);
}

RationalElt HeckeAlgebra::zeta_inverse(std::size_t s) const {
  const Scalar& sg = params_.sigma[s];
  const Scalar& sp = params_.sigma_prime[s];
  Exponent minus = negate(system().simple_coroots()[s]);
  LaurentPoly num = LaurentPoly::constant(rank(), Scalar(1));
  num.add_term(scale(2, minus), Scalar(-1));
  return RationalElt::fraction(num, {BinomialFactor{sg * sp, minus}, BinomialFactor{-(sg * sp.inverse()), minus}});
}

HeckeElt HeckeAlgebra::j_s(std::size_t s) const { return f_s(s).times(zeta_inverse(s)); }

HeckeElt HeckeAlgebra::j_word(const std::vector<std::size_t>& word) const {
  HeckeElt h = one();
  for (auto s : word) h = multiply(h, j_s(s));
  return h;
}

HeckeElt HeckeAlgebra::k_tilde_reflection(const Reflection& r) const {
  HeckeElt h = j_word(r.element.word()).times(zeta(r));
  h.add_term(group_->identity(), q_reflection(r));
  return h;
}

Membership HeckeAlgebra::membership(const HeckeElt& h) const {
  Membership m;
  m.in_blh = true;
  for (const auto& [w, c] : h.terms())
    if (!c.as_polynomial()) m.in_blh = false;
  if (!m.in_blh) return m;
  m.in_ih = Membership::Tri::True;
  for (const auto& [w, c] : h.terms())
    for (const auto& [e, v] : c.numerator().terms()) {
      auto t = tits_cone_membership(system(), e, default_dominance_cap(e));
      if (t.kind == TitsMembership::Kind::InNegativeCone)
        return Membership{true, Membership::Tri::False};
      else if (t.kind == TitsMembership::Kind::Undetermined) {
        m.in_ih = Membership::Tri::Undetermined;
      }
    }
  return m;
}

std::vector<WeylElement> HeckeAlgebra::max_supp(const HeckeElt& h) const {
  std::vector<WeylElement> out;
  for (const auto& [w, c] : h.terms()) {
    bool maximal = true;
    for (const auto& [v, d] : h.terms())
      if (v != w && v.length() > w.length() && group_->bruhat_leq(w, v)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(w);
  }
  return out;
}

}  // namespace kmh
