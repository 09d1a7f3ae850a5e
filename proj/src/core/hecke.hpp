#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coxeter.hpp"
#include "laurent.hpp"
#include "rootdata.hpp"

namespace kmh {

// sum_w T_w * theta_w, coefficients on the right.
class HeckeElt {
 public:
  using Terms = std::map<WeylElement, RationalElt>;

  explicit HeckeElt(std::size_t rank = 0) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalElt coeff(const WeylElement& w) const;
  void add_term(const WeylElement& w, const RationalElt& c);

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt operator*(const Scalar& c) const;
  // Right multiplication by an element of C(Y).
  HeckeElt times(const RationalElt& theta) const;
  bool equals(const HeckeElt& o) const;

 private:
  std::size_t rank_;
  Terms terms_;
};

struct Membership {
  bool in_blh = false;
  enum class Tri { False, True, Undetermined } in_ih = Tri::False;
};

class HeckeAlgebra {
 public:
  HeckeAlgebra(WeylGroupPtr group, ParameterSet params);

  const WeylGroup& group() const { return *group_; }
  const WeylGroupPtr& group_ptr() const { return group_; }
  const RootSystem& system() const { return group_->system(); }
  const ParameterSet& params() const { return params_; }
  std::size_t rank() const { return system().rank(); }

  HeckeElt T(const WeylElement& w) const;
  HeckeElt theta(const RationalElt& x) const;
  HeckeElt one() const { return T(group_->identity()); }
  RationalElt monomial(const Exponent& lambda) const { return RationalElt::monomial(lambda); }
  RationalElt constant(const Scalar& c) const { return RationalElt::constant(rank(), c); }

  const RationalElt& q_s(std::size_t s) const { return q_[s]; }
  RationalElt q_reflection(const Reflection& r) const;
  RationalElt twist(const WeylElement& w, const RationalElt& x) const { return x.twist(w.y_matrix()); }
  RationalElt omega_tilde(std::size_t s, const RationalElt& x) const;
  RationalElt omega_reflection(const Reflection& r, const RationalElt& x) const;

  HeckeElt mult_T_s(const HeckeElt& h, std::size_t s) const;
  HeckeElt mult_T(const HeckeElt& h, const WeylElement& w) const;
  HeckeElt multiply(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt power(const HeckeElt& a, unsigned k) const;

  HeckeElt f_s(std::size_t s) const;
  // F_{s_1} ... F_{s_k} along the given word.
  HeckeElt f_word(const std::vector<std::size_t>& word) const;
  HeckeElt f_w(const WeylElement& w) const { return f_word(w.word()); }

  // zeta_r = sigma_r^2 - Q_r, reduced.
  RationalElt zeta(const Reflection& r) const;
  const Scalar& sigma(std::size_t s) const { return params_.sigma[s]; }
  const Scalar& sigma_prime(std::size_t s) const { return params_.sigma_prime[s]; }
  Scalar sigma_of(const Reflection& r) const { return params_.sigma[r.base]; }

  RationalElt zeta_inverse(std::size_t s) const;
  // J_s = F_s / zeta_s squares to 1; w -> J_w is multiplicative.
  HeckeElt j_s(std::size_t s) const;
  HeckeElt j_word(const std::vector<std::size_t>& word) const;
  // J_r zeta_r + Q_r; equals F_r + Q_r = T_r for r simple.
  HeckeElt k_tilde_reflection(const Reflection& r) const;

  // Constants c for which 1 - c Z^mu can divide a coefficient built from Q and zeta.
  const std::vector<Scalar>& constant_pool() const { return pool_; }

  Membership membership(const HeckeElt& h) const;
  std::vector<WeylElement> max_supp(const HeckeElt& h) const;

 private:
  void check(const HeckeElt& h) const;

  WeylGroupPtr group_;
  ParameterSet params_;
  std::vector<RationalElt> q_;
  std::vector<Scalar> pool_;
};

}  // namespace kmh
