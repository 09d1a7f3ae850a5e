#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hecke.hpp"

namespace kmh {

struct TauBounds {
  int64_t coroot_height = 12;
  std::size_t length = 6;
};

// Exact tau-dependent predicates, with per-object caches.
class TauContext {
 public:
  TauContext(const HeckeAlgebra& alg, Character tau);

  const HeckeAlgebra& algebra() const { return alg_; }
  const WeylGroup& group() const { return alg_.group(); }
  const Character& tau() const { return tau_; }

  Reflection reflection(const Exponent& coords) const;
  // coords may have either sign.
  bool in_phi(const Exponent& coords) const;
  bool zeta_num_vanishes(const Exponent& coords) const;
  std::vector<Coroot> phi_inversions(const WeylElement& w) const;
  bool in_s_tau(const Exponent& positive_coords) const;
  bool in_w_tau(const WeylElement& w) const;

  struct Decomposition {
    WeylElement rest;                // no inversions in the tau-coroots
    std::vector<Reflection> tau_word;  // w = rest * tau_word[0] * ... * tau_word[k-1]
  };
  Decomposition decompose(const WeylElement& w) const;
  bool in_w_paren_tau(const WeylElement& w) const { return decompose(w).rest.is_identity(); }
  // Length on (W_(tau), S_tau); w must lie in W_(tau).
  std::size_t ell_tau(const WeylElement& w) const;

  Scalar sigma_pp(const Reflection& r) const;
  // Product of K~_r along a reduced word over S_tau.
  HeckeElt k_tilde_word(const std::vector<Reflection>& word) const;
  const HeckeElt& k_tilde(const WeylElement& w) const;
  Scalar pairing(const Reflection& r, const Reflection& s) const;  // alpha_s(alpha_r^vee)

 private:
  struct CorootInfo {
    bool phi = false;
    bool num_zero = false;
  };
  const CorootInfo& info(const Exponent& positive_coords) const;

  const HeckeAlgebra& alg_;
  Character tau_;
  std::vector<RationalElt> zeta_simple_;
  mutable std::mutex mu_;
  mutable std::map<Exponent, Reflection> refl_cache_;
  mutable std::map<Exponent, CorootInfo> info_cache_;
  mutable std::map<WeylElement, HeckeElt> ktilde_cache_;
};

struct UCResult {
  bool in_u_c = true;
  std::optional<Exponent> witness;
  int64_t bound = 0;
  bool complete = false;
};

struct KatoVerdict {
  enum class Status { Irreducible, Reducible, Undetermined };
  Status status = Status::Undetermined;
  TauBounds bounds;
  bool complete = false;  // the whole (finite) group and root system were enumerated
  std::optional<Exponent> witness_coroot;
  std::optional<WeylElement> witness_element;
};
const char* kato_status_name(KatoVerdict::Status s);

struct TauAnalysis {
  Character tau;
  TauBounds bounds;
  bool finite_group = false;
  std::vector<Coroot> coroots;  // enumerated
  std::vector<Coroot> phi_tau;
  std::vector<Coroot> sigma_tau;
  std::vector<Reflection> s_tau;
  bool sigma_cross_check = true;
  std::vector<std::vector<int64_t>> s_tau_matrix;
  std::vector<WeylElement> w_tau_ball, w_paren_tau_ball, r_tau_ball;
  std::vector<Scalar> sigma_pp;  // aligned with s_tau
  std::optional<Scalar> rho;
  UCResult u_c;
  bool semidirect = true;
};

std::vector<Coroot> phi_tau(const TauContext& ctx, int64_t coroot_bound);
// Reflection criterion; the conic cross-check result is stored in *agree when given.
std::vector<Coroot> sigma_tau(const TauContext& ctx, const std::vector<Coroot>& phi_plus, bool* agree = nullptr);
std::vector<std::vector<int64_t>> s_tau_matrix(const TauContext& ctx, const std::vector<Reflection>& s_tau);
std::vector<WeylElement> w_tau_ball(const TauContext& ctx, std::size_t length);
std::vector<WeylElement> w_paren_tau_ball(const TauContext& ctx, std::size_t length);
std::vector<WeylElement> r_tau_ball(const TauContext& ctx, std::size_t length);
std::optional<Scalar> rho_check(const std::vector<Scalar>& sigma_pp_values);
UCResult u_c_check(const TauContext& ctx, int64_t coroot_bound);
KatoVerdict kato_check(const TauContext& ctx, TauBounds bounds);
bool semidirect_check(const TauContext& ctx, const TauAnalysis& analysis);
TauAnalysis analyze(const TauContext& ctx, TauBounds bounds);

// Whole group, when it is finite.
std::optional<std::vector<WeylElement>> finite_group_elements(const WeylGroup& g);

}  // namespace kmh
