#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "stabilizer.hpp"

namespace kmh {

// sum_w a_w T_w . v_tau
class ModuleVector {
 public:
  using Coeffs = std::map<WeylElement, Scalar>;

  ModuleVector() = default;
  static ModuleVector basis(const WeylElement& w, const Scalar& c = Scalar(1));

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(const WeylElement& w) const;
  void add_term(const WeylElement& w, const Scalar& c);

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator*(const Scalar& c) const;
  bool operator==(const ModuleVector& o) const { return coeffs_ == o.coeffs_; }
  std::string str() const;

 private:
  Coeffs coeffs_;
};

using LowerSet = std::vector<WeylElement>;

// Coefficient-wise evaluation of the right coefficients.
ModuleVector ev_tau(const HeckeElt& h, const Character& tau);

// Indexes a list of module vectors over the union of their supports.
std::vector<ModuleVector> independent_basis(const std::vector<ModuleVector>& vs);
std::size_t span_dimension(const std::vector<ModuleVector>& vs);

struct VectorStats {
  std::map<WeylElement, Scalar> coords;  // K~-basis coordinates
  std::optional<std::size_t> ell_tau;    // empty for x = 0
  ModuleVector leading;
  std::size_t n_tau = 0;
};

class PrincipalModule {
 public:
  explicit PrincipalModule(const TauContext& ctx);

  const TauContext& context() const { return ctx_; }
  const HeckeAlgebra& algebra() const { return ctx_.algebra(); }
  ModuleVector v_tau() const;

  ModuleVector act(const HeckeElt& h, const ModuleVector& x) const;
  ModuleVector act_theta(const Exponent& lambda, const ModuleVector& x) const;

  void check_lower_set(const LowerSet& dom) const;
  // Matrix of Z^lambda - c on span(dom); columns follow dom.
  Matrix theta_matrix(const Exponent& lambda, const Scalar& c, const LowerSet& dom) const;

  std::vector<ModuleVector> weight_space(const Character& tau2, const LowerSet& dom) const;
  std::vector<ModuleVector> generalized_weight_space(const Character& tau2, const LowerSet& dom, std::size_t n_cap) const;

  // The value F_{w_R}(tau).v_tau, and the operator it induces.
  ModuleVector psi_vector(const WeylElement& w_r) const;
  ModuleVector psi(const WeylElement& w_r, const ModuleVector& x) const;

  // ev_tau(K~_w).v_tau, via the denominator-clearing polynomial g_w.
  const ModuleVector& itg_vector(const WeylElement& w) const;
  std::vector<std::pair<WeylElement, ModuleVector>> itg_basis(TauBounds bounds) const;  // W_(tau) up to ell_tau <= bounds.length

  // k = sum_w K~_w theta_w, requires every w in W_(tau).
  std::map<WeylElement, RationalElt> k_tilde_coordinates(const HeckeElt& k) const;
  ModuleVector k_tau_act(const HeckeElt& k, const ModuleVector& x) const;

  std::size_t ord_tau(const ModuleVector& x) const;
  VectorStats stats(const ModuleVector& x) const;

  std::optional<Exponent> strictly_dominant(int64_t box = 5) const;

 private:
  HeckeElt lift(const ModuleVector& x) const;

  const TauContext& ctx_;
  mutable std::mutex mu_;
  mutable std::map<WeylElement, ModuleVector> itg_cache_;
  mutable std::map<std::pair<Exponent, WeylElement>, ModuleVector> theta_cache_;
};

// Bruhat-lower closure of a finite set.
LowerSet lower_closure(const WeylGroup& g, const std::vector<WeylElement>& ws);

}  // namespace kmh
