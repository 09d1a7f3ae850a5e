#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "principal.hpp"

namespace kmh {

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or a note
  bool ok() const { return cases > 0 && failures == 0; }
  void record(bool pass, const std::string& what);
};

CheckResult check_associativity(const HeckeAlgebra& alg, std::uint64_t seed, std::size_t triples,
                                std::size_t max_len = 3, int exp_bound = 2);
// Quadratic and braid relations of the T_s, commutation with random monomials.
CheckResult check_defining_relations(const HeckeAlgebra& alg, std::uint64_t seed, std::size_t monomials);
// F_w: independence of the reduced word, unitriangularity, commutation.
CheckResult check_intertwiners(const HeckeAlgebra& alg, std::size_t max_len, std::uint64_t seed, std::size_t thetas);
// K~ relations on W_(tau) up to ell_tau <= bounds.length.
CheckResult check_k_tilde(const TauContext& ctx, TauBounds bounds);
// ord_tau(x) = ell_tau(x) + 1 on basis vectors and random combinations.
CheckResult check_ord(const PrincipalModule& m, TauBounds bounds, std::uint64_t seed, std::size_t randoms);
// dim weight_space(tau, ball) = |R_tau ball|.
CheckResult check_weight_dimension(const PrincipalModule& m, std::size_t ball);
CheckResult check_action_extension(const PrincipalModule& m, TauBounds bounds, std::uint64_t seed, std::size_t count);
// tau(Omega~_r(Z^lambda)) = tau(lambda) sigma''_r alpha_r(lambda) for r in S_tau.
CheckResult check_omega_formula(const TauContext& ctx, TauBounds bounds, std::uint64_t seed, std::size_t count);

struct Rank4Conjugate {
  std::vector<std::size_t> w;
  WeylElement v;
  Exponent alpha_v;
  std::vector<Coroot> inversions;
  bool in_s_tau = false;
  bool certified = false;
};

struct Rank4Report {
  Scalar determinant;
  int64_t coroot_bound = 0;
  std::size_t enumerated = 0;
  int64_t needed_bound = 0;
  std::vector<Rank4Conjugate> conjugates;
  std::size_t certified = 0;
};

KacMoodyMatrix rank4_default_matrix();
// tau(lambda) = (-1)^{ht lambda} on Y spanned by the simple coroots.
Rank4Report rank4_conjugates(const KacMoodyMatrix& a, const Scalar& sigma, int64_t coroot_bound);

}  // namespace kmh
