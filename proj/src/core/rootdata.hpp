#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "intmat.hpp"
#include "scalar.hpp"

namespace kmh {

class KacMoodyMatrix {
 public:
  KacMoodyMatrix() = default;
  explicit KacMoodyMatrix(const std::vector<std::vector<int64_t>>& rows);
  KacMoodyMatrix(std::initializer_list<std::initializer_list<int64_t>> rows)
      : KacMoodyMatrix(std::vector<std::vector<int64_t>>(rows.begin(), rows.end())) {}

  std::size_t size() const { return n_; }
  int64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::vector<std::vector<int64_t>> rows() const;
  // Order of s_i s_j in the Weyl group; 0 means infinite.
  int braid_order(std::size_t i, std::size_t j) const;
  // Throws DiagonalNot2, SignViolation or ZeroPatternViolation.
  void validate() const;

 private:
  std::size_t n_ = 0;
  std::vector<int64_t> a_;
};

struct ParameterSet {
  std::vector<Scalar> sigma;
  std::vector<Scalar> sigma_prime;

  static ParameterSet equal(std::size_t n, const Scalar& s) { return {std::vector<Scalar>(n, s), std::vector<Scalar>(n, s)}; }
};

class RootSystem {
 public:
  RootSystem() = default;
  // simple_roots[i] are coordinates of alpha_i in the dual basis of Y;
  // simple_coroots[i] are coordinates of alpha_i^vee in Y.
  RootSystem(KacMoodyMatrix matrix, std::vector<Exponent> simple_roots, std::vector<Exponent> simple_coroots);
  // Y = coroot lattice; alpha_j = column j of the matrix.
  static RootSystem from_matrix(const KacMoodyMatrix& matrix);

  const KacMoodyMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.size(); }
  std::size_t rank() const { return rank_; }
  const std::vector<Exponent>& simple_roots() const { return roots_; }
  const std::vector<Exponent>& simple_coroots() const { return coroots_; }

  int64_t root_on(std::size_t i, const Exponent& y) const { return dot(roots_[i], y); }
  // alpha_i evaluated on the coroot with the given simple-coroot coordinates.
  int64_t root_on_coroot(std::size_t i, const Exponent& coords) const;
  Exponent coroot_to_y(const Exponent& coords) const;
  Exponent reflect(std::size_t i, const Exponent& v) const;
  Exponent reflect_coroot(std::size_t i, const Exponent& coords) const;
  const IntMatrix& reflection_y(std::size_t i) const { return refl_y_[i]; }
  const IntMatrix& reflection_coroot(std::size_t i) const { return refl_c_[i]; }

 private:
  KacMoodyMatrix matrix_;
  std::size_t rank_ = 0;
  std::vector<Exponent> roots_, coroots_;
  std::vector<IntMatrix> refl_y_, refl_c_;
};

// Finite Weyl group: every principal minor is positive.
bool is_finite_type(const KacMoodyMatrix& a);

// Checks all invariants of the matrix, the datum and the parameters.
void validate_system(const RootSystem& sys, const ParameterSet& params);

struct Coroot {
  Exponent coords;  // simple-coroot coordinates
  bool positive = true;

  int64_t height() const;
  int64_t ht_signed() const;
  bool operator==(const Coroot& o) const { return coords == o.coords; }
};

bool is_positive_coords(const Exponent& coords);
bool is_negative_coords(const Exponent& coords);

// Real coroots with height (sum of |n_i|) at most bound, ordered by (height, coords).
std::vector<Coroot> enumerate_coroots(const RootSystem& sys, int64_t height_bound);

// For a positive real coroot beta, returns (path, i) with beta = r_{path[0]} ... r_{path[k-1]} alpha_i^vee.
std::optional<std::pair<std::vector<std::size_t>, std::size_t>> coroot_descent(const RootSystem& sys, const Exponent& coords);

struct TitsMembership {
  enum class Kind { InPositiveCone, InNegativeCone, Undetermined };
  Kind kind = Kind::Undetermined;
  // lambda lies in w.C for w the product of the reflections along this word (0-based indices).
  std::vector<std::size_t> witness;
};

int64_t default_dominance_cap(const Exponent& lambda);
TitsMembership tits_cone_membership(const RootSystem& sys, const Exponent& lambda, int64_t step_cap);
const char* tits_kind_name(TitsMembership::Kind k);

}  // namespace kmh
