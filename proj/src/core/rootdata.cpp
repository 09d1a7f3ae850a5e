#include "rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"
#include "linalg.hpp"

namespace kmh {

KacMoodyMatrix::KacMoodyMatrix(const std::vector<std::vector<int64_t>>& rows) : n_(rows.size()) {
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorCode::ConfigError, "matrix must be square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

std::vector<std::vector<int64_t>> KacMoodyMatrix::rows() const {
  std::vector<std::vector<int64_t>> r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i].assign(a_.begin() + static_cast<long>(i * n_), a_.begin() + static_cast<long>((i + 1) * n_));
  return r;
}

int KacMoodyMatrix::braid_order(std::size_t i, std::size_t j) const {
  if (i == j) return 1;
  switch (at(i, j) * at(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

void KacMoodyMatrix::validate() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (at(i, i) != 2)
      throw Error(ErrorCode::DiagonalNot2, "a[" + std::to_string(i + 1) + "][" + std::to_string(i + 1) + "] = " + std::to_string(at(i, i)) + ", expected 2");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0)
        throw Error(ErrorCode::SignViolation, "a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + std::to_string(at(i, j)) + " is positive");
      if ((at(i, j) == 0) != (at(j, i) == 0))
        throw Error(ErrorCode::ZeroPatternViolation, "a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] and its transpose entry disagree on vanishing");
    }
}

RootSystem::RootSystem(KacMoodyMatrix matrix, std::vector<Exponent> simple_roots, std::vector<Exponent> simple_coroots)
    : matrix_(std::move(matrix)), roots_(std::move(simple_roots)), coroots_(std::move(simple_coroots)) {
  const std::size_t n = matrix_.size();
  if (n == 0) throw Error(ErrorCode::ConfigError, "empty Kac-Moody matrix");
  if (roots_.size() != n || coroots_.size() != n)
    throw Error(ErrorCode::ConfigError, "need one simple root and one simple coroot per matrix index");
  rank_ = roots_[0].size();
  if (rank_ == 0) throw Error(ErrorCode::ConfigError, "lattice rank must be positive");
  for (std::size_t i = 0; i < n; ++i)
    if (roots_[i].size() != rank_ || coroots_[i].size() != rank_)
      throw Error(ErrorCode::ConfigError, "simple root/coroot vectors must all have length rank");
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix ry = IntMatrix::identity(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) ry.at(r, c) -= checked_mul(coroots_[i][r], roots_[i][c]);
    refl_y_.push_back(std::move(ry));
    IntMatrix rc = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) rc.at(i, j) -= matrix_.at(j, i);
    refl_c_.push_back(std::move(rc));
  }
}

RootSystem RootSystem::from_matrix(const KacMoodyMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<Exponent> roots(n, Exponent(n)), coroots(n, Exponent(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) roots[j][i] = matrix.at(i, j);
    coroots[j][j] = 1;
  }
  return RootSystem(matrix, roots, coroots);
}

int64_t RootSystem::root_on_coroot(std::size_t i, const Exponent& coords) const {
  int64_t s = 0;
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) s = checked_add(s, checked_mul(coords[j], matrix_.at(j, i)));
  return s;
}

Exponent RootSystem::coroot_to_y(const Exponent& coords) const {
  Exponent y(rank_, 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) y = add(y, scale(coords[i], coroots_[i]));
  return y;
}

Exponent RootSystem::reflect(std::size_t i, const Exponent& v) const {
  return sub(v, scale(root_on(i, v), coroots_[i]));
}

Exponent RootSystem::reflect_coroot(std::size_t i, const Exponent& coords) const {
  Exponent r = coords;
  r[i] = checked_add(r[i], -root_on_coroot(i, coords));
  return r;
}

namespace {

bool independent(const std::vector<Exponent>& vs) {
  Matrix m(vs.size(), vs[0].size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j) m.at(i, j) = Scalar(static_cast<long>(vs[i][j]));
  return rank(m) == vs.size();
}

// |x| > 1, decided exactly.
bool modulus_exceeds_one(const Scalar& x) {
  if (x.is_real()) return (x * x - Scalar(1)).sign() > 0;
  mpq_class a = x.rational_part(), b = x.irrational_part();
  return a * a - b * b * x.radicand() > 1;
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

void validate_system(const RootSystem& sys, const ParameterSet& params) {
  const auto& a = sys.matrix();
  a.validate();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int64_t p = dot(sys.simple_roots()[j], sys.simple_coroots()[i]);
      if (p != a.at(i, j))
        throw Error(ErrorCode::PairingMismatch, "alpha_" + idx(j) + "(alpha_" + idx(i) + "^vee) = " + std::to_string(p) + " but a[" + idx(i) + "][" + idx(j) + "] = " + std::to_string(a.at(i, j)));
    }
  if (!independent(sys.simple_roots())) throw Error(ErrorCode::IndependenceViolation, "simple roots are linearly dependent");
  if (!independent(sys.simple_coroots())) throw Error(ErrorCode::IndependenceViolation, "simple coroots are linearly dependent");

  if (params.sigma.size() != n || params.sigma_prime.size() != n)
    throw Error(ErrorCode::ConfigError, "need sigma and sigma' for every simple reflection");
  for (std::size_t s = 0; s < n; ++s) {
    int64_t g = 0;
    for (auto v : sys.simple_roots()[s]) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 1 && params.sigma[s] != params.sigma_prime[s])
      throw Error(ErrorCode::ParameterConstraintViolation, "alpha_" + idx(s) + "(Y) = Z forces sigma_" + idx(s) + " = sigma'_" + idx(s));
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (s != t && a.at(s, t) == -1 && a.at(t, s) == -1) {
        const Scalar& x = params.sigma[s];
        if (params.sigma[t] != x || params.sigma_prime[s] != x || params.sigma_prime[t] != x)
          throw Error(ErrorCode::ParameterConstraintViolation, "s_" + idx(s) + " and s_" + idx(t) + " are joined by a -1/-1 edge, so all four parameters must coincide");
      }
  for (std::size_t s = 0; s < n; ++s) {
    if (!modulus_exceeds_one(params.sigma[s]))
      throw Error(ErrorCode::ParameterModulusViolation, "|sigma_" + idx(s) + "| = |" + params.sigma[s].str() + "| is not > 1");
    if (!modulus_exceeds_one(params.sigma_prime[s]))
      throw Error(ErrorCode::ParameterModulusViolation, "|sigma'_" + idx(s) + "| = |" + params.sigma_prime[s].str() + "| is not > 1");
  }
}

bool is_finite_type(const KacMoodyMatrix& a) {
  const std::size_t n = a.size();
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) idx.push_back(i);
    Matrix m(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = Scalar(static_cast<long>(a.at(idx[i], idx[j])));
    if (determinant(m).sign() <= 0) return false;
  }
  return true;
}

int64_t Coroot::height() const {
  int64_t h = 0;
  for (auto v : coords) h = checked_add(h, v < 0 ? -v : v);
  return h;
}

int64_t Coroot::ht_signed() const {
  int64_t h = 0;
  for (auto v : coords) h = checked_add(h, v);
  return h;
}

bool is_positive_coords(const Exponent& coords) {
  bool any = false;
  for (auto v : coords) {
    if (v < 0) return false;
    any = any || v > 0;
  }
  return any;
}

bool is_negative_coords(const Exponent& coords) { return is_positive_coords(negate(coords)); }

std::vector<Coroot> enumerate_coroots(const RootSystem& sys, int64_t height_bound) {
  const std::size_t n = sys.size();
  std::set<Exponent> seen;
  std::vector<Exponent> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Exponent> next;
    for (const auto& beta : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        Exponent img = sys.reflect_coroot(i, beta);
        if (!is_positive_coords(img)) continue;
        Coroot c{img, true};
        if (c.height() > height_bound || seen.count(img)) continue;
        seen.insert(img);
        next.push_back(img);
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<Coroot> out;
  for (const auto& e : seen) {
    if (Coroot{e, true}.height() > height_bound) continue;
    out.push_back(Coroot{e, true});
    out.push_back(Coroot{negate(e), false});
  }
  std::sort(out.begin(), out.end(), [](const Coroot& x, const Coroot& y) {
    auto hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x.coords < y.coords;
  });
  return out;
}

std::optional<std::pair<std::vector<std::size_t>, std::size_t>> coroot_descent(const RootSystem& sys, const Exponent& coords) {
  if (!is_positive_coords(coords)) return std::nullopt;
  const std::size_t n = sys.size();
  std::vector<std::size_t> path;
  Exponent cur = coords;
  while (true) {
    int64_t h = Coroot{cur, true}.height();
    if (h == 1) {
      for (std::size_t i = 0; i < n; ++i)
        if (cur[i] == 1) return std::make_pair(path, i);
    }
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (sys.root_on_coroot(i, cur) > 0) {
        Exponent img = sys.reflect_coroot(i, cur);
        if (!is_positive_coords(img)) return std::nullopt;
        cur = std::move(img);
        path.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
}

int64_t default_dominance_cap(const Exponent& lambda) {
  int64_t h = 0;
  for (auto v : lambda) h = checked_add(h, v < 0 ? -v : v);
  return checked_add(checked_mul(10, h), 10);
}

const char* tits_kind_name(TitsMembership::Kind k) {
  switch (k) {
    case TitsMembership::Kind::InPositiveCone: return "InPositiveCone";
    case TitsMembership::Kind::InNegativeCone: return "InNegativeCone";
    case TitsMembership::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

TitsMembership tits_cone_membership(const RootSystem& sys, const Exponent& lambda, int64_t step_cap) {
  for (int sign : {1, -1}) {
    Exponent cur = lambda;
    std::vector<std::size_t> word;
    for (int64_t step = 0; step <= step_cap; ++step) {
      std::size_t bad = sys.size();
      for (std::size_t i = 0; i < sys.size(); ++i)
        if (sign * sys.root_on(i, cur) < 0) {
          bad = i;
          break;
        }
      if (bad == sys.size()) {
        return {sign > 0 ? TitsMembership::Kind::InPositiveCone : TitsMembership::Kind::InNegativeCone, word};
      }
      if (step == step_cap) break;
      cur = sys.reflect(bad, cur);
      word.push_back(bad);
    }
  }
  return {};
}

}  // namespace kmh
