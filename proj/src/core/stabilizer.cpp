#include "stabilizer.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace kmh {

namespace {

bool by_height(const Coroot& a, const Coroot& b) {
  auto ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coords < b.coords;
}

}  // namespace

TauContext::TauContext(const HeckeAlgebra& alg, Character tau) : alg_(alg), tau_(std::move(tau)) {
  if (tau_.rank() != alg_.rank()) throw Error(ErrorCode::IncompatibleData, "character rank does not match the lattice rank");
  const auto& g = alg_.group();
  for (std::size_t s = 0; s < g.size(); ++s) {
    Reflection r;
    r.element = g.simple(s);
    r.coroot = Exponent(g.size(), 0);
    r.coroot[s] = 1;
    r.base = s;
    r.conjugator = g.identity();
    zeta_simple_.push_back(alg_.zeta(r));
  }
}

Reflection TauContext::reflection(const Exponent& coords) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = refl_cache_.find(coords);
    if (it != refl_cache_.end()) return it->second;
  }
  Reflection r = group().reflection_from_coroot(coords);
  std::lock_guard<std::mutex> lock(mu_);
  return refl_cache_.emplace(coords, std::move(r)).first->second;
}

const TauContext::CorootInfo& TauContext::info(const Exponent& coords) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = info_cache_.find(coords);
    if (it != info_cache_.end()) return it->second;
  }
  const auto& sys = group().system();
  auto d = coroot_descent(sys, coords);
  if (!d) throw Error(ErrorCode::NotARealCoroot, "not a positive real coroot");
  IntMatrix u = IntMatrix::identity(sys.rank());
  for (auto s : d->first) u = u * sys.reflection_y(s);
  Character tu = tau_.compose(u);
  const RationalElt& z = zeta_simple_[d->second];
  CorootInfo ci;
  for (const auto& f : z.denominator())
    if (f.evaluate(tu).is_zero()) ci.phi = true;
  ci.num_zero = z.numerator().evaluate(tu).is_zero();
  std::lock_guard<std::mutex> lock(mu_);
  return info_cache_.emplace(coords, ci).first->second;
}

bool TauContext::in_phi(const Exponent& coords) const {
  return info(is_positive_coords(coords) ? coords : negate(coords)).phi;
}

bool TauContext::zeta_num_vanishes(const Exponent& coords) const {
  return info(is_positive_coords(coords) ? coords : negate(coords)).num_zero;
}

std::vector<Coroot> TauContext::phi_inversions(const WeylElement& w) const {
  std::vector<Coroot> out;
  for (const auto& c : group().inversion_coroots(w))
    if (info(c.coords).phi) out.push_back(c);
  std::sort(out.begin(), out.end(), by_height);
  return out;
}

bool TauContext::in_s_tau(const Exponent& coords) const {
  if (!is_positive_coords(coords) || !in_phi(coords)) return false;
  auto inv = phi_inversions(reflection(coords).element);
  return inv.size() == 1 && inv[0].coords == coords;
}

bool TauContext::in_w_tau(const WeylElement& w) const {
  // (w.tau)(e_j) = tau(w^{-1} e_j)
  return tau_.compose(w.y_inverse()) == tau_;
}

TauContext::Decomposition TauContext::decompose(const WeylElement& w) const {
  Decomposition d;
  d.rest = w;
  std::vector<Reflection> peeled;
  while (true) {
    auto inv = phi_inversions(d.rest);
    if (inv.empty()) break;
    const Coroot* pick = nullptr;
    for (const auto& c : inv)
      if (in_s_tau(c.coords)) {
        pick = &c;
        break;
      }
    if (!pick) throw Error(ErrorCode::DecompositionFailure, "no tau-simple inversion found");
    Reflection r = reflection(pick->coords);
    d.rest = group().multiply(d.rest, r.element);
    peeled.push_back(std::move(r));
  }
  d.tau_word.assign(peeled.rbegin(), peeled.rend());
  return d;
}

std::size_t TauContext::ell_tau(const WeylElement& w) const { return phi_inversions(w).size(); }

Scalar TauContext::sigma_pp(const Reflection& r) const {
  const Scalar& s = alg_.sigma(r.base);
  const Scalar& sp = alg_.sigma_prime(r.base);
  Scalar t = tau_(group().system().coroot_to_y(r.coroot));
  return ((s * s - Scalar(1)) + s * (sp - sp.inverse()) * t) / Scalar(2);
}

HeckeElt TauContext::k_tilde_word(const std::vector<Reflection>& word) const {
  HeckeElt h = alg_.one();
  WeylElement prod = group().identity();
  for (const auto& r : word) {
    if (!in_s_tau(r.coroot)) throw Error(ErrorCode::NotInK_tau, "reflection is not in S_tau");
    prod = group().multiply(prod, r.element);
  }
  if (ell_tau(prod) != word.size()) throw Error(ErrorCode::WordNotReduced, "word over S_tau is not reduced");
  for (const auto& r : word) h = alg_.multiply(h, alg_.k_tilde_reflection(r));
  return h;
}

const HeckeElt& TauContext::k_tilde(const WeylElement& w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ktilde_cache_.find(w);
    if (it != ktilde_cache_.end()) return it->second;
  }
  auto d = decompose(w);
  if (!d.rest.is_identity()) throw Error(ErrorCode::NotInK_tau, "element is not in W_(tau)");
  HeckeElt h = k_tilde_word(d.tau_word);
  std::lock_guard<std::mutex> lock(mu_);
  return ktilde_cache_.emplace(w, std::move(h)).first->second;
}

Scalar TauContext::pairing(const Reflection& r, const Reflection& s) const {
  Exponent beta = s.conjugator.coroot_inverse().apply(r.coroot);
  return Scalar(static_cast<long>(group().system().root_on_coroot(s.base, beta)));
}

const char* kato_status_name(KatoVerdict::Status s) {
  switch (s) {
    case KatoVerdict::Status::Irreducible: return "Irreducible";
    case KatoVerdict::Status::Reducible: return "Reducible";
    case KatoVerdict::Status::Undetermined: return "Undetermined";
  }
  return "?";
}

std::optional<std::vector<WeylElement>> finite_group_elements(const WeylGroup& g) {
  if (!is_finite_type(g.system().matrix())) return std::nullopt;
  return g.enumerate_ball(static_cast<std::size_t>(-1));
}

std::vector<Coroot> phi_tau(const TauContext& ctx, int64_t coroot_bound) {
  std::vector<Coroot> out;
  for (const auto& c : enumerate_coroots(ctx.group().system(), coroot_bound))
    if (ctx.in_phi(c.coords)) out.push_back(c);
  return out;
}

std::vector<Coroot> sigma_tau(const TauContext& ctx, const std::vector<Coroot>& phi_plus, bool* agree) {
  std::vector<Coroot> out;
  std::set<Exponent> pos;
  int64_t max_h = 0;
  for (const auto& c : phi_plus)
    if (c.positive) {
      pos.insert(c.coords);
      max_h = std::max(max_h, c.height());
    }
  const bool full = is_finite_type(ctx.algebra().group().system().matrix());
  bool ok = true;
  for (const auto& c : phi_plus) {
    if (!c.positive) continue;
    bool minimal = ctx.in_s_tau(c.coords);
    if (minimal) out.push_back(c);
    if (agree && (full || 2 * c.height() <= max_h)) {
      bool conic_minimal = true;
      for (const auto& b : pos) {
        if (b == c.coords) continue;
        for (int64_t k = 1; k * c.height() <= 2 * max_h && conic_minimal; ++k)
          if (pos.count(sub(scale(k, c.coords), b))) conic_minimal = false;
        if (!conic_minimal) break;
      }
      if (conic_minimal != minimal) ok = false;
    }
  }
  if (agree) *agree = ok;
  std::sort(out.begin(), out.end(), by_height);
  return out;
}

std::vector<std::vector<int64_t>> s_tau_matrix(const TauContext& ctx, const std::vector<Reflection>& s_tau) {
  std::vector<std::vector<int64_t>> m(s_tau.size(), std::vector<int64_t>(s_tau.size()));
  for (std::size_t i = 0; i < s_tau.size(); ++i)
    for (std::size_t j = 0; j < s_tau.size(); ++j)
      m[i][j] = ctx.pairing(s_tau[i], s_tau[j]).rational_part().get_num().get_si();
  if (!m.empty()) {
    try {
      KacMoodyMatrix(m).validate();
    } catch (const Error& e) {
      throw Error(ErrorCode::KacMoodyViolation, std::string("pairing matrix over Sigma_tau: ") + e.what());
    }
  }
  return m;
}

std::vector<WeylElement> w_tau_ball(const TauContext& ctx, std::size_t length) {
  std::vector<WeylElement> out;
  for (const auto& w : ctx.group().enumerate_ball(length))
    if (ctx.in_w_tau(w)) out.push_back(w);
  return out;
}

std::vector<WeylElement> w_paren_tau_ball(const TauContext& ctx, std::size_t length) {
  std::vector<WeylElement> out;
  for (const auto& w : ctx.group().enumerate_ball(length))
    if (ctx.in_w_paren_tau(w)) out.push_back(w);
  return out;
}

std::vector<WeylElement> r_tau_ball(const TauContext& ctx, std::size_t length) {
  std::vector<WeylElement> out;
  for (const auto& w : w_tau_ball(ctx, length))
    if (ctx.phi_inversions(w).empty()) out.push_back(w);
  return out;
}

std::optional<Scalar> rho_check(const std::vector<Scalar>& values) {
  if (values.empty()) return Scalar(1);
  const Scalar& v0 = values[0];
  if (v0.is_zero()) return std::nullopt;
  bool all_real = true;
  for (const auto& v : values) all_real = all_real && v.is_real();
  if (all_real) {
    int s = v0.sign();
    for (const auto& v : values)
      if (v.sign() != s) return std::nullopt;
    return Scalar(s);
  }
  for (const auto& v : values) {
    Scalar ratio = v / v0;
    if (!ratio.is_real() || ratio.sign() <= 0) return std::nullopt;
  }
  return v0;
}

UCResult u_c_check(const TauContext& ctx, int64_t coroot_bound) {
  UCResult r;
  r.bound = coroot_bound;
  const auto& g = ctx.group();
  std::vector<Exponent> candidates;
  if (auto all = finite_group_elements(g)) {
    r.complete = true;
    for (const auto& c : g.inversion_coroots(all->back())) candidates.push_back(c.coords);
    std::sort(candidates.begin(), candidates.end(), [](const Exponent& a, const Exponent& b) {
      return by_height(Coroot{a, true}, Coroot{b, true});
    });
  } else {
    for (const auto& c : enumerate_coroots(g.system(), coroot_bound))
      if (c.positive) candidates.push_back(c.coords);
  }
  for (const auto& c : candidates)
    if (ctx.zeta_num_vanishes(c)) {
      r.in_u_c = false;
      r.witness = c;
      return r;
    }
  return r;
}

KatoVerdict kato_check(const TauContext& ctx, TauBounds bounds) {
  KatoVerdict v;
  v.bounds = bounds;
  auto uc = u_c_check(ctx, bounds.coroot_height);
  auto finite = finite_group_elements(ctx.group());
  v.complete = uc.complete && finite.has_value();
  if (!uc.in_u_c) {
    v.status = KatoVerdict::Status::Reducible;
    v.witness_coroot = uc.witness;
    return v;
  }
  auto elements = finite ? *finite : ctx.group().enumerate_ball(bounds.length);
  for (const auto& w : elements)
    if (ctx.in_w_tau(w) && !ctx.in_w_paren_tau(w)) {
      v.status = KatoVerdict::Status::Reducible;
      v.witness_element = w;
      return v;
    }
  v.status = KatoVerdict::Status::Irreducible;
  return v;
}

bool semidirect_check(const TauContext& ctx, const TauAnalysis& a) {
  const auto& g = ctx.group();
  std::set<WeylElement> r_set(a.r_tau_ball.begin(), a.r_tau_ball.end());
  for (const auto& w : a.r_tau_ball)
    if (!w.is_identity() && ctx.in_w_paren_tau(w)) return false;
  for (const auto& w : a.w_tau_ball) {
    auto d = ctx.decompose(w);
    if (!ctx.in_w_tau(d.rest) || !ctx.phi_inversions(d.rest).empty()) return false;
    if (d.rest.length() <= a.bounds.length && !r_set.count(d.rest)) return false;
    WeylElement winv = g.inverse(w);
    for (const auto& s : a.s_tau)
      if (!ctx.in_w_paren_tau(g.multiply(g.multiply(w, s.element), winv))) return false;
  }
  return true;
}

TauAnalysis analyze(const TauContext& ctx, TauBounds bounds) {
  TauAnalysis a;
  a.tau = ctx.tau();
  a.bounds = bounds;
  a.finite_group = is_finite_type(ctx.group().system().matrix());
  a.coroots = enumerate_coroots(ctx.group().system(), bounds.coroot_height);
  for (const auto& c : a.coroots)
    if (ctx.in_phi(c.coords)) a.phi_tau.push_back(c);
  a.sigma_tau = sigma_tau(ctx, a.phi_tau, &a.sigma_cross_check);
  for (const auto& c : a.sigma_tau) a.s_tau.push_back(ctx.reflection(c.coords));
  a.s_tau_matrix = s_tau_matrix(ctx, a.s_tau);
  a.w_tau_ball = w_tau_ball(ctx, bounds.length);
  a.w_paren_tau_ball = w_paren_tau_ball(ctx, bounds.length);
  a.r_tau_ball = r_tau_ball(ctx, bounds.length);
  for (const auto& r : a.s_tau) a.sigma_pp.push_back(ctx.sigma_pp(r));
  a.rho = rho_check(a.sigma_pp);
  a.u_c = u_c_check(ctx, bounds.coroot_height);
  a.semidirect = semidirect_check(ctx, a);
  return a;
}

}  // namespace kmh
