#include "principal.hpp"

#include <algorithm>
#include <mutex>

#include "error.hpp"

namespace kmh {

namespace {

Exponent unit(std::size_t n, std::size_t j, int64_t sign) {
  Exponent e(n, 0);
  e[j] = sign;
  return e;
}

}  // namespace

ModuleVector ModuleVector::basis(const WeylElement& w, const Scalar& c) {
  ModuleVector v;
  v.add_term(w, c);
  return v;
}

Scalar ModuleVector::coeff(const WeylElement& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void ModuleVector::add_term(const WeylElement& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    coeffs_.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  ModuleVector r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, c);
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  ModuleVector r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, -c);
  return r;
}

ModuleVector ModuleVector::operator*(const Scalar& c) const {
  ModuleVector r;
  if (c.is_zero()) return r;
  for (const auto& [w, a] : coeffs_) r.coeffs_.emplace(w, a * c);
  return r;
}

std::string ModuleVector::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*T[" + word_string(w) + "]v";
  }
  return out;
}

ModuleVector ev_tau(const HeckeElt& h, const Character& tau) {
  ModuleVector v;
  for (const auto& [w, c] : h.terms()) {
    try {
      v.add_term(w, c.evaluate(tau));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleAtCharacter) throw;
      throw Error(ErrorCode::PoleAtCharacter, "coefficient of T[" + word_string(w) + "]: " + e.what());
    }
  }
  return v;
}

namespace {

std::vector<WeylElement> support_union(const std::vector<ModuleVector>& vs) {
  std::set<WeylElement> s;
  for (const auto& v : vs)
    for (const auto& [w, c] : v.coeffs()) s.insert(w);
  return {s.begin(), s.end()};
}

Matrix rows_of(const std::vector<ModuleVector>& vs, const std::vector<WeylElement>& index) {
  Matrix m(vs.size(), index.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) m.at(i, j) = vs[i].coeff(index[j]);
  return m;
}

}  // namespace

std::vector<ModuleVector> independent_basis(const std::vector<ModuleVector>& vs) {
  auto index = support_union(vs);
  Matrix m = rows_of(vs, index);
  auto pivots = row_reduce(m);
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    ModuleVector v;
    for (std::size_t j = 0; j < index.size(); ++j) v.add_term(index[j], m.at(i, j));
    out.push_back(v);
  }
  return out;
}

std::size_t span_dimension(const std::vector<ModuleVector>& vs) {
  auto index = support_union(vs);
  return rank(rows_of(vs, index));
}

LowerSet lower_closure(const WeylGroup& g, const std::vector<WeylElement>& ws) {
  std::set<WeylElement> seen(ws.begin(), ws.end());
  std::vector<WeylElement> stack(ws.begin(), ws.end());
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (const auto& c : g.coatoms(w))
      if (seen.insert(c).second) stack.push_back(c);
  }
  return {seen.begin(), seen.end()};
}

PrincipalModule::PrincipalModule(const TauContext& ctx) : ctx_(ctx) {}

ModuleVector PrincipalModule::v_tau() const { return ModuleVector::basis(ctx_.group().identity()); }

HeckeElt PrincipalModule::lift(const ModuleVector& x) const {
  HeckeElt h(algebra().rank());
  for (const auto& [w, c] : x.coeffs()) h.add_term(w, algebra().constant(c));
  return h;
}

ModuleVector PrincipalModule::act(const HeckeElt& h, const ModuleVector& x) const {
  if (!algebra().membership(h).in_blh) throw Error(ErrorCode::NotInBLH, "acting element has non-polynomial coefficients");
  return ev_tau(algebra().multiply(h, lift(x)), ctx_.tau());
}

ModuleVector PrincipalModule::act_theta(const Exponent& lambda, const ModuleVector& x) const {
  ModuleVector out;
  for (const auto& [w, c] : x.coeffs()) {
    auto key = std::make_pair(lambda, w);
    ModuleVector img;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = theta_cache_.find(key);
      if (it != theta_cache_.end()) img = it->second;
    }
    if (img.is_zero()) {
      img = ev_tau(algebra().multiply(algebra().theta(algebra().monomial(lambda)), algebra().T(w)), ctx_.tau());
      std::lock_guard<std::mutex> lock(mu_);
      theta_cache_.emplace(key, img);
    }
    out = out + img * c;
  }
  return out;
}

void PrincipalModule::check_lower_set(const LowerSet& dom) const {
  std::set<WeylElement> s(dom.begin(), dom.end());
  for (const auto& w : dom)
    for (const auto& c : ctx_.group().coatoms(w))
      if (!s.count(c))
        throw Error(ErrorCode::DomainNotLowerSet,
                    "domain contains " + word_string(w) + " but not " + word_string(c));
}

Matrix PrincipalModule::theta_matrix(const Exponent& lambda, const Scalar& c, const LowerSet& dom) const {
  std::map<WeylElement, std::size_t> pos;
  for (std::size_t i = 0; i < dom.size(); ++i) pos.emplace(dom[i], i);
  Matrix m(dom.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    auto img = act_theta(lambda, ModuleVector::basis(dom[j])) - ModuleVector::basis(dom[j], c);
    for (const auto& [w, a] : img.coeffs()) {
      auto it = pos.find(w);
      if (it == pos.end()) throw Error(ErrorCode::Internal, "theta action left the lower set at " + word_string(w));
      m.at(it->second, j) = a;
    }
  }
  return m;
}

namespace {

std::vector<ModuleVector> to_vectors(const std::vector<Vector>& ns, const LowerSet& dom) {
  std::vector<ModuleVector> out;
  for (const auto& v : ns) {
    ModuleVector x;
    for (std::size_t i = 0; i < dom.size(); ++i) x.add_term(dom[i], v[i]);
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<ModuleVector> PrincipalModule::weight_space(const Character& tau2, const LowerSet& dom) const {
  return generalized_weight_space(tau2, dom, 1);
}

std::vector<ModuleVector> PrincipalModule::generalized_weight_space(const Character& tau2, const LowerSet& dom,
                                                                    std::size_t n_cap) const {
  check_lower_set(dom);
  if (tau2.rank() != algebra().rank()) throw Error(ErrorCode::IncompatibleData, "character rank differs from the lattice rank");
  if (n_cap == 0) throw Error(ErrorCode::ConfigError, "n_cap must be positive");
  Matrix stacked(0, dom.size());
  const auto n = algebra().rank();
  for (std::size_t j = 0; j < n; ++j)
    for (int64_t sg : {1, -1}) {
      auto e = unit(n, j, sg);
      stacked = stacked.stacked(power(theta_matrix(e, tau2(e), dom), n_cap));
    }
  return to_vectors(nullspace(stacked), dom);
}

ModuleVector PrincipalModule::psi_vector(const WeylElement& w_r) const {
  return ev_tau(algebra().f_w(w_r), ctx_.tau());
}

ModuleVector PrincipalModule::psi(const WeylElement& w_r, const ModuleVector& x) const {
  auto u = lift(psi_vector(w_r));
  ModuleVector out;
  for (const auto& [w, c] : x.coeffs())
    out = out + ev_tau(algebra().multiply(algebra().T(w), u), ctx_.tau()) * c;
  return out;
}

const ModuleVector& PrincipalModule::itg_vector(const WeylElement& w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = itg_cache_.find(w);
    if (it != itg_cache_.end()) return it->second;
  }
  if (!ctx_.in_w_paren_tau(w)) throw Error(ErrorCode::NotInK_tau, word_string(w) + " is not in W_(tau)");
  const HeckeElt& k = ctx_.k_tilde(w);
  std::set<BinomialFactor> factors;
  for (const auto& [v, c] : k.terms()) factors.insert(c.denominator().begin(), c.denominator().end());
  LaurentPoly g = LaurentPoly::constant(algebra().rank(), Scalar(1));
  for (const auto& f : factors) g = g * f.as_poly();
  Scalar gt = g.evaluate(ctx_.tau());
  if (gt.is_zero())
    throw Error(ErrorCode::NotInU_C, "clearing polynomial of K~[" + word_string(w) + "] vanishes at tau");
  HeckeElt cleared = k.times(RationalElt(g));
  for (const auto& [v, c] : cleared.terms())
    if (!c.as_polynomial()) throw Error(ErrorCode::Internal, "clearing left a denominator");
  ModuleVector vec = ev_tau(cleared, ctx_.tau()) * gt.inverse();
  std::lock_guard<std::mutex> lock(mu_);
  return itg_cache_.emplace(w, std::move(vec)).first->second;
}

std::vector<std::pair<WeylElement, ModuleVector>> PrincipalModule::itg_basis(TauBounds bounds) const {
  auto uc = u_c_check(ctx_, bounds.coroot_height);
  if (!uc.in_u_c) throw Error(ErrorCode::NotInU_C, "tau is not in U_C");
  std::vector<WeylElement> s_tau;
  for (const auto& c : sigma_tau(ctx_, phi_tau(ctx_, bounds.coroot_height))) s_tau.push_back(ctx_.reflection(c.coords).element);
  std::vector<WeylElement> level{ctx_.group().identity()};
  std::set<WeylElement> all(level.begin(), level.end());
  for (std::size_t k = 0; k < bounds.length; ++k) {
    std::set<WeylElement> next;
    for (const auto& w : level)
      for (const auto& r : s_tau) {
        auto wr = ctx_.group().multiply(w, r);
        if (!all.count(wr) && ctx_.ell_tau(wr) == k + 1) next.insert(wr);
      }
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<std::pair<WeylElement, ModuleVector>> out;
  for (const auto& w : all) out.emplace_back(w, itg_vector(w));
  return out;
}

std::map<WeylElement, RationalElt> PrincipalModule::k_tilde_coordinates(const HeckeElt& k) const {
  std::map<WeylElement, RationalElt> out;
  HeckeElt cur = k;
  while (!cur.is_zero()) {
    const auto& [w, c] = *cur.terms().rbegin();
    WeylElement top = w;
    if (!ctx_.in_w_paren_tau(top))
      throw Error(ErrorCode::DecompositionFailure, "support element " + word_string(top) + " is outside W_(tau)");
    const HeckeElt& kw = ctx_.k_tilde(top);
    auto inv = kw.coeff(top).inverse(algebra().constant_pool());
    if (!inv)
      throw Error(ErrorCode::DecompositionFailure, "cannot invert the leading coefficient of K~[" + word_string(top) + "]");
    RationalElt theta = c * *inv;
    out[top] += theta;
    cur = cur - kw.times(theta);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

ModuleVector PrincipalModule::k_tau_act(const HeckeElt& k, const ModuleVector& x) const {
  auto st = stats(x);
  HeckeElt h(algebra().rank());
  for (const auto& [w, c] : st.coords) h = h + ctx_.k_tilde(w) * c;
  auto coords = k_tilde_coordinates(algebra().multiply(k, h));
  ModuleVector out;
  for (const auto& [w, theta] : coords) {
    if (!theta.regular_at(ctx_.tau()))
      throw Error(ErrorCode::NotInK_tau, "coordinate at " + word_string(w) + " has a pole at tau");
    out = out + itg_vector(w) * theta.evaluate(ctx_.tau());
  }
  return out;
}

std::size_t PrincipalModule::ord_tau(const ModuleVector& x) const {
  if (x.is_zero()) return 0;
  std::vector<WeylElement> supp;
  for (const auto& [w, c] : x.coeffs()) supp.push_back(w);
  const std::size_t bound = lower_closure(ctx_.group(), supp).size();
  const auto n = algebra().rank();
  std::vector<ModuleVector> span{x};
  for (std::size_t k = 1; k <= bound + 1; ++k) {
    std::vector<ModuleVector> next;
    for (const auto& v : span)
      for (std::size_t j = 0; j < n; ++j)
        for (int64_t sg : {1, -1}) {
          auto e = unit(n, j, sg);
          auto img = act_theta(e, v) - v * ctx_.tau()(e);
          if (!img.is_zero()) next.push_back(img);
        }
    span = independent_basis(next);
    if (span.empty()) return k;
  }
  throw Error(ErrorCode::NotInGenWeightSpace, "the vector is not killed by powers of the maximal ideal at tau");
}

VectorStats PrincipalModule::stats(const ModuleVector& x) const {
  VectorStats st;
  ModuleVector cur = x;
  while (!cur.is_zero()) {
    auto it = cur.coeffs().rbegin();
    WeylElement top = it->first;
    if (!ctx_.in_w_paren_tau(top))
      throw Error(ErrorCode::NotInItgSpan, "support element " + word_string(top) + " is outside W_(tau)");
    const ModuleVector& b = itg_vector(top);
    Scalar c = it->second * b.coeff(top).inverse();
    st.coords[top] = c;
    cur = cur - b * c;
  }
  for (const auto& [w, c] : st.coords) {
    auto l = ctx_.ell_tau(w);
    if (!st.ell_tau || l > *st.ell_tau) st.ell_tau = l;
  }
  for (const auto& [w, c] : st.coords)
    if (ctx_.ell_tau(w) == *st.ell_tau) {
      st.leading = st.leading + itg_vector(w) * c;
      ++st.n_tau;
    }
  return st;
}

std::optional<Exponent> PrincipalModule::strictly_dominant(int64_t box) const {
  const auto& sys = algebra().system();
  const auto n = sys.rank();
  for (int64_t r = 0; r <= box; ++r) {
    Exponent lam(n, -r);
    while (true) {
      bool on_shell = false;
      for (auto v : lam) on_shell = on_shell || v == r || v == -r;
      if (on_shell) {
        bool dom = true;
        for (std::size_t i = 0; i < sys.size() && dom; ++i) dom = sys.root_on(i, lam) > 0;
        if (dom) return lam;
      }
      std::size_t i = n;
      while (i > 0 && lam[i - 1] == r) lam[--i] = -r;
      if (i == 0) break;
      ++lam[i - 1];
    }
  }
  return std::nullopt;
}

}  // namespace kmh
