#include "identities.hpp"

#include <random>
#include <set>

#include "error.hpp"
#include "linalg.hpp"

namespace kmh {

void CheckResult::record(bool pass, const std::string& what) {
  ++cases;
  if (pass) return;
  if (failures++ == 0) detail = what;
}

namespace {

Exponent random_exponent(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Exponent e(n);
  for (auto& v : e) v = d(rng);
  return e;
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  return Scalar(mpq_class(n, den(rng)));
}

HeckeElt random_element(const HeckeAlgebra& alg, const std::vector<WeylElement>& ball, std::mt19937_64& rng,
                        int exp_bound) {
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::uniform_int_distribution<int> nterms(1, 2);
  HeckeElt h(alg.rank());
  for (int i = nterms(rng); i > 0; --i)
    h.add_term(ball[pick(rng)], RationalElt::monomial(random_exponent(rng, alg.rank(), exp_bound), random_scalar(rng)));
  return h;
}

void all_words(std::size_t n, std::size_t len, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (!cur.empty() && cur.back() == s) continue;
    cur.push_back(s);
    all_words(n, len, cur, out);
    cur.pop_back();
  }
}

std::vector<Reflection> s_tau_reflections(const TauContext& ctx, int64_t bound) {
  std::vector<Reflection> out;
  for (const auto& c : sigma_tau(ctx, phi_tau(ctx, bound))) out.push_back(ctx.reflection(c.coords));
  return out;
}

}  // namespace

CheckResult check_associativity(const HeckeAlgebra& alg, std::uint64_t seed, std::size_t triples, std::size_t max_len,
                                int exp_bound) {
  CheckResult r{"associativity"};
  std::mt19937_64 rng(seed);
  auto ball = alg.group().enumerate_ball(max_len);
  for (std::size_t i = 0; i < triples; ++i) {
    auto a = random_element(alg, ball, rng, exp_bound);
    auto b = random_element(alg, ball, rng, exp_bound);
    auto c = random_element(alg, ball, rng, exp_bound);
    r.record(alg.multiply(alg.multiply(a, b), c).equals(alg.multiply(a, alg.multiply(b, c))),
             "triple " + std::to_string(i));
  }
  return r;
}

CheckResult check_defining_relations(const HeckeAlgebra& alg, std::uint64_t seed, std::size_t monomials) {
  CheckResult r{"defining relations"};
  const auto& g = alg.group();
  const auto n = alg.system().size();
  for (std::size_t s = 0; s < n; ++s) {
    auto ts = alg.T(g.simple(s));
    Scalar sg2 = alg.sigma(s) * alg.sigma(s);
    r.record(alg.multiply(ts, ts).equals(ts * (sg2 - Scalar(1)) + alg.one() * sg2), "quadratic s" + std::to_string(s + 1));
    for (std::size_t t = s + 1; t < n; ++t) {
      auto m = alg.system().matrix().braid_order(s, t);
      if (m == 0) continue;
      HeckeElt x = alg.one(), y = alg.one();
      for (int64_t k = 0; k < m; ++k) {
        x = alg.mult_T_s(x, k % 2 ? t : s);
        y = alg.mult_T_s(y, k % 2 ? s : t);
      }
      r.record(x.equals(y), "braid s" + std::to_string(s + 1) + " s" + std::to_string(t + 1));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < monomials; ++i) {
    auto s = pick(rng);
    auto th = alg.monomial(random_exponent(rng, alg.rank(), 3));
    auto lhs = alg.multiply(alg.theta(th), alg.T(g.simple(s)));
    auto om = alg.omega_tilde(s, th);
    auto rhs = alg.T(g.simple(s)).times(alg.twist(g.simple(s), th)) + alg.theta(om);
    r.record(lhs.equals(rhs) && om.as_polynomial().has_value(), "commutation at " + th.str());
  }
  return r;
}

CheckResult check_intertwiners(const HeckeAlgebra& alg, std::size_t max_len, std::uint64_t seed, std::size_t thetas) {
  CheckResult r{"intertwiners"};
  const auto& g = alg.group();
  std::mt19937_64 rng(seed);
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::vector<std::size_t>> words;
    std::vector<std::size_t> cur;
    all_words(g.system().size(), len, cur, words);
    std::map<WeylElement, HeckeElt> seen;
    for (const auto& w : words) {
      auto elt = g.from_word(w);
      if (elt.length() != len) continue;
      auto f = alg.f_word(w);
      auto it = seen.find(elt);
      if (it != seen.end()) {
        r.record(f.equals(it->second), "F_w depends on the word " + word_string(w));
        continue;
      }
      seen.emplace(elt, f);
      bool tri = f.coeff(elt).equals(alg.constant(Scalar(1)));
      for (const auto& [v, c] : f.terms()) tri = tri && (v == elt || (v.length() < len && g.bruhat_leq(v, elt)));
      r.record(tri, "F_w - T_w not Bruhat-lower for " + word_string(elt));
      for (std::size_t i = 0; i < thetas; ++i) {
        auto th = alg.monomial(random_exponent(rng, alg.rank(), 2));
        auto lhs = alg.multiply(alg.theta(th), f);
        auto rhs = f.times(alg.twist(g.inverse(elt), th));
        r.record(lhs.equals(rhs), "theta F_w for " + word_string(elt));
      }
    }
  }
  return r;
}

CheckResult check_k_tilde(const TauContext& ctx, TauBounds bounds) {
  CheckResult r{"K~ relations"};
  const auto& alg = ctx.algebra();
  auto s = s_tau_reflections(ctx, bounds.coroot_height);
  try {
    s_tau_matrix(ctx, s);
    r.record(true, "");
  } catch (const Error& e) {
    r.record(false, e.what());
  }
  for (const auto& x : s) {
    auto k = alg.k_tilde_reflection(x);
    Scalar sg2 = alg.sigma_of(x) * alg.sigma_of(x);
    r.record(alg.multiply(k, k).equals(k * (sg2 - Scalar(1)) + alg.one() * sg2),
             "quadratic for " + word_string(x.element));
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Scalar p = ctx.pairing(s[i], s[j]) * ctx.pairing(s[j], s[i]);
      std::size_t m = p == Scalar(0) ? 2 : p == Scalar(1) ? 3 : p == Scalar(2) ? 4 : p == Scalar(3) ? 6 : 0;
      if (m == 0) continue;
      HeckeElt a = alg.one(), b = alg.one();
      for (std::size_t k = 0; k < m; ++k) {
        a = alg.multiply(a, alg.k_tilde_reflection(k % 2 ? s[j] : s[i]));
        b = alg.multiply(b, alg.k_tilde_reflection(k % 2 ? s[i] : s[j]));
      }
      r.record(a.equals(b), "braid for " + word_string(s[i].element) + ", " + word_string(s[j].element));
    }
  // Every reduced S_tau-word of each element gives the same product.
  std::vector<std::pair<WeylElement, std::vector<Reflection>>> level{{ctx.group().identity(), {}}};
  std::map<WeylElement, HeckeElt> first;
  for (std::size_t len = 1; len <= bounds.length; ++len) {
    std::vector<std::pair<WeylElement, std::vector<Reflection>>> next;
    for (const auto& [w, word] : level)
      for (const auto& x : s) {
        auto wx = ctx.group().multiply(w, x.element);
        if (ctx.ell_tau(wx) != len) continue;
        auto nw = word;
        nw.push_back(x);
        auto k = ctx.k_tilde_word(nw);
        auto it = first.find(wx);
        if (it == first.end()) {
          bool top = alg.max_supp(k) == std::vector<WeylElement>{wx};
          r.record(top, "max supp of K~ for " + word_string(wx));
          first.emplace(wx, k);
        } else {
          r.record(k.equals(it->second), "K~ depends on the word for " + word_string(wx));
        }
        next.emplace_back(wx, nw);
      }
    level = std::move(next);
  }
  return r;
}

CheckResult check_ord(const PrincipalModule& m, TauBounds bounds, std::uint64_t seed, std::size_t randoms) {
  CheckResult r{"ord = ell_tau + 1"};
  auto basis = m.itg_basis(bounds);
  for (const auto& [w, v] : basis) {
    auto o = m.ord_tau(v);
    r.record(o == m.context().ell_tau(w) + 1, "basis vector " + word_string(w) + " has ord " + std::to_string(o));
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < randoms; ++i) {
    ModuleVector x;
    while (x.is_zero())
      for (const auto& [w, v] : basis)
        if (coin(rng)) x = x + v * random_scalar(rng);
    auto st = m.stats(x);
    auto o = m.ord_tau(x);
    r.record(st.ell_tau && o == *st.ell_tau + 1, "random combination " + std::to_string(i));
  }
  return r;
}

CheckResult check_weight_dimension(const PrincipalModule& m, std::size_t ball) {
  CheckResult r{"weight space dimension"};
  const auto& ctx = m.context();
  auto dom = ctx.group().enumerate_ball(ball);
  auto dim = m.weight_space(ctx.tau(), dom).size();
  auto rt = r_tau_ball(ctx, ball).size();
  r.record(dim == rt, "dimension " + std::to_string(dim) + " vs |R_tau ball| " + std::to_string(rt));
  return r;
}

CheckResult check_action_extension(const PrincipalModule& m, TauBounds bounds, std::uint64_t seed, std::size_t count) {
  CheckResult r{"extended action"};
  const auto& ctx = m.context();
  const auto& alg = m.algebra();
  const auto& tau = ctx.tau();
  auto basis = m.itg_basis(bounds);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::bernoulli_distribution coin(0.5);

  for (const auto& [w, v] : basis) r.record(m.k_tau_act(ctx.k_tilde(w), m.v_tau()) == v, "K~_w . v for " + word_string(w));
  for (int i = 0; i < 4; ++i) {
    auto e = random_exponent(rng, alg.rank(), 2);
    Scalar c = random_scalar(rng);
    BinomialFactor f{c, random_exponent(rng, alg.rank(), 1)};
    if (kmh::is_zero(f.direction) || f.evaluate(tau).is_zero()) continue;
    auto th = RationalElt::fraction(LaurentPoly::monomial(e), {f});
    r.record(m.k_tau_act(alg.theta(th), m.v_tau()) == m.v_tau() * th.evaluate(tau), "theta . v for " + th.str());
  }

  for (std::size_t i = 0; i < count; ++i) {
    // sum_w K~_w g_w p_w with g_w clearing the denominators of K~_w.
    HeckeElt k(alg.rank());
    for (int t = 0; t < 2; ++t) {
      const auto& w = basis[pick(rng)].first;
      const auto& kw = ctx.k_tilde(w);
      std::set<BinomialFactor> fs;
      for (const auto& [v, c] : kw.terms()) fs.insert(c.denominator().begin(), c.denominator().end());
      LaurentPoly g = LaurentPoly::monomial(random_exponent(rng, alg.rank(), 1), random_scalar(rng));
      for (const auto& f : fs) g = g * f.as_poly();
      k = k + kw.times(RationalElt(g));
    }
    ModuleVector x;
    for (const auto& [w, v] : basis)
      if (coin(rng)) x = x + v * random_scalar(rng);
    r.record(m.k_tau_act(k, x) == m.act(k, x), "random element " + std::to_string(i));
  }
  return r;
}

CheckResult check_omega_formula(const TauContext& ctx, TauBounds bounds, std::uint64_t seed, std::size_t count) {
  CheckResult r{"Omega~ at tau"};
  const auto& alg = ctx.algebra();
  const auto& sys = alg.system();
  auto s = s_tau_reflections(ctx, bounds.coroot_height);
  if (s.empty()) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& x = s[pick(rng)];
    auto lam = random_exponent(rng, alg.rank(), 3);
    auto lhs = alg.omega_reflection(x, alg.monomial(lam)).evaluate(ctx.tau());
    int64_t pair = sys.root_on(x.base, x.conjugator.y_inverse().apply(lam));
    auto rhs = ctx.tau()(lam) * ctx.sigma_pp(x) * Scalar(static_cast<long>(pair));
    r.record(lhs == rhs, "lambda with alpha_r(lambda) = " + std::to_string(pair));
  }
  return r;
}

KacMoodyMatrix rank4_default_matrix() {
  return KacMoodyMatrix({{2, -2, -2, -2}, {-2, 2, -2, -2}, {-2, -2, 2, -3}, {-2, -2, -3, 2}});
}

Rank4Report rank4_conjugates(const KacMoodyMatrix& a, const Scalar& sigma, int64_t coroot_bound) {
  if (a.size() != 4) throw Error(ErrorCode::ConfigError, "the example needs a 4x4 matrix");
  Rank4Report rep;
  rep.coroot_bound = coroot_bound;
  Matrix dm(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) dm.at(i, j) = Scalar(static_cast<long>(a.at(i, j)));
  rep.determinant = determinant(dm);
  if (rep.determinant.is_zero()) throw Error(ErrorCode::ConfigError, "the matrix is not invertible");
  auto sys = RootSystem::from_matrix(a);
  auto params = ParameterSet::equal(4, sigma);
  validate_system(sys, params);
  HeckeAlgebra alg(std::make_shared<const WeylGroup>(sys), params);
  TauContext ctx(alg, Character(std::vector<Scalar>(4, Scalar(-1))));
  const auto& g = alg.group();
  std::set<Exponent> enumerated;
  for (const auto& c : enumerate_coroots(sys, coroot_bound))
    if (c.positive) enumerated.insert(c.coords);
  rep.enumerated = enumerated.size();
  Exponent a4{0, 0, 0, 1};
  for (const auto& w : std::vector<std::vector<std::size_t>>{{}, {0}, {1}, {0, 1}, {1, 0}}) {
    Rank4Conjugate c;
    c.w = w;
    auto u = g.from_word(w);
    c.v = g.multiply(g.multiply(u, g.from_word({2, 3, 2})), g.inverse(u));
    c.alpha_v = g.act_on_coroot(g.multiply(u, g.simple(2)), a4);
    c.inversions = ctx.phi_inversions(c.v);
    c.in_s_tau = ctx.in_s_tau(c.alpha_v);
    int64_t h = Coroot{c.alpha_v, true}.height();
    rep.needed_bound = std::max(rep.needed_bound, h);
    c.certified = enumerated.count(c.alpha_v) && c.in_s_tau && c.inversions.size() == 1 &&
                  c.inversions[0].coords == c.alpha_v && ctx.reflection(c.alpha_v).element == c.v;
    if (c.certified) ++rep.certified;
    rep.conjugates.push_back(std::move(c));
  }
  return rep;
}

}  // namespace kmh
