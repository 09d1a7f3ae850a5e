#include <random>

#include "doctest.h"
#include "error.hpp"
#include "fixtures.hpp"
#include "principal.hpp"

using namespace kmh;
using fx::ex;

namespace {

struct Mod {
  HeckeAlgebra alg;
  TauContext ctx;
  PrincipalModule m;
  Mod(RootSystem sys, Character tau, long sigma = 2)
      : alg(fx::group(sys), ParameterSet::equal(sys.size(), Scalar(sigma))), ctx(alg, std::move(tau)), m(ctx) {}
  WeylElement w(std::vector<std::size_t> word) const { return alg.group().from_word(word); }
  ModuleVector b(std::vector<std::size_t> word, const Scalar& c = Scalar(1)) const { return ModuleVector::basis(w(word), c); }
};

HeckeElt random_blh(const HeckeAlgebra& alg, std::mt19937_64& rng, std::size_t max_len, int terms) {
  auto ball = alg.group().enumerate_ball(max_len);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  HeckeElt h(alg.rank());
  for (int i = 0; i < terms; ++i) {
    LaurentPoly p(alg.rank());
    p.add_term(fx::random_exponent(rng, alg.rank(), 1), fx::random_rational(rng));
    p.add_term(fx::random_exponent(rng, alg.rank(), 1), fx::random_rational(rng));
    h.add_term(ball[pick(rng)], RationalElt(p));
  }
  return h;
}

ModuleVector random_vector(const std::vector<std::pair<WeylElement, ModuleVector>>& basis, std::mt19937_64& rng) {
  ModuleVector x;
  std::bernoulli_distribution coin(0.5);
  for (const auto& [w, v] : basis)
    if (coin(rng)) x = x + v * fx::random_rational(rng);
  return x;
}

}  // namespace

TEST_CASE("ev_tau") {
  Mod a(fx::a1(), fx::chr({-1}));
  CHECK(ev_tau(a.alg.T(a.w({0})), a.ctx.tau()) == a.b({0}));
  CHECK(ev_tau(a.alg.f_s(0), a.ctx.tau()) == a.b({0}) + a.b({}, Scalar(mpq_class(-3, 2))));
  Mod t(fx::a1(), fx::chr({1}));
  CHECK_THROWS_WITH_AS(ev_tau(t.alg.f_s(0), t.ctx.tau()), doctest::Contains("T[e]"), Error);
  try {
    ev_tau(t.alg.f_s(0), t.ctx.tau());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtCharacter);
  }
}

TEST_CASE("plain action") {
  Mod a(fx::a1(), fx::chr({-1}));
  auto v = a.m.v_tau();
  CHECK(a.m.act(a.alg.theta(a.alg.monomial(ex({3}))), v) == v * Scalar(-1));
  CHECK(a.m.act(a.alg.theta(a.alg.monomial(ex({1}))), a.b({0})) == a.b({0}, Scalar(-1)));
  CHECK(a.m.act(a.alg.T(a.w({0})), a.b({0})) == a.b({0}, Scalar(3)) + a.b({}, Scalar(4)));
  HeckeElt bad = a.alg.f_s(0);
  CHECK_THROWS_AS(a.m.act(bad, v), Error);
  try {
    a.m.act(bad, v);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInBLH);
  }
}

TEST_CASE("weight spaces") {
  Mod a(fx::a1(), fx::chr({-1}));
  LowerSet dom{a.w({}), a.w({0})};
  CHECK(a.m.weight_space(a.ctx.tau(), dom).size() == 2);
  CHECK(a.m.generalized_weight_space(a.ctx.tau(), dom, 2).size() == 2);
  auto one = a.m.weight_space(a.ctx.tau(), {a.w({})});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == a.m.v_tau());
  try {
    a.m.weight_space(a.ctx.tau(), {a.w({0})});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainNotLowerSet);
  }

  Mod aff(fx::affine_a1(), fx::chr({1, 1, 1}));
  auto ws = aff.m.weight_space(aff.ctx.tau(), aff.alg.group().enumerate_ball(6));
  REQUIRE(ws.size() == 1);
  CHECK(independent_basis(ws) == std::vector<ModuleVector>{aff.m.v_tau()});
  CHECK(aff.m.generalized_weight_space(aff.ctx.tau(), aff.alg.group().enumerate_ball(2), 5).size() == 5);
  CHECK(aff.m.generalized_weight_space(aff.ctx.tau(), {aff.w({})}, 1).size() == 1);

  // Monotone in n_cap, stable from |dom| on.
  auto dom3 = aff.alg.group().enumerate_ball(3);
  std::size_t prev = 0;
  for (std::size_t n = 1; n <= dom3.size() + 1; ++n) {
    auto d = aff.m.generalized_weight_space(aff.ctx.tau(), dom3, n).size();
    CHECK(d >= prev);
    prev = d;
  }
  CHECK(prev == aff.m.generalized_weight_space(aff.ctx.tau(), dom3, dom3.size()).size());
}

TEST_CASE("intertwiners") {
  Mod a(fx::a1(), fx::chr({-1}));
  auto v = a.m.v_tau();
  auto x = a.b({0}, Scalar(5)) + a.b({}, Scalar(2));
  CHECK(a.m.psi(a.w({}), x) == x);
  CHECK(a.m.psi(a.w({0}), v) == a.b({0}) + a.b({}, Scalar(mpq_class(-3, 2))));

  std::vector<std::pair<RootSystem, Character>> cases = {
      {fx::a1(), fx::chr({-1})}, {fx::a2(), fx::chr({-1, -1})}, {fx::a3(), fx::chr({-1, -1, 1})},
      {fx::a2(), fx::chr({2, 3})}, {fx::b2(), fx::chr({1, -1})}};
  for (auto& [sys, tau] : cases) {
    Mod m(sys, tau);
    for (const auto& wr : r_tau_ball(m.ctx, 6)) {
      auto u = m.m.psi_vector(wr);
      for (std::size_t j = 0; j < m.alg.rank(); ++j) {
        Exponent e(m.alg.rank(), 0);
        e[j] = 1;
        CHECK(m.m.act_theta(e, u) == u * tau(e));
      }
    }
  }
}

TEST_CASE("itg basis") {
  Mod t(fx::a2(), fx::chr({1, 1}));
  auto basis = t.m.itg_basis({8, 3});
  REQUIRE(basis.size() == 6);
  for (const auto& [w, v] : basis) CHECK(v == ModuleVector::basis(w));

  Mod g(fx::a2(), fx::chr({2, 3}));
  auto gb = g.m.itg_basis({8, 3});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0].second == g.m.v_tau());

  Mod a(fx::a1(), fx::chr({1}));
  auto ab = a.m.itg_basis({8, 3});
  REQUIRE(ab.size() == 2);
  CHECK(ab[1].second.coeff(a.w({0})) == Scalar(1));
  CHECK(ab[1].second == ev_tau(a.ctx.k_tilde(a.w({0})), a.ctx.tau()));

  Mod q(fx::a1(), fx::chr({4}));
  try {
    q.m.itg_basis({8, 3});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInU_C);
  }

  // Clearing agrees with direct evaluation, and the basis is triangular.
  Mod b(fx::a3(), fx::chr({-1, -1, 1}));
  auto bb = b.m.itg_basis({8, 4});
  CHECK(bb.size() == 6);
  std::vector<ModuleVector> vs;
  for (const auto& [w, v] : bb) {
    CHECK(v == ev_tau(b.ctx.k_tilde(w), b.ctx.tau()));
    CHECK(v.coeffs().rbegin()->first == w);
    vs.push_back(v);
  }
  CHECK(span_dimension(vs) == vs.size());

  // Products of K~_r over S_tau words span the same space.
  std::vector<ModuleVector> prods;
  auto a_tau = analyze(b.ctx, {8, 2});
  std::vector<std::vector<std::size_t>> idx{{}};
  for (int len = 0; len < 4; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& i : idx)
      for (std::size_t r = 0; r < a_tau.s_tau.size(); ++r) {
        auto j = i;
        j.push_back(r);
        next.push_back(j);
      }
    for (const auto& i : idx) {
      HeckeElt h = b.alg.one();
      for (auto r : i) h = b.alg.multiply(h, b.alg.k_tilde_reflection(a_tau.s_tau[r]));
      prods.push_back(ev_tau(h, b.ctx.tau()));
    }
    idx = next;
  }
  auto all = prods;
  all.insert(all.end(), vs.begin(), vs.end());
  CHECK(span_dimension(prods) == vs.size());
  CHECK(span_dimension(all) == vs.size());
}

TEST_CASE("extended action") {
  Mod a(fx::a1(), fx::chr({-1}));
  auto v = a.m.v_tau();
  LaurentPoly num = LaurentPoly::monomial(ex({1}));
  auto theta = RationalElt::fraction(num, {BinomialFactor{Scalar(2), ex({-1})}});
  CHECK(a.m.k_tau_act(a.alg.theta(theta), v) == v * Scalar(mpq_class(-1, 3)));

  Mod b(fx::a3(), fx::chr({-1, -1, 1}));
  for (const auto& [w, vec] : b.m.itg_basis({8, 3})) CHECK(b.m.k_tau_act(b.ctx.k_tilde(w), b.m.v_tau()) == vec);

  std::mt19937_64 rng(11);
  Mod t(fx::a2(), fx::chr({1, 1}));
  auto basis = t.m.itg_basis({8, 3});
  for (int i = 0; i < 6; ++i) {
    auto h = random_blh(t.alg, rng, 2, 2);
    auto x = random_vector(basis, rng);
    CHECK(t.m.k_tau_act(h, x) == t.m.act(h, x));
  }
}

TEST_CASE("ord and stats") {
  Mod t(fx::a2(), fx::chr({1, 1}));
  CHECK(t.m.ord_tau(t.m.v_tau()) == 1);
  CHECK(t.m.ord_tau(t.b({0})) == 2);
  CHECK(t.m.ord_tau(t.b({0, 1}) + t.b({1, 0})) == 3);

  auto s0 = t.m.stats(t.m.v_tau());
  CHECK(s0.ell_tau == std::optional<std::size_t>(0));
  CHECK(s0.n_tau == 1);
  CHECK(s0.leading == t.m.v_tau());
  auto s1 = t.m.stats(t.b({0}) + t.b({0, 1}));
  CHECK(s1.ell_tau == std::optional<std::size_t>(2));
  CHECK(s1.n_tau == 1);
  CHECK(s1.leading == t.b({0, 1}));
  auto sz = t.m.stats(ModuleVector());
  CHECK_FALSE(sz.ell_tau.has_value());
  CHECK(sz.n_tau == 0);
  CHECK(sz.leading.is_zero());

  Mod g(fx::a2(), fx::chr({2, 3}));
  try {
    g.m.stats(g.b({0}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInItgSpan);
  }
  try {
    g.m.ord_tau(g.b({0}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInGenWeightSpace);
  }
}

TEST_CASE("strictly dominant probe") {
  Mod aff(fx::affine_a1(), fx::chr({1, 1, 1}));
  auto lam = aff.m.strictly_dominant();
  REQUIRE(lam);
  for (std::size_t i = 0; i < 2; ++i) CHECK(aff.alg.system().root_on(i, *lam) > 0);
  Mod t(fx::a2(), fx::chr({1, 1}));
  CHECK(t.m.strictly_dominant() == ex({1, 1}));
  CHECK_FALSE(t.m.strictly_dominant(0).has_value());
}

TEST_CASE("module properties") {
  std::mt19937_64 rng(5);
  struct Case {
    RootSystem sys;
    Character tau;
    std::size_t len;
  };
  std::vector<Case> cases = {
      {fx::a2(), fx::chr({1, 1}), 3},          {fx::affine_a1(), fx::chr({1, 1, 1}), 2},
      {fx::a1(), fx::chr({-1}), 1},            {fx::a1(), fx::chr({1}), 1},
      {fx::a2(), fx::chr({-1, -1}), 3},        {fx::a3(), fx::chr({-1, -1, 1}), 3},
      {fx::b2(), fx::chr({1, -1}), 4},
  };
  for (auto& c : cases) {
    Mod m(c.sys, c.tau);
    const auto n = m.alg.rank();
    auto basis = m.m.itg_basis({8, c.len});
    std::vector<ModuleVector> bv;
    for (const auto& [w, v] : basis) bv.push_back(v);

    for (int i = 0; i < 3; ++i) {
      auto h1 = random_blh(m.alg, rng, 2, 2), h2 = random_blh(m.alg, rng, 2, 2);
      auto x = random_vector(basis, rng) + ModuleVector::basis(m.w({0}));
      CHECK(m.m.act(m.alg.multiply(h1, h2), x) == m.m.act(h1, m.m.act(h2, x)));
    }

    auto dom = m.alg.group().enumerate_ball(2);
    std::set<WeylElement> ds(dom.begin(), dom.end());
    for (const auto& w : dom) {
      auto img = m.m.act_theta(fx::random_exponent(rng, n, 2), ModuleVector::basis(w));
      for (const auto& [u, a] : img.coeffs()) CHECK(ds.count(u));
    }

    CHECK(!m.m.weight_space(c.tau, {m.w({})}).empty());

    bool rho_ok = true;
    {
      auto a = analyze(m.ctx, {8, c.len});
      rho_ok = a.rho.has_value() && *a.rho == Scalar(1);
    }
    for (int i = 0; i < 5; ++i) {
      auto x = random_vector(basis, rng);
      auto lam = fx::random_exponent(rng, n, 2);
      auto st = m.m.stats(x);
      auto y = m.m.act_theta(lam, x) - x * c.tau(lam);
      auto sy = m.m.stats(y);
      if (st.ell_tau) {
        CHECK((!sy.ell_tau || *sy.ell_tau + 1 <= *st.ell_tau));
        if (rho_ok) CHECK(m.m.ord_tau(x) == *st.ell_tau + 1);
      } else {
        CHECK(y.is_zero());
      }
    }

    // Multiplication by theta with tau(theta) != 0 is injective.
    auto lam = fx::random_exponent(rng, n, 1);
    std::vector<ModuleVector> imgs;
    for (const auto& v : bv) imgs.push_back(m.m.act_theta(lam, v) + v * Scalar(7));
    if (!(c.tau(lam) + Scalar(7)).is_zero()) CHECK(span_dimension(imgs) == bv.size());
  }
}

TEST_CASE("weight space dimensions in finite type") {
  std::vector<std::pair<RootSystem, Character>> cases = {
      {fx::a1(), fx::chr({-1})}, {fx::a2(), fx::chr({2, 3})},  {fx::a2(), fx::chr({-1, -1})},
      {fx::a3(), fx::chr({-1, -1, 1})}, {fx::b2(), fx::chr({1, -1})}, {fx::a2(), fx::chr({1, 1})},
  };
  for (auto& [sys, tau] : cases) {
    Mod m(sys, tau);
    auto whole = *finite_group_elements(m.alg.group());
    auto r = r_tau_ball(m.ctx, whole.back().length());
    auto wt = w_tau_ball(m.ctx, whole.back().length());
    CHECK(m.m.weight_space(tau, whole).size() == r.size());
    auto gen = m.m.generalized_weight_space(tau, whole, whole.size());
    CHECK(gen.size() == wt.size());
    std::vector<ModuleVector> images;
    auto basis = m.m.itg_basis({8, whole.back().length()});
    for (const auto& wr : r)
      for (const auto& [w, v] : basis) images.push_back(m.m.psi(wr, v));
    CHECK(span_dimension(images) == gen.size());
  }
}
