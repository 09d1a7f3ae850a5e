#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "error.hpp"
#include "fixtures.hpp"

using namespace kmh;
using fx::ex;

namespace {

std::set<Exponent> coords_of(const std::vector<Coroot>& cs) {
  std::set<Exponent> s;
  for (const auto& c : cs) s.insert(c.coords);
  return s;
}

// Orbit of the simple coroots under all words of length <= depth, applied letter by letter.
std::set<Exponent> orbit_oracle(const RootSystem& sys, int depth, int64_t bound) {
  std::set<Exponent> cur;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    Exponent e(sys.size(), 0);
    e[i] = 1;
    cur.insert(e);
    cur.insert(negate(e));
  }
  for (int d = 0; d < depth; ++d) {
    auto next = cur;
    for (const auto& v : cur)
      for (std::size_t i = 0; i < sys.size(); ++i) next.insert(sys.reflect_coroot(i, v));
    cur = std::move(next);
  }
  std::set<Exponent> out;
  for (const auto& v : cur)
    if (Coroot{v, true}.height() <= bound) out.insert(v);
  return out;
}

bool is_subword(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < big.size() && j < small.size(); ++i)
    if (big[i] == small[j]) ++j;
  return j == small.size();
}

bool subword_oracle(const WeylGroup& g, const WeylElement& v, const WeylElement& w) {
  for (const auto& rv : g.reduced_words(v))
    for (const auto& rw : g.reduced_words(w))
      if (is_subword(rv, rw)) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_system") {
  CHECK_NOTHROW(validate_system(fx::a1_weight(), ParameterSet::equal(1, Scalar(2))));
  CHECK_NOTHROW(validate_system(fx::affine_a1(), ParameterSet::equal(2, Scalar(2))));
  ParameterSet p{{Scalar(2), Scalar(3)}, {Scalar(2), Scalar(3)}};
  try {
    validate_system(fx::a2(), p);
    FAIL("expected violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParameterConstraintViolation);
  }
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of([] { validate_system(RootSystem::from_matrix(KacMoodyMatrix({{1}})), ParameterSet::equal(1, Scalar(2))); }) == ErrorCode::DiagonalNot2);
  CHECK(code_of([] { validate_system(RootSystem::from_matrix(KacMoodyMatrix({{2, 1}, {-1, 2}})), ParameterSet::equal(2, Scalar(2))); }) == ErrorCode::SignViolation);
  CHECK(code_of([] { validate_system(RootSystem(KacMoodyMatrix({{2}}), {{1}}, {{1}}), ParameterSet::equal(1, Scalar(2))); }) == ErrorCode::PairingMismatch);
  CHECK(code_of([] { validate_system(fx::a1(), ParameterSet::equal(1, Scalar(mpq_class(1, 2)))); }) == ErrorCode::ParameterModulusViolation);
  CHECK(code_of([] { validate_system(fx::a1_weight(), ParameterSet{{Scalar(2)}, {Scalar(3)}}); }) == ErrorCode::ParameterConstraintViolation);
  CHECK_NOTHROW(validate_system(fx::a1(), ParameterSet{{Scalar(2)}, {Scalar(3)}}));
  CHECK(code_of([] {
          validate_system(RootSystem(KacMoodyMatrix({{2, -2}, {-2, 2}}), {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}}), ParameterSet::equal(2, Scalar(2)));
        }) == ErrorCode::IndependenceViolation);
}

TEST_CASE("reflect") {
  auto a1 = fx::a1();
  CHECK(a1.reflect(0, ex({1})) == ex({-1}));
  auto a2 = fx::a2();
  CHECK(a2.reflect(0, ex({0, 1})) == ex({1, 1}));
  CHECK(a2.reflect(1, ex({0, 0})) == ex({0, 0}));
  std::mt19937_64 rng(3);
  for (const auto& sys : {fx::a2(), fx::affine_a1(), fx::hyperbolic3(), fx::b2()})
    for (int k = 0; k < 20; ++k) {
      auto v = fx::random_exponent(rng, sys.rank(), 4);
      for (std::size_t i = 0; i < sys.size(); ++i) CHECK(sys.reflect(i, sys.reflect(i, v)) == v);
    }
}

TEST_CASE("enumerate_coroots") {
  CHECK(coords_of(enumerate_coroots(fx::a1(), 5)) == std::set<Exponent>{{1}, {-1}});
  CHECK(coords_of(enumerate_coroots(fx::a2(), 2)) == std::set<Exponent>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  CHECK(coords_of(enumerate_coroots(fx::affine_a1(), 3)) ==
        std::set<Exponent>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 1}, {-2, -1}, {1, 2}, {-1, -2}});
  CHECK(enumerate_coroots(fx::b2(), 10).size() == 8);
  CHECK(enumerate_coroots(fx::a3(), 10).size() == 12);
  for (const auto& sys : {fx::a2(), fx::affine_a1(), fx::hyperbolic3(), fx::b2(), fx::a3()}) {
    const int64_t bound = 7;
    auto cs = enumerate_coroots(sys, bound);
    auto set = coords_of(cs);
    CHECK(set == orbit_oracle(sys, 12, bound));
    for (const auto& c : cs) {
      CHECK(set.count(negate(c.coords)));
      CHECK(c.positive == is_positive_coords(c.coords));
      for (std::size_t i = 0; i < sys.size(); ++i) {
        auto img = sys.reflect_coroot(i, c.coords);
        if (Coroot{img, true}.height() <= bound) CHECK(set.count(img));
      }
    }
    for (std::size_t k = 1; k < cs.size(); ++k) CHECK(cs[k - 1].height() <= cs[k].height());
  }
}

TEST_CASE("tits cone") {
  auto a2 = fx::a2();
  auto t = tits_cone_membership(a2, ex({1, 1}), 10);
  CHECK(t.kind == TitsMembership::Kind::InPositiveCone);
  auto aff = fx::affine_a1();
  auto d = tits_cone_membership(aff, ex({1, 1, 0}), 50);
  CHECK(d.kind == TitsMembership::Kind::InPositiveCone);
  CHECK(d.witness.empty());
  auto z = tits_cone_membership(aff, ex({0, 0, 0}), 1);
  CHECK(z.kind == TitsMembership::Kind::InPositiveCone);
  CHECK(z.witness.empty());
  // -d pairs to -1 with alpha_2 and to 0 with alpha_1: antidominant.
  CHECK(tits_cone_membership(aff, ex({0, 0, -1}), 50).kind == TitsMembership::Kind::InNegativeCone);
  // alpha_1^vee lies outside both cones in affine type.
  CHECK(tits_cone_membership(aff, ex({1, 0, 0}), 200).kind == TitsMembership::Kind::Undetermined);
  // The witness maps a dominant vector back onto lambda.
  auto g = fx::group(a2);
  auto r = tits_cone_membership(a2, ex({-2, 1}), 20);
  REQUIRE(r.kind == TitsMembership::Kind::InPositiveCone);
  auto w = g->from_word(r.witness);
  auto dom = g->inverse(w).y_matrix().apply(ex({-2, 1}));
  for (std::size_t i = 0; i < 2; ++i) CHECK(a2.root_on(i, dom) >= 0);
}

TEST_CASE("multiply, length, words") {
  auto g = fx::group(fx::a2());
  auto s1 = g->simple(0), s2 = g->simple(1);
  CHECK(g->multiply(s1, s1).is_identity());
  auto s12 = g->multiply(s1, s2);
  CHECK(s12.word() == std::vector<std::size_t>{0, 1});
  auto s121 = g->from_word({0, 1, 0});
  CHECK(g->multiply(s121, s1) == s12);
  CHECK(g->from_word({1, 0, 1}) == s121);
  CHECK(s121.word() == std::vector<std::size_t>{0, 1, 0});
  auto ga = fx::group(fx::affine_a1());
  CHECK(ga->from_word({0, 1, 0, 1}).length() == 4);
  CHECK(g->identity().length() == 0);
}

TEST_CASE("length and descents on balls") {
  std::mt19937_64 rng(5);
  for (const auto& sys : {fx::a2(), fx::affine_a1(), fx::hyperbolic3(), fx::b2(), fx::a3()}) {
    auto g = fx::group(sys);
    auto ball = g->enumerate_ball(4);
    auto pos = enumerate_coroots(sys, 30);
    for (const auto& w : ball) {
      auto inv = g->inversion_coroots(w);
      CHECK(inv.size() == w.length());
      // inversion oracle: positive coroots sent negative
      std::set<Exponent> brute;
      for (const auto& c : pos)
        if (c.positive && is_negative_coords(g->act_on_coroot(w, c.coords))) brute.insert(c.coords);
      CHECK(coords_of(inv) == brute);
      for (std::size_t s = 0; s < g->size(); ++s)
        CHECK(g->is_right_descent(w, s) == (g->right_mult(w, s).length() < w.length()));
      // matrix equals the product along the word
      IntMatrix m = IntMatrix::identity(sys.rank());
      for (auto s : w.word()) m = m * sys.reflection_y(s);
      CHECK(m == w.y_matrix());
    }
    for (int k = 0; k < 30; ++k) {
      const auto& u = ball[rng() % ball.size()];
      const auto& v = ball[rng() % ball.size()];
      auto uv = g->multiply(u, v);
      CHECK(uv.length() <= u.length() + v.length());
      CHECK((uv.length() + u.length() + v.length()) % 2 == 0);
      CHECK(g->multiply(uv, g->inverse(v)) == u);
    }
  }
}

TEST_CASE("enumerate_ball") {
  CHECK(fx::group(fx::a2())->enumerate_ball(3).size() == 6);
  CHECK(fx::group(fx::a2())->enumerate_ball(10).size() == 6);
  CHECK(fx::group(fx::affine_a1())->enumerate_ball(2).size() == 5);
  CHECK(fx::group(fx::b2())->enumerate_ball(10).size() == 8);
  CHECK(fx::group(fx::a3())->enumerate_ball(10).size() == 24);
  CHECK(fx::group(fx::hyperbolic3())->enumerate_ball(0).size() == 1);
  auto ball = fx::group(fx::affine_a1())->enumerate_ball(5);
  CHECK(ball.size() == 11);
  CHECK(std::is_sorted(ball.begin(), ball.end()));
}

TEST_CASE("bruhat order") {
  auto g = fx::group(fx::a2());
  CHECK(g->bruhat_leq(g->identity(), g->from_word({0, 1, 0})));
  CHECK(g->bruhat_leq(g->simple(0), g->from_word({1, 0, 1})));
  CHECK_FALSE(g->bruhat_leq(g->from_word({0, 1}), g->from_word({1, 0})));
  for (const auto& sys : {fx::a2(), fx::affine_a1(), fx::b2(), fx::hyperbolic3()}) {
    auto gg = fx::group(sys);
    auto ball = gg->enumerate_ball(sys.size() == 3 ? 3 : 4);
    for (const auto& v : ball)
      for (const auto& w : ball) {
        bool leq = gg->bruhat_leq(v, w);
        CHECK(leq == subword_oracle(*gg, v, w));
        if (leq && gg->bruhat_leq(w, v)) CHECK(v == w);
      }
  }
}

TEST_CASE("reflections from coroots") {
  auto g = fx::group(fx::a2());
  CHECK(g->reflection_from_coroot(ex({1, 0})).element == g->simple(0));
  CHECK(g->reflection_from_coroot(ex({1, 1})).element == g->from_word({0, 1, 0}));
  auto ga = fx::group(fx::affine_a1());
  CHECK(ga->reflection_from_coroot(ex({2, 1})).element == ga->from_word({0, 1, 0}));
  CHECK_THROWS_AS(ga->reflection_from_coroot(ex({1, 1})), Error);
  for (const auto& sys : {fx::a2(), fx::affine_a1(), fx::hyperbolic3(), fx::a3()}) {
    auto gg = fx::group(sys);
    for (const auto& c : enumerate_coroots(sys, 6)) {
      if (!c.positive) continue;
      auto r = gg->reflection_from_coroot(c.coords);
      CHECK(gg->act_on_coroot(r.element, c.coords) == negate(c.coords));
      CHECK(gg->multiply(r.element, r.element).is_identity());
      CHECK(coords_of(gg->inversion_coroots(r.element)).count(c.coords));
      CHECK(gg->coroot_of_reflection(r.element) == c.coords);
      CHECK(gg->right_mult(r.conjugator, r.base).length() > r.conjugator.length());
    }
  }
}
