#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "config.hpp"
#include "doctest.h"
#include "error.hpp"
#include "report.hpp"
#include "suite.hpp"

using namespace kmh;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Scalar random_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), pick(0, 3);
  Scalar a(mpq_class(num(rng), den(rng)));
  if (pick(rng) == 0) a += Scalar(mpq_class(0), mpq_class(num(rng) | 1, den(rng)), 2);
  if (a.is_zero()) a = Scalar(1);
  return a;
}

JobConfig random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1), len(0, 4), b(1, 50);
  const std::vector<std::vector<std::vector<int64_t>>> mats{{{2}}, {{2, -1}, {-1, 2}}, {{2, -2}, {-1, 2}}, {{2, -2}, {-2, 2}}};
  JobConfig c;
  auto m = mats[std::uniform_int_distribution<std::size_t>(0, mats.size() - 1)(rng)];
  std::size_t n = m.size();
  if (coin(rng)) {
    c.datum = DatumBlock{m, {}, {}};
    if (coin(rng)) {
      for (std::size_t i = 0; i < n; ++i) {
        c.datum->roots.push_back(Exponent(m[i].begin(), m[i].end()));
        Exponent e(n, 0);
        e[i] = 1;
        c.datum->coroots.push_back(e);
      }
    }
  }
  if (coin(rng)) {
    ParameterSet p;
    for (std::size_t i = 0; i < n; ++i) {
      p.sigma.push_back(random_value(rng));
      p.sigma_prime.push_back(random_value(rng));
    }
    if (!c.datum) c.datum = DatumBlock{m, {}, {}};
    c.params = p;
  }
  auto values = [&] {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_value(rng));
    return v;
  };
  if (coin(rng)) c.character = values();
  if (coin(rng)) c.target_character = values();
  for (int t = len(rng); t > 0; --t) {
    VectorTerm term;
    for (int k = len(rng); k > 0; --k) term.word.push_back(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    term.coeff = random_value(rng);
    c.vector.push_back(term);
  }
  c.bounds = {b(rng), b(rng), b(rng), b(rng), b(rng), b(rng)};
  c.seed = rng();
  if (coin(rng)) c.expect = coin(rng) ? "irreducible" : "reducible";
  return c;
}

}  // namespace

TEST_CASE("config round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto c = random_config(rng);
    auto text = c.serialize();
    CAPTURE(text);
    auto back = JobConfig::parse(text);
    CHECK(back == c);
    CHECK(back.serialize() == text);
  }
}

TEST_CASE("config parsing") {
  auto c = JobConfig::parse("datum:\n  matrix: [[2, -1], [-1, 2]]\nparameters:\n  q: 2\ncharacter: [1, \"1+sqrt(2)\"]\n"
                            "vector:\n  - {word: [2, 1], coeff: -1/3}\n");
  REQUIRE(c.params);
  CHECK(c.params->sigma[0] == Scalar(mpq_class(0), mpq_class(1), 2));
  CHECK(c.params->sigma_prime == c.params->sigma);
  CHECK(c.tau(2).values()[1] == Scalar(mpq_class(1), mpq_class(1), 2));
  REQUIRE(c.vector.size() == 1);
  CHECK(c.vector[0].word == std::vector<std::size_t>{1, 0});
  CHECK(c.vector[0].coeff == Scalar(mpq_class(-1, 3)));
  CHECK(JobConfig::parse("").bounds == JobBounds{});
  CHECK(JobConfig::parse("parameters:\n  q: 9\n").params->sigma[0] == Scalar(3));

  const char* bad[] = {
      "bounds: {ball: 0}",
      "bounds: {ball: -2}",
      "bounds: {radius: 3}",
      "colour: red",
      "datum: {roots: [[2]]}",
      "datum: {matrix: [[2]], roots: [[2]]}",
      "parameters: {q: -4}",
      "parameters: {q: 4, sigma: [2]}",
      "datum: {matrix: [[2]]}\nparameters: {sigma: [2, 2]}",
      "vector: [{word: [0]}]",
      "expect: maybe",
      "character: [1, x]",
      "[1, 2",
  };
  for (const char* t : bad) {
    CAPTURE(t);
    CHECK(code_of([&] { JobConfig::parse(t); }) == ErrorCode::ConfigError);
  }
  JobConfig j;
  CHECK(code_of([&] { j.set_bound("n_cap", 0); }) == ErrorCode::ConfigError);
  CHECK(code_of([&] { j.system(); }) == ErrorCode::ConfigError);
}

TEST_CASE("reports") {
  auto a1 = [](const std::string& tau, const std::string& extra = "") {
    return JobConfig::parse("datum: {matrix: [[2]]}\nparameters: {q: 4}\ncharacter: [\"" + tau + "\"]\n" + extra);
  };
  SUBCASE("kato") {
    auto r = run_command("kato", a1("4"));
    CHECK(r.body["verdict"] == "Reducible");
    CHECK(r.body["witness_coroot"] == nlohmann::ordered_json::array({1}));
    CHECK(r.outcome == 0);
    CHECK(run_command("kato", a1("4", "expect: irreducible")).outcome == 1);
    CHECK(run_command("kato", a1("4", "expect: reducible")).outcome == 0);
    auto m = run_command("kato", a1("-1"));
    CHECK(m.body["witness_element"] == nlohmann::ordered_json::array({1}));
  }
  SUBCASE("headers") {
    for (const char* cmd : {"validate", "roots", "analyze-tau", "kato", "weight-space", "gen-weight-space"}) {
      auto r = run_command(cmd, a1("1"));
      CHECK(r.body["version"] == library_version());
      CHECK(r.body["bounds"]["coroot_height"] == 12);
      CHECK(r.body["command"] == cmd);
      auto text = render(r, "text");
      CHECK(text.rfind(r.summary + "\n", 0) == 0);
    }
  }
  SUBCASE("weight spaces") {
    CHECK(run_command("weight-space", a1("1")).body["dimension"] == 1);
    CHECK(run_command("weight-space", a1("-1")).body["dimension"] == 2);
    CHECK(run_command("weight-space", a1("1", "target_character: [\"4\"]")).body["dimension"] == 0);
  }
  SUBCASE("ord") {
    auto c = JobConfig::parse(
        "datum: {matrix: [[2, -1], [-1, 2]]}\ncharacter: [1, 1]\nvector: [{word: [1, 2, 1], coeff: 1}]\n");
    auto r = run_command("ord", c);
    CHECK(r.body["ord_tau"] == 4);
    CHECK(r.body["ell_tau"] == 3);
  }
  SUBCASE("errors") {
    CHECK(code_of([&] { run_command("frobnicate", a1("1")); }) == ErrorCode::ConfigError);
    CHECK(code_of([&] { run_command("ord", a1("1")); }) == ErrorCode::ConfigError);
    CHECK(code_of([&] { render(run_command("kato", a1("1")), "xml"); }) == ErrorCode::ConfigError);
    CHECK(code_of([&] { run_command("validate", JobConfig::parse("datum: {matrix: [[2, 1], [-1, 2]]}")); }) ==
          ErrorCode::SignViolation);
    // tau(alpha^vee) = 0 is not a character value
    CHECK(code_of([&] { run_command("kato", a1("0")); }) != ErrorCode::Internal);
  }
  SUBCASE("rank 4 example") {
    auto r = run_command("example-lemma37", JobConfig{});
    CHECK(r.summary == "5/5 conjugates certified in S_tau");
    CHECK(r.body["determinant"] == "-320");
    CHECK(r.body["coroot_bound"] == 40);
    auto big = JobConfig::parse(
        "datum:\n  matrix: [[2, -4, -4, -4], [-4, 2, -4, -4], [-4, -4, 2, -3], [-4, -4, -3, 2]]\n");
    CHECK(code_of([&] { run_command("example-lemma37", big); }) == ErrorCode::BoundTooSmall);
    big.set_bound("coroot_height", 100);
    CHECK(run_command("example-lemma37", big).summary == "5/5 conjugates certified in S_tau");
  }
  SUBCASE("determinism") {
    auto c = JobConfig::parse(
        "datum: {matrix: [[2, -2], [-1, 2]]}\nparameters: {sigma: [2, 2], sigma_prime: [2, 3]}\ncharacter: [1, -1]\n");
    for (const char* cmd : {"analyze-tau", "roots", "gen-weight-space"})
      CHECK(render(run_command(cmd, c), "json") == render(run_command(cmd, c), "json"));
  }
}

TEST_CASE("individual checks") {
  Setup a2(datum_a2(), ParameterSet::equal(2, Scalar(2)), Character(std::vector<Scalar>{Scalar(1), Scalar(1)}));
  CHECK(check_associativity(a2.alg, 1, 20).ok());
  CHECK(check_defining_relations(a2.alg, 1, 20).ok());
  CHECK(check_intertwiners(a2.alg, 3, 1, 1).ok());
  CHECK(check_k_tilde(a2.ctx, {12, 3}).ok());
  CHECK(check_ord(a2.mod, {12, 2}, 1, 5).ok());
  CHECK(check_weight_dimension(a2.mod, 3).ok());
  CHECK(check_action_extension(a2.mod, {12, 2}, 1, 5).ok());
  CHECK(check_omega_formula(a2.ctx, {12, 2}, 1, 20).ok());

  // A generic character has no tau-coroots, so there is nothing to test.
  Setup gen(datum_a2(), ParameterSet::equal(2, Scalar(2)), Character(std::vector<Scalar>{Scalar(2), Scalar(3)}));
  CHECK_FALSE(check_omega_formula(gen.ctx, {12, 2}, 1, 20).ok());

  CheckResult r("x");
  r.record(true, "a");
  r.record(false, "b");
  r.record(false, "c");
  CHECK(r.cases == 3);
  CHECK(r.failures == 2);
  CHECK(r.detail == "b");
  CHECK_FALSE(r.ok());
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
}

TEST_CASE("a single criterion reports failure for an unknown id") {
  CHECK(code_of([] { run_criterion(11, 0); }) == ErrorCode::ConfigError);
  auto c = run_criterion(7, 5);
  CHECK(c.ok());
  CHECK(c.checks.size() == 4);
}
