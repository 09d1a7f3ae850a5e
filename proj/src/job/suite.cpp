#include "suite.hpp"

#include <chrono>
#include <future>

#include "error.hpp"

namespace kmh {

namespace {

WeylGroupPtr validated(RootSystem sys, const ParameterSet& params) {
  validate_system(sys, params);
  return std::make_shared<const WeylGroup>(std::move(sys));
}

}  // namespace

Setup::Setup(RootSystem sys, ParameterSet params, Character tau)
    : alg(validated(std::move(sys), params), params),
      ctx(alg, std::move(tau)),
      mod(ctx) {}

bool CriterionResult::ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return budget <= 0 || seconds <= budget;
}

RootSystem datum_a1() { return RootSystem::from_matrix(KacMoodyMatrix({{2}})); }
RootSystem datum_a2() { return RootSystem::from_matrix(KacMoodyMatrix({{2, -1}, {-1, 2}})); }
RootSystem datum_b2() { return RootSystem::from_matrix(KacMoodyMatrix({{2, -2}, {-1, 2}})); }
RootSystem datum_affine_a1() {
  return RootSystem(KacMoodyMatrix({{2, -2}, {-2, 2}}), {{2, -2, 0}, {-2, 2, 1}}, {{1, 0, 0}, {0, 1, 0}});
}
RootSystem datum_rank3() { return RootSystem::from_matrix(KacMoodyMatrix({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}})); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Character chr(std::initializer_list<long> vals) {
  std::vector<Scalar> v;
  for (long x : vals) v.emplace_back(x);
  return Character(v);
}

ParameterSet eq(std::size_t n) { return ParameterSet::equal(n, Scalar(2)); }

struct Case {
  std::string label;
  RootSystem sys;
  ParameterSet params;
  Character tau;
};

std::vector<Case> algebra_cases() {
  return {{"A2", datum_a2(), eq(2), chr({1, 1})},
          {"affine A1", datum_affine_a1(), eq(2), chr({1, 1, 1})},
          {"rank 3", datum_rank3(), eq(3), chr({1, 1, 1})}};
}

void c1(CriterionResult& out, std::uint64_t seed) {
  std::size_t left = 500, i = 0;
  auto cases = algebra_cases();
  for (auto& c : cases) {
    std::size_t n = left / (cases.size() - i++);
    left -= n;
    HeckeAlgebra alg(std::make_shared<const WeylGroup>(c.sys), c.params);
    auto r = check_associativity(alg, derive_seed(seed, i), n, 3, 2);
    r.name += " on " + c.label;
    out.checks.push_back(r);
  }
}

void c2(CriterionResult& out, std::uint64_t seed) {
  std::size_t left = 200, i = 0;
  auto cases = algebra_cases();
  for (auto& c : cases) {
    std::size_t n = left / (cases.size() - i++);
    left -= n;
    HeckeAlgebra alg(std::make_shared<const WeylGroup>(c.sys), c.params);
    auto r = check_defining_relations(alg, derive_seed(seed, i), n);
    r.name += " on " + c.label;
    out.checks.push_back(r);
  }
}

void c3(CriterionResult& out, std::uint64_t seed) {
  std::size_t i = 0;
  for (auto& c : algebra_cases()) {
    HeckeAlgebra alg(std::make_shared<const WeylGroup>(c.sys), c.params);
    auto r = check_intertwiners(alg, 4, derive_seed(seed, ++i), 2);
    r.name += " on " + c.label;
    out.checks.push_back(r);
  }
}

std::vector<Case> tau_cases() {
  return {{"A2 trivial", datum_a2(), eq(2), chr({1, 1})},
          {"affine A1 trivial", datum_affine_a1(), eq(2), chr({1, 1, 1})},
          {"A2 (1,3)", datum_a2(), eq(2), chr({1, 3})}};
}

void c4(CriterionResult& out, std::uint64_t) {
  for (auto& c : tau_cases()) {
    Setup s(c.sys, c.params, c.tau);
    auto r = check_k_tilde(s.ctx, TauBounds{12, 4});
    r.name += " on " + c.label;
    out.checks.push_back(r);
  }
}

void c5(CriterionResult& out, std::uint64_t seed) {
  {
    Setup s(datum_a2(), eq(2), chr({1, 1}));
    auto r = check_ord(s.mod, TauBounds{12, 3}, derive_seed(seed, 1), 50);
    r.name += " on A2 trivial";
    // The longest element w0 = s1s2s1: ord(K~_{w0} v) = ell(w0) + 1 = 4.
    auto w0 = s.alg.group().from_word({0, 1, 0});
    r.record(s.mod.ord_tau(s.mod.itg_vector(w0)) == 4, "ord at the longest element");
    out.checks.push_back(r);
  }
  {
    Setup s(datum_affine_a1(), eq(2), chr({1, 1, 1}));
    auto r = check_ord(s.mod, TauBounds{12, 3}, derive_seed(seed, 2), 50);
    r.name += " on affine A1 trivial";
    for (const auto& w : s.alg.group().enumerate_ball(5))
      r.record(s.mod.stats(s.mod.itg_vector(w)).ell_tau == w.length(), "ell_tau at " + word_string(w));
    out.checks.push_back(r);
  }
}

void c6(CriterionResult& out, std::uint64_t) {
  auto one = [&](const std::string& label, RootSystem sys, Character tau, std::size_t ball, std::size_t expect) {
    auto n = sys.size();
    Setup s(std::move(sys), eq(n), std::move(tau));
    auto r = check_weight_dimension(s.mod, ball);
    auto dim = s.mod.weight_space(s.ctx.tau(), s.alg.group().enumerate_ball(ball)).size();
    r.record(dim == expect, "dimension " + std::to_string(dim) + ", expected " + std::to_string(expect));
    r.name += " on " + label;
    out.checks.push_back(r);
  };
  one("A1 trivial", datum_a1(), chr({1}), 3, 1);
  one("A1 tau = -1", datum_a1(), chr({-1}), 3, 2);
  for (std::size_t l = 3; l <= 6; ++l) one("affine A1 trivial, ball " + std::to_string(l), datum_affine_a1(), chr({1, 1, 1}), l, 1);
}

void c7(CriterionResult& out, std::uint64_t) {
  auto one = [&](const std::string& label, RootSystem sys, Character tau, KatoVerdict::Status expect, int witness) {
    auto n = sys.size();
    Setup s(std::move(sys), eq(n), std::move(tau));
    auto v = kato_check(s.ctx, TauBounds{12, 6});
    CheckResult r("Kato verdict on " + label);
    r.record(v.status == expect, std::string("verdict ") + kato_status_name(v.status));
    if (witness == 1) r.record(v.witness_coroot.has_value(), "no witness coroot");
    if (witness == 2) {
      bool good = v.witness_element && s.ctx.in_w_tau(*v.witness_element) && !s.ctx.in_w_paren_tau(*v.witness_element);
      r.record(good, "no element of W_tau outside W_(tau)");
    }
    if (witness == 3) r.record(v.complete, "verdict not certified");
    out.checks.push_back(r);
  };
  using S = KatoVerdict::Status;
  one("A1 tau = q", datum_a1(), chr({4}), S::Reducible, 1);
  one("A1 trivial", datum_a1(), chr({1}), S::Irreducible, 0);
  one("A1 tau = -1", datum_a1(), chr({-1}), S::Reducible, 2);
  one("A2 (2,3)", datum_a2(), chr({2, 3}), S::Irreducible, 3);
}

void c8(CriterionResult& out, std::uint64_t) {
  auto rep = rank4_conjugates(rank4_default_matrix(), Scalar(2), 40);
  CheckResult r("conjugates of r3r4r3");
  r.record(!rep.determinant.is_zero(), "singular matrix");
  r.record(rep.needed_bound <= rep.coroot_bound, "bound below " + std::to_string(rep.needed_bound));
  for (const auto& c : rep.conjugates) r.record(c.certified, "w = " + word_string(c.w));
  out.checks.push_back(r);
  out.notes.push_back(std::to_string(rep.certified) + "/" + std::to_string(rep.conjugates.size()) +
                      " conjugates certified in S_tau");
}

void c9(CriterionResult& out, std::uint64_t seed) {
  std::size_t left = 100, i = 0;
  auto cases = tau_cases();
  for (auto& c : cases) {
    std::size_t n = left / (cases.size() - i++);
    left -= n;
    Setup s(c.sys, c.params, c.tau);
    auto r = check_action_extension(s.mod, TauBounds{12, 2}, derive_seed(seed, i), n);
    r.name += " on " + c.label;
    out.checks.push_back(r);
  }
}

void c10(CriterionResult& out, std::uint64_t seed) {
  std::vector<Case> cases{
      {"A2 trivial", datum_a2(), eq(2), chr({1, 1})},
      {"affine A1 trivial", datum_affine_a1(), eq(2), chr({1, 1, 1})},
      {"A1 sigma 2, sigma' 3, tau 1", datum_a1(), {{Scalar(2)}, {Scalar(3)}}, chr({1})},
      {"A1 sigma 2, sigma' 3, tau -1", datum_a1(), {{Scalar(2)}, {Scalar(3)}}, chr({-1})},
      {"B2 sigma' 3 on the second root", datum_b2(), {{Scalar(2), Scalar(2)}, {Scalar(2), Scalar(3)}}, chr({1, -1})},
  };
  std::size_t left = 200, i = 0;
  for (auto& c : cases) {
    std::size_t n = left / (cases.size() - i++);
    left -= n;
    Setup s(c.sys, c.params, c.tau);
    auto r = check_omega_formula(s.ctx, TauBounds{12, 4}, derive_seed(seed, i), n);
    r.name += " on " + c.label;
    out.checks.push_back(r);
  }
}

const char* kTitles[kCriteria] = {
    "associativity",       "defining relations",   "intertwiners F_w", "K~ relations",
    "ord = ell_tau + 1",   "weight space dimension", "Kato verdicts",   "rank 4 conjugates in S_tau",
    "extended action",     "Omega~ at tau",
};
const double kBudgets[kCriteria] = {60, 0, 0, 0, 0, 0, 0, 120, 0, 0};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  using Fn = void (*)(CriterionResult&, std::uint64_t);
  static const Fn fns[kCriteria] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  if (id < 1 || id > kCriteria) throw Error(ErrorCode::ConfigError, "no criterion " + std::to_string(id));
  CriterionResult out;
  out.id = id;
  out.title = kTitles[id - 1];
  out.budget = kBudgets[id - 1];
  auto t0 = std::chrono::steady_clock::now();
  try {
    fns[id - 1](out, derive_seed(seed, static_cast<std::uint64_t>(id)));
  } catch (const Error& e) {
    CheckResult r(std::string("raised ") + error_code_name(e.code()));
    r.record(false, e.what());
    out.checks.push_back(r);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::vector<CriterionResult> run_suite(std::uint64_t seed, bool concurrent) {
  std::vector<CriterionResult> out;
  if (!concurrent) {
    for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, seed));
    return out;
  }
  std::vector<std::future<CriterionResult>> fs;
  for (int i = 1; i <= kCriteria; ++i) fs.push_back(std::async(std::launch::async, run_criterion, i, seed));
  for (auto& f : fs) out.push_back(f.get());
  return out;
}

}  // namespace kmh
