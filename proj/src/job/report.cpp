#include "report.hpp"

#include <sstream>

#include "error.hpp"
#include "suite.hpp"

namespace kmh {

using json = nlohmann::ordered_json;

const char* library_version() { return KMH_VERSION_STRING; }

namespace {

json word_json(const std::vector<std::size_t>& w) {
  json out = json::array();
  for (auto s : w) out.push_back(s + 1);
  return out;
}
json word_json(const WeylElement& w) { return word_json(w.word()); }

json scalars_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json coroots_json(const std::vector<Coroot>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.coords);
  return out;
}

json elements_json(const std::vector<WeylElement>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(word_json(w));
  return out;
}

json vector_json(const ModuleVector& v) {
  json out = json::array();
  for (const auto& [w, c] : v.coeffs()) out.push_back({{"word", word_json(w)}, {"coeff", c.str()}});
  return out;
}

json bounds_json(const JobBounds& b) {
  return {{"coroot_height", b.coroot_height}, {"weyl_length", b.weyl_length}, {"ball", b.ball},
          {"n_cap", b.n_cap},                 {"dominance_cap", b.dominance_cap}, {"probe_coeff", b.probe_coeff}};
}

json header(const std::string& command, const JobConfig& cfg) {
  return {{"command", command}, {"version", library_version()}, {"bounds", bounds_json(cfg.bounds)}};
}

struct Loaded {
  explicit Loaded(const JobConfig& cfg, bool need_tau = true)
      : sys(cfg.system()),
        params(cfg.parameters(sys.size())),
        setup(sys, params, need_tau ? cfg.tau(sys.rank()) : Character::trivial(sys.rank())) {}
  RootSystem sys;
  ParameterSet params;
  Setup setup;
};

json datum_json(const RootSystem& sys, const ParameterSet& p) {
  return {{"matrix", sys.matrix().rows()},
          {"size", sys.size()},
          {"rank", sys.rank()},
          {"finite_type", is_finite_type(sys.matrix())},
          {"sigma", scalars_json(p.sigma)},
          {"sigma_prime", scalars_json(p.sigma_prime)}};
}

Report validate(const JobConfig& cfg) {
  Report r;
  r.body = header("validate", cfg);
  auto sys = cfg.system();
  auto params = cfg.parameters(sys.size());
  validate_system(sys, params);
  if (cfg.character) cfg.tau(sys.rank());
  r.body["datum"] = datum_json(sys, params);
  r.body["valid"] = true;
  r.summary = "valid datum of size " + std::to_string(sys.size()) + " and rank " + std::to_string(sys.rank());
  return r;
}

Report roots(const JobConfig& cfg) {
  Report r;
  r.body = header("roots", cfg);
  auto sys = cfg.system();
  auto params = cfg.parameters(sys.size());
  validate_system(sys, params);
  std::optional<Setup> s;
  if (cfg.character) s.emplace(sys, params, cfg.tau(sys.rank()));
  WeylGroup g(sys);
  json rows = json::array();
  for (const auto& c : enumerate_coroots(sys, cfg.bounds.coroot_height)) {
    if (!c.positive) continue;
    json row = {{"coroot", c.coords},
                {"height", c.height()},
                {"y", sys.coroot_to_y(c.coords)},
                {"reflection", word_json(g.reflection_from_coroot(c.coords).element)}};
    if (s) {
      row["tau"] = s->ctx.tau()(sys.coroot_to_y(c.coords)).str();
      row["in_phi_tau"] = s->ctx.in_phi(c.coords);
    }
    rows.push_back(row);
  }
  r.summary = std::to_string(rows.size()) + " positive real coroots of height at most " +
              std::to_string(cfg.bounds.coroot_height);
  r.body["count"] = rows.size();
  r.body["coroots"] = rows;
  return r;
}

json uc_json(const UCResult& u) {
  json out = {{"in_u_c", u.in_u_c}, {"bound", u.bound}, {"complete", u.complete}};
  out["witness"] = u.witness ? json(*u.witness) : json(nullptr);
  return out;
}

Report analyze_tau(const JobConfig& cfg) {
  Report r;
  r.body = header("analyze-tau", cfg);
  Loaded l(cfg);
  const auto& ctx = l.setup.ctx;
  auto a = analyze(ctx, cfg.bounds.tau());
  json s_tau = json::array();
  for (std::size_t i = 0; i < a.s_tau.size(); ++i)
    s_tau.push_back({{"coroot", a.s_tau[i].coroot},
                     {"reflection", word_json(a.s_tau[i].element)},
                     {"sigma_pp", a.sigma_pp[i].str()}});
  r.body["character"] = scalars_json(a.tau.values());
  r.body["finite_group"] = a.finite_group;
  r.body["coroots_enumerated"] = a.coroots.size();
  r.body["phi_tau"] = coroots_json(a.phi_tau);
  r.body["sigma_tau"] = coroots_json(a.sigma_tau);
  r.body["s_tau"] = s_tau;
  r.body["sigma_cross_check"] = a.sigma_cross_check;
  r.body["s_tau_matrix"] = a.s_tau_matrix;
  r.body["w_tau"] = elements_json(a.w_tau_ball);
  r.body["w_paren_tau"] = elements_json(a.w_paren_tau_ball);
  r.body["r_tau"] = elements_json(a.r_tau_ball);
  r.body["rho"] = a.rho ? json(a.rho->str()) : json(nullptr);
  r.body["u_c"] = uc_json(a.u_c);
  r.body["semidirect"] = a.semidirect;
  auto probe = l.setup.mod.strictly_dominant(cfg.bounds.probe_coeff);
  if (probe) {
    auto t = tits_cone_membership(l.sys, *probe, cfg.bounds.dominance_cap);
    r.body["dominant_probe"] = {{"lambda", *probe}, {"tits_cone", tits_kind_name(t.kind)}};
  } else {
    r.body["dominant_probe"] = nullptr;
  }
  r.summary = std::to_string(a.sigma_tau.size()) + " simple tau-coroots, |R_tau ball| = " + std::to_string(a.r_tau_ball.size());
  return r;
}

Report kato(const JobConfig& cfg) {
  Report r;
  r.body = header("kato", cfg);
  Loaded l(cfg);
  auto v = kato_check(l.setup.ctx, cfg.bounds.tau());
  std::string verdict = kato_status_name(v.status);
  r.body["character"] = scalars_json(l.setup.ctx.tau().values());
  r.body["verdict"] = verdict;
  r.body["certified"] = v.complete;
  r.body["witness_coroot"] = v.witness_coroot ? json(*v.witness_coroot) : json(nullptr);
  r.body["witness_element"] = v.witness_element ? word_json(*v.witness_element) : json(nullptr);
  r.summary = verdict;
  if (v.witness_coroot) r.summary += ", witness coroot " + json(*v.witness_coroot).dump();
  if (v.witness_element) r.summary += ", witness element " + word_string(*v.witness_element);
  if (cfg.expect) {
    std::string want = *cfg.expect == "irreducible" ? "Irreducible" : "Reducible";
    r.body["expect"] = *cfg.expect;
    if (want != verdict) r.outcome = 1;
  }
  return r;
}

Report weight_space(const JobConfig& cfg, bool generalized) {
  Report r;
  r.body = header(generalized ? "gen-weight-space" : "weight-space", cfg);
  Loaded l(cfg);
  const auto& m = l.setup.mod;
  auto dom = l.setup.alg.group().enumerate_ball(static_cast<std::size_t>(cfg.bounds.ball));
  auto target = cfg.target(l.sys.rank());
  auto basis = generalized ? m.generalized_weight_space(target, dom, static_cast<std::size_t>(cfg.bounds.n_cap))
                           : m.weight_space(target, dom);
  json vs = json::array();
  for (const auto& v : basis) vs.push_back(vector_json(v));
  r.body["character"] = scalars_json(l.setup.ctx.tau().values());
  r.body["target_character"] = scalars_json(target.values());
  r.body["domain_size"] = dom.size();
  r.body["dimension"] = basis.size();
  r.body["basis"] = vs;
  r.summary = "dimension " + std::to_string(basis.size()) + " on the ball of radius " + std::to_string(cfg.bounds.ball);
  return r;
}

Report ord(const JobConfig& cfg) {
  Report r;
  r.body = header("ord", cfg);
  Loaded l(cfg);
  const auto& m = l.setup.mod;
  if (cfg.vector.empty()) throw Error(ErrorCode::ConfigError, "ord needs a vector");
  ModuleVector x;
  for (const auto& t : cfg.vector) x.add_term(l.setup.alg.group().from_word(t.word), t.coeff);
  auto st = m.stats(x);
  auto o = m.ord_tau(x);
  json coords = json::array();
  for (const auto& [w, c] : st.coords) coords.push_back({{"word", word_json(w)}, {"coeff", c.str()}});
  r.body["character"] = scalars_json(l.setup.ctx.tau().values());
  r.body["vector"] = vector_json(x);
  r.body["ord_tau"] = o;
  r.body["ell_tau"] = st.ell_tau ? json(*st.ell_tau) : json(nullptr);
  r.body["k_tilde_coordinates"] = coords;
  r.body["leading"] = vector_json(st.leading);
  r.summary = "ord_tau = " + std::to_string(o);
  return r;
}

Report verify(const JobConfig& cfg) {
  Report r;
  r.body = header("verify-identities", cfg);
  r.body["seed"] = cfg.seed;
  json out = json::array();
  std::size_t passed = 0;
  auto results = run_suite(cfg.seed);
  for (const auto& c : results) {
    json checks = json::array();
    for (const auto& x : c.checks)
      checks.push_back({{"name", x.name}, {"cases", x.cases}, {"failures", x.failures}, {"detail", x.detail}});
    bool ok = c.ok();
    passed += ok;
    out.push_back({{"id", c.id}, {"title", c.title}, {"pass", ok}, {"checks", checks}});
  }
  r.body["criteria"] = out;
  r.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " property groups hold";
  if (passed != results.size()) r.outcome = 3;
  return r;
}

Report rank4_example(const JobConfig& cfg) {
  Report r;
  r.body = header("example-lemma37", cfg);
  KacMoodyMatrix a = cfg.datum ? cfg.system().matrix() : rank4_default_matrix();
  Scalar sigma(2);
  if (cfg.params) {
    for (std::size_t i = 0; i < cfg.params->sigma.size(); ++i)
      if (cfg.params->sigma[i] != cfg.params->sigma[0] || cfg.params->sigma_prime[i] != cfg.params->sigma[0])
        throw Error(ErrorCode::ConfigError, "the example takes equal parameters");
    sigma = cfg.params->sigma.at(0);
  }
  int64_t bound = std::max<int64_t>(40, cfg.bounds.coroot_height);
  auto rep = rank4_conjugates(a, sigma, bound);
  if (rep.needed_bound > bound)
    throw Error(ErrorCode::BoundTooSmall,
                "a conjugate coroot has height " + std::to_string(rep.needed_bound) + "; rerun with --bound-coroot " +
                    std::to_string(rep.needed_bound));
  json cs = json::array();
  for (const auto& c : rep.conjugates)
    cs.push_back({{"w", word_json(c.w)},
                  {"v", word_json(c.v)},
                  {"alpha_v", c.alpha_v},
                  {"tau_inversions", coroots_json(c.inversions)},
                  {"in_s_tau", c.in_s_tau},
                  {"certified", c.certified}});
  r.body["matrix"] = a.rows();
  r.body["determinant"] = rep.determinant.str();
  r.body["sigma"] = sigma.str();
  r.body["coroot_bound"] = rep.coroot_bound;
  r.body["coroots_enumerated"] = rep.enumerated;
  r.body["conjugates"] = cs;
  r.body["certified"] = rep.certified;
  r.summary = std::to_string(rep.certified) + "/" + std::to_string(rep.conjugates.size()) +
              " conjugates certified in S_tau";
  if (rep.certified != rep.conjugates.size()) r.outcome = 1;
  return r;
}

void render_text(std::ostream& os, const json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    bool nested = v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object()));
    if (!nested) {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(os, v, indent + 2);
    } else {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) {
        os << pad << "  -\n";
        render_text(os, e, indent + 4);
      }
    }
  }
}

}  // namespace

Report run_command(const std::string& command, const JobConfig& cfg) {
  Report r;
  if (command == "validate")
    r = validate(cfg);
  else if (command == "roots")
    r = roots(cfg);
  else if (command == "analyze-tau")
    r = analyze_tau(cfg);
  else if (command == "kato")
    r = kato(cfg);
  else if (command == "weight-space")
    r = weight_space(cfg, false);
  else if (command == "gen-weight-space")
    r = weight_space(cfg, true);
  else if (command == "ord")
    r = ord(cfg);
  else if (command == "verify-identities")
    r = verify(cfg);
  else if (command == "example-lemma37")
    r = rank4_example(cfg);
  else
    throw Error(ErrorCode::ConfigError, "unknown subcommand '" + command + "'");
  r.body["summary"] = r.summary;
  return r;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return r.body.dump(2) + "\n";
  if (format != "text") throw Error(ErrorCode::ConfigError, "format must be text or json");
  std::ostringstream os;
  os << r.summary << "\n";
  json rest = r.body;
  rest.erase("summary");
  render_text(os, rest, 0);
  return os.str();
}

}  // namespace kmh
