#include "config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "error.hpp"

namespace kmh {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

template <typename T>
T as(const YAML::Node& n, const std::string& where) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    bad("bad value for " + where);
  }
}

Scalar scalar(const YAML::Node& n, const std::string& where) {
  if (!n.IsScalar()) bad(where + " must be a number");
  return Scalar::parse(n.Scalar());
}

std::vector<Scalar> scalars(const YAML::Node& n, const std::string& where) {
  if (!n.IsSequence()) bad(where + " must be a list");
  std::vector<Scalar> out;
  for (const auto& x : n) out.push_back(scalar(x, where));
  return out;
}

std::vector<std::vector<int64_t>> int_rows(const YAML::Node& n, const std::string& where) {
  if (!n.IsSequence()) bad(where + " must be a list of rows");
  std::vector<std::vector<int64_t>> out;
  for (const auto& row : n) {
    if (!row.IsSequence()) bad(where + " must be a list of rows");
    out.push_back(as<std::vector<int64_t>>(row, where));
  }
  return out;
}

void check_keys(const YAML::Node& n, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& kv : n) {
    auto k = kv.first.as<std::string>();
    bool known = false;
    for (const char* x : keys) known = known || k == x;
    if (!known) bad("unknown key '" + k + "' in " + where);
  }
}

void emit_scalars(YAML::Emitter& e, const std::vector<Scalar>& v) {
  e << YAML::Flow << YAML::BeginSeq;
  for (const auto& x : v) e << YAML::DoubleQuoted << x.str();
  e << YAML::EndSeq;
}

void emit_rows(YAML::Emitter& e, const std::vector<std::vector<int64_t>>& rows) {
  e << YAML::BeginSeq;
  for (const auto& r : rows) e << YAML::Flow << r;
  e << YAML::EndSeq;
}

}  // namespace

bool JobConfig::operator==(const JobConfig& o) const {
  auto same_params = [](const std::optional<ParameterSet>& a, const std::optional<ParameterSet>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->sigma == b->sigma && a->sigma_prime == b->sigma_prime);
  };
  return datum == o.datum && same_params(params, o.params) && character == o.character &&
         target_character == o.target_character && vector == o.vector && bounds == o.bounds && seed == o.seed &&
         expect == o.expect;
}

JobConfig JobConfig::parse(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    bad(std::string("unreadable config: ") + e.what());
  }
  JobConfig c;
  if (root.IsNull()) return c;
  if (!root.IsMap()) bad("the config must be a mapping");
  check_keys(root, {"datum", "parameters", "character", "target_character", "vector", "bounds", "seed", "expect"}, "config");

  if (auto d = root["datum"]) {
    check_keys(d, {"matrix", "roots", "coroots"}, "datum");
    if (!d["matrix"]) bad("datum needs a matrix");
    DatumBlock b;
    b.matrix = int_rows(d["matrix"], "datum.matrix");
    if (d["roots"].IsDefined() != d["coroots"].IsDefined()) bad("give both roots and coroots, or neither");
    if (d["roots"]) {
      b.roots = int_rows(d["roots"], "datum.roots");
      b.coroots = int_rows(d["coroots"], "datum.coroots");
    }
    c.datum = b;
  }
  if (auto p = root["parameters"]) {
    check_keys(p, {"q", "sigma", "sigma_prime"}, "parameters");
    std::size_t n = c.datum ? c.datum->matrix.size() : 0;
    ParameterSet ps;
    if (p["q"]) {
      if (p["sigma"] || p["sigma_prime"]) bad("give either q or sigma, not both");
      std::vector<Scalar> qs;
      if (p["q"].IsSequence())
        qs = scalars(p["q"], "parameters.q");
      else
        qs.assign(n ? n : 1, scalar(p["q"], "parameters.q"));
      for (const auto& q : qs) {
        if (!q.is_rational() || q.sign() <= 0) bad("q must be a positive rational");
        ps.sigma.push_back(adjoin_sqrt(q.rational_part()));
      }
      ps.sigma_prime = ps.sigma;
    } else {
      if (!p["sigma"]) bad("parameters need q or sigma");
      ps.sigma = scalars(p["sigma"], "parameters.sigma");
      ps.sigma_prime = p["sigma_prime"] ? scalars(p["sigma_prime"], "parameters.sigma_prime") : ps.sigma;
    }
    c.params = ps;
  }
  if (root["character"]) c.character = scalars(root["character"], "character");
  if (root["target_character"]) c.target_character = scalars(root["target_character"], "target_character");
  if (auto v = root["vector"]) {
    if (!v.IsSequence()) bad("vector must be a list of terms");
    for (const auto& t : v) {
      if (!t.IsMap()) bad("each vector term needs word and coeff");
      check_keys(t, {"word", "coeff"}, "vector term");
      VectorTerm term;
      if (t["word"])
        for (auto s : as<std::vector<int64_t>>(t["word"], "vector.word")) {
          if (s < 1) bad("words use letters 1..n");
          term.word.push_back(static_cast<std::size_t>(s - 1));
        }
      term.coeff = t["coeff"] ? scalar(t["coeff"], "vector.coeff") : Scalar(1);
      c.vector.push_back(term);
    }
  }
  if (auto b = root["bounds"]) {
    check_keys(b, {"coroot_height", "weyl_length", "ball", "n_cap", "dominance_cap", "probe_coeff"}, "bounds");
    for (const auto& kv : b) c.set_bound(kv.first.as<std::string>(), as<int64_t>(kv.second, "bounds"));
  }
  if (root["seed"]) c.seed = as<std::uint64_t>(root["seed"], "seed");
  if (root["expect"]) c.set_expect(as<std::string>(root["expect"], "expect"));
  c.check();
  return c;
}

JobConfig JobConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string JobConfig::serialize() const {
  YAML::Emitter e;
  e << YAML::BeginMap;
  if (datum) {
    e << YAML::Key << "datum" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "matrix" << YAML::Value;
    emit_rows(e, datum->matrix);
    if (!datum->roots.empty()) {
      e << YAML::Key << "roots" << YAML::Value;
      emit_rows(e, datum->roots);
      e << YAML::Key << "coroots" << YAML::Value;
      emit_rows(e, datum->coroots);
    }
    e << YAML::EndMap;
  }
  if (params) {
    e << YAML::Key << "parameters" << YAML::Value << YAML::BeginMap;
    e << YAML::Key << "sigma" << YAML::Value;
    emit_scalars(e, params->sigma);
    e << YAML::Key << "sigma_prime" << YAML::Value;
    emit_scalars(e, params->sigma_prime);
    e << YAML::EndMap;
  }
  if (character) {
    e << YAML::Key << "character" << YAML::Value;
    emit_scalars(e, *character);
  }
  if (target_character) {
    e << YAML::Key << "target_character" << YAML::Value;
    emit_scalars(e, *target_character);
  }
  if (!vector.empty()) {
    e << YAML::Key << "vector" << YAML::Value << YAML::BeginSeq;
    for (const auto& t : vector) {
      std::vector<std::size_t> w;
      for (auto s : t.word) w.push_back(s + 1);
      e << YAML::Flow << YAML::BeginMap << YAML::Key << "word" << YAML::Value << YAML::Flow << w << YAML::Key << "coeff"
        << YAML::Value << YAML::DoubleQuoted << t.coeff.str() << YAML::EndMap;
    }
    e << YAML::EndSeq;
  }
  e << YAML::Key << "bounds" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "coroot_height" << YAML::Value << bounds.coroot_height;
  e << YAML::Key << "weyl_length" << YAML::Value << bounds.weyl_length;
  e << YAML::Key << "ball" << YAML::Value << bounds.ball;
  e << YAML::Key << "n_cap" << YAML::Value << bounds.n_cap;
  e << YAML::Key << "dominance_cap" << YAML::Value << bounds.dominance_cap;
  e << YAML::Key << "probe_coeff" << YAML::Value << bounds.probe_coeff;
  e << YAML::EndMap;
  e << YAML::Key << "seed" << YAML::Value << seed;
  if (expect) e << YAML::Key << "expect" << YAML::Value << *expect;
  e << YAML::EndMap;
  return std::string(e.c_str()) + "\n";
}

void JobConfig::set_bound(const std::string& name, int64_t value) {
  if (value <= 0) bad("bound " + name + " must be positive");
  if (name == "coroot_height")
    bounds.coroot_height = value;
  else if (name == "weyl_length")
    bounds.weyl_length = value;
  else if (name == "ball")
    bounds.ball = value;
  else if (name == "n_cap")
    bounds.n_cap = value;
  else if (name == "dominance_cap")
    bounds.dominance_cap = value;
  else if (name == "probe_coeff")
    bounds.probe_coeff = value;
  else
    bad("unknown bound " + name);
}

void JobConfig::set_expect(const std::string& value) {
  if (value != "irreducible" && value != "reducible") bad("expect must be irreducible or reducible");
  expect = value;
}

void JobConfig::check() const {
  if (datum && datum->matrix.empty()) bad("empty matrix");
  if (datum && params && params->sigma.size() != datum->matrix.size())
    bad("need sigma for each of the " + std::to_string(datum->matrix.size()) + " simple reflections");
  if (params && params->sigma.size() != params->sigma_prime.size()) bad("sigma and sigma_prime differ in length");
}

RootSystem JobConfig::system() const {
  if (!datum) bad("this command needs a datum");
  for (const auto& r : datum->matrix)
    if (r.size() != datum->matrix.size()) bad("the matrix must be square");
  KacMoodyMatrix a(datum->matrix);
  if (datum->roots.empty()) return RootSystem::from_matrix(a);
  return RootSystem(a, datum->roots, datum->coroots);
}

ParameterSet JobConfig::parameters(std::size_t n) const {
  if (!params) return ParameterSet::equal(n, Scalar(2));
  if (params->sigma.size() != n) bad("need sigma for each of the " + std::to_string(n) + " simple reflections");
  return *params;
}

Character JobConfig::tau(std::size_t rank) const {
  if (!character) bad("this command needs a character");
  if (character->size() != rank) bad("the character needs " + std::to_string(rank) + " values");
  return Character(*character);
}

Character JobConfig::target(std::size_t rank) const {
  if (!target_character) return tau(rank);
  if (target_character->size() != rank) bad("target_character needs " + std::to_string(rank) + " values");
  return Character(*target_character);
}

}  // namespace kmh
