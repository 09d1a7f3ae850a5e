#include "coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "error.hpp"

namespace kmh {

std::string word_string(const std::vector<std::size_t>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (auto s : word) out += "s" + std::to_string(s + 1);
  return out;
}

namespace {

bool column_negative(const IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.at(i, j) != 0) return m.at(i, j) < 0;
  return false;
}

}  // namespace

WeylGroup::WeylGroup(RootSystem sys) : sys_(std::move(sys)) {
  const std::size_t n = sys_.size(), r = sys_.rank();
  id_.y_ = IntMatrix::identity(r);
  id_.y_inv_ = id_.y_;
  id_.c_ = IntMatrix::identity(n);
  id_.c_inv_ = id_.c_;
  for (std::size_t i = 0; i < n; ++i) {
    WeylElement s;
    s.word_ = {i};
    s.y_ = sys_.reflection_y(i);
    s.y_inv_ = s.y_;
    s.c_ = sys_.reflection_coroot(i);
    s.c_inv_ = s.c_;
    simples_.push_back(std::move(s));
  }
}

std::vector<std::size_t> WeylGroup::canonical_word(IntMatrix inv) const {
  std::vector<std::size_t> word;
  while (!inv.is_identity()) {
    std::size_t s = 0;
    while (s < size() && !column_negative(inv, s)) ++s;
    if (s == size()) throw Error(ErrorCode::Internal, "no left descent for a non-identity element");
    word.push_back(s);
    inv = inv * simples_[s].c_;
  }
  return word;
}

WeylElement WeylGroup::multiply(const WeylElement& u, const WeylElement& v) const {
  if (u.is_identity()) return v;
  if (v.is_identity()) return u;
  WeylElement w;
  w.y_ = u.y_ * v.y_;
  w.y_inv_ = v.y_inv_ * u.y_inv_;
  w.c_ = u.c_ * v.c_;
  w.c_inv_ = v.c_inv_ * u.c_inv_;
  w.word_ = canonical_word(w.c_inv_);
  return w;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  WeylElement r;
  r.y_ = w.y_inv_;
  r.y_inv_ = w.y_;
  r.c_ = w.c_inv_;
  r.c_inv_ = w.c_;
  r.word_ = canonical_word(r.c_inv_);
  return r;
}

WeylElement WeylGroup::from_word(const std::vector<std::size_t>& word) const {
  WeylElement w = id_;
  for (auto s : word) {
    if (s >= size()) throw Error(ErrorCode::ConfigError, "simple index out of range in word");
    w = multiply(w, simples_[s]);
  }
  return w;
}

bool WeylGroup::is_right_descent(const WeylElement& w, std::size_t s) const { return column_negative(w.c_, s); }
bool WeylGroup::is_left_descent(const WeylElement& w, std::size_t s) const { return column_negative(w.c_inv_, s); }

bool WeylGroup::bruhat_leq(const WeylElement& v, const WeylElement& w) const {
  WeylElement a = v, b = w;
  while (true) {
    if (a.length() > b.length()) return false;
    if (b.is_identity()) return a.is_identity();
    std::size_t s = b.word_.back();
    if (is_right_descent(a, s)) a = right_mult(a, s);
    b = right_mult(b, s);
  }
}

std::vector<Coroot> WeylGroup::inversion_coroots(const WeylElement& w) const {
  std::vector<Coroot> out;
  const auto& word = w.word_;
  for (std::size_t i = 0; i < word.size(); ++i) {
    Exponent beta(size(), 0);
    beta[word[i]] = 1;
    for (std::size_t j = i + 1; j < word.size(); ++j) beta = sys_.reflect_coroot(word[j], beta);
    out.push_back(Coroot{beta, true});
  }
  return out;
}

Reflection WeylGroup::reflection_from_coroot(const Exponent& coords) const {
  auto d = coroot_descent(sys_, coords);
  if (!d) {
    std::string s;
    for (auto v : coords) s += (s.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorCode::NotARealCoroot, "[" + s + "] is not a positive real coroot");
  }
  Reflection r;
  r.coroot = coords;
  r.base = d->second;
  r.conjugator = from_word(d->first);
  r.element = multiply(multiply(r.conjugator, simples_[r.base]), inverse(r.conjugator));
  return r;
}

Exponent WeylGroup::coroot_of_reflection(const WeylElement& r) const {
  if (r.length() % 2 == 1)
    for (const auto& c : inversion_coroots(r))
      if (reflection_from_coroot(c.coords).element == r) return c.coords;
  throw Error(ErrorCode::NotARealCoroot, "element is not a reflection");
}

bool WeylGroup::is_reflection(const WeylElement& w) const {
  if (w.length() % 2 == 0) return false;
  for (const auto& c : inversion_coroots(w))
    if (reflection_from_coroot(c.coords).element == w) return true;
  return false;
}

std::vector<WeylElement> WeylGroup::enumerate_ball(std::size_t max_length) const {
  std::vector<WeylElement> out{id_};
  std::vector<WeylElement> level{id_};
  for (std::size_t l = 1; l <= max_length; ++l) {
    std::set<WeylElement> next;
    for (const auto& w : level)
      for (std::size_t s = 0; s < size(); ++s)
        if (!is_right_descent(w, s)) next.insert(right_mult(w, s));
    level.assign(next.begin(), next.end());
    if (level.empty()) break;
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::vector<std::size_t>> WeylGroup::reduced_words(const WeylElement& w) const {
  std::map<WeylElement, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(const WeylElement&)> rec =
      [&](const WeylElement& x) -> const std::vector<std::vector<std::size_t>>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> words;
    if (x.is_identity()) {
      words.push_back({});
    } else {
      for (std::size_t s = 0; s < size(); ++s) {
        if (!is_right_descent(x, s)) continue;
        for (auto word : rec(right_mult(x, s))) {
          word.push_back(s);
          words.push_back(std::move(word));
        }
      }
    }
    std::sort(words.begin(), words.end());
    return memo.emplace(x, std::move(words)).first->second;
  };
  return rec(w);
}

std::vector<WeylElement> WeylGroup::coatoms(const WeylElement& w) const {
  std::set<WeylElement> out;
  for (std::size_t k = 0; k < w.length(); ++k) {
    std::vector<std::size_t> word = w.word_;
    word.erase(word.begin() + static_cast<long>(k));
    WeylElement v = from_word(word);
    if (v.length() + 1 == w.length()) out.insert(v);
  }
  return {out.begin(), out.end()};
}

}  // namespace kmh
