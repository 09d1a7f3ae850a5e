#pragma once

#include <memory>
#include <string>
#include <vector>

#include "intmat.hpp"
#include "rootdata.hpp"

namespace kmh {

class WeylElement {
 public:
  WeylElement() = default;

  const std::vector<std::size_t>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  // Action on Y-coordinates, and its inverse.
  const IntMatrix& y_matrix() const { return y_; }
  const IntMatrix& y_inverse() const { return y_inv_; }
  // Action on simple-coroot coordinates, and its inverse.
  const IntMatrix& coroot_matrix() const { return c_; }
  const IntMatrix& coroot_inverse() const { return c_inv_; }

  // The canonical word is a complete invariant, so comparisons use it.
  bool operator==(const WeylElement& o) const { return word_ == o.word_; }
  bool operator!=(const WeylElement& o) const { return word_ != o.word_; }
  // (length, ShortLex)
  bool operator<(const WeylElement& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

 private:
  friend class WeylGroup;
  std::vector<std::size_t> word_;
  IntMatrix y_, y_inv_, c_, c_inv_;
};

// "e" or 1-based letters such as "s1s2".
std::string word_string(const std::vector<std::size_t>& word);
inline std::string word_string(const WeylElement& w) { return word_string(w.word()); }

struct Reflection {
  WeylElement element;
  Exponent coroot;          // positive, simple-coroot coordinates
  std::size_t base = 0;     // element = conjugator * s_base * conjugator^{-1}
  WeylElement conjugator;   // conjugator * s_base > conjugator
};

class WeylGroup {
 public:
  explicit WeylGroup(RootSystem sys);

  const RootSystem& system() const { return sys_; }
  std::size_t size() const { return sys_.size(); }
  const WeylElement& identity() const { return id_; }
  const WeylElement& simple(std::size_t i) const { return simples_[i]; }

  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement from_word(const std::vector<std::size_t>& word) const;
  WeylElement right_mult(const WeylElement& w, std::size_t s) const { return multiply(w, simples_[s]); }
  WeylElement left_mult(std::size_t s, const WeylElement& w) const { return multiply(simples_[s], w); }

  bool is_right_descent(const WeylElement& w, std::size_t s) const;
  bool is_left_descent(const WeylElement& w, std::size_t s) const;
  Exponent act_on_coroot(const WeylElement& w, const Exponent& coords) const { return w.coroot_matrix().apply(coords); }

  bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;
  std::vector<Coroot> inversion_coroots(const WeylElement& w) const;
  Reflection reflection_from_coroot(const Exponent& coords) const;
  // The positive coroot of a reflection; throws NotARealCoroot if w is not a reflection.
  Exponent coroot_of_reflection(const WeylElement& r) const;
  bool is_reflection(const WeylElement& w) const;

  std::vector<WeylElement> enumerate_ball(std::size_t max_length) const;
  // Every reduced word of w, by brute force over right descents.
  std::vector<std::vector<std::size_t>> reduced_words(const WeylElement& w) const;
  // Elements covered by w obtained by deleting one letter of its canonical word.
  std::vector<WeylElement> coatoms(const WeylElement& w) const;

 private:
  std::vector<std::size_t> canonical_word(IntMatrix inv) const;

  RootSystem sys_;
  WeylElement id_;
  std::vector<WeylElement> simples_;
};

using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

}  // namespace kmh
