#pragma once

#include <memory>
#include <random>

#include "coxeter.hpp"
#include "laurent.hpp"
#include "rootdata.hpp"

namespace fx {

using namespace kmh;

inline RootSystem a1() { return RootSystem::from_matrix(KacMoodyMatrix({{2}})); }
// Y = Z.lambda with alpha^vee = 2 lambda.
inline RootSystem a1_weight() { return RootSystem(KacMoodyMatrix({{2}}), {{1}}, {{2}}); }
inline RootSystem a2() { return RootSystem::from_matrix(KacMoodyMatrix({{2, -1}, {-1, 2}})); }
inline RootSystem b2() { return RootSystem::from_matrix(KacMoodyMatrix({{2, -2}, {-1, 2}})); }
inline RootSystem a3() { return RootSystem::from_matrix(KacMoodyMatrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})); }
// Y spanned by alpha_1^vee, alpha_2^vee and d with alpha_1(d) = 0, alpha_2(d) = 1.
inline RootSystem affine_a1() {
  return RootSystem(KacMoodyMatrix({{2, -2}, {-2, 2}}), {{2, -2, 0}, {-2, 2, 1}}, {{1, 0, 0}, {0, 1, 0}});
}
inline RootSystem hyperbolic3() {
  return RootSystem::from_matrix(KacMoodyMatrix({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}}));
}
inline KacMoodyMatrix rank4_matrix() {
  return KacMoodyMatrix({{2, -2, -2, -2}, {-2, 2, -2, -2}, {-2, -2, 2, -3}, {-2, -2, -3, 2}});
}

inline std::shared_ptr<const WeylGroup> group(RootSystem sys) { return std::make_shared<const WeylGroup>(std::move(sys)); }

inline Character chr(std::initializer_list<long> vals) {
  std::vector<Scalar> v;
  for (long x : vals) v.emplace_back(x);
  return Character(v);
}

inline Exponent ex(std::initializer_list<int64_t> v) { return Exponent(v); }

inline Scalar random_rational(std::mt19937_64& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi), den(1, 4);
  return Scalar(mpq_class(d(rng), den(rng)));
}

inline Exponent random_exponent(std::mt19937_64& rng, std::size_t rank, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Exponent e(rank);
  for (auto& v : e) v = d(rng);
  return e;
}

}  // namespace fx
