#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "identities.hpp"

namespace kmh {

// An algebra, a character and the module they define, owned together.
struct Setup {
  Setup(RootSystem sys, ParameterSet params, Character tau);
  Setup(const Setup&) = delete;
  Setup& operator=(const Setup&) = delete;

  HeckeAlgebra alg;
  TauContext ctx;
  PrincipalModule mod;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  double seconds = 0;
  double budget = 0;  // 0 means none
  bool ok() const;
};

inline constexpr int kCriteria = 10;

CriterionResult run_criterion(int id, std::uint64_t seed);
// Criteria run concurrently, each with its own seed derived from the given one.
std::vector<CriterionResult> run_suite(std::uint64_t seed, bool concurrent = true);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

// Data used by the suite.
RootSystem datum_a1();
RootSystem datum_a2();
RootSystem datum_b2();
RootSystem datum_affine_a1();
RootSystem datum_rank3();

}  // namespace kmh
