#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "principal.hpp"

namespace kmh {

struct JobBounds {
  int64_t coroot_height = 12;
  int64_t weyl_length = 6;
  int64_t ball = 4;
  int64_t n_cap = 3;
  int64_t dominance_cap = 64;
  int64_t probe_coeff = 5;

  TauBounds tau() const { return {coroot_height, static_cast<std::size_t>(weyl_length)}; }
  bool operator==(const JobBounds&) const = default;
};

struct DatumBlock {
  std::vector<std::vector<int64_t>> matrix;
  std::vector<Exponent> roots, coroots;  // both empty: Y is the coroot lattice
  bool operator==(const DatumBlock&) const = default;
};

struct VectorTerm {
  std::vector<std::size_t> word;  // 0-based
  Scalar coeff;
  bool operator==(const VectorTerm&) const = default;
};

struct JobConfig {
  std::optional<DatumBlock> datum;
  std::optional<ParameterSet> params;
  std::optional<std::vector<Scalar>> character;
  std::optional<std::vector<Scalar>> target_character;
  std::vector<VectorTerm> vector;
  JobBounds bounds;
  std::uint64_t seed = 0;
  std::optional<std::string> expect;  // "irreducible" or "reducible"

  bool operator==(const JobConfig& o) const;

  static JobConfig parse(const std::string& text);
  static JobConfig load(const std::string& path);
  std::string serialize() const;

  // Bound names as they appear in the file.
  void set_bound(const std::string& name, int64_t value);
  void set_expect(const std::string& value);
  void check() const;

  RootSystem system() const;  // ConfigError without a datum
  ParameterSet parameters(std::size_t n) const;  // sigma = sigma' = 2 when absent
  Character tau(std::size_t rank) const;
  Character target(std::size_t rank) const;  // defaults to tau
};

}  // namespace kmh
