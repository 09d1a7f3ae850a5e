#include <cstdio>
#include <cstdlib>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
  bool all = true;
  for (const auto& c : kmh::run_suite(seed)) {
    std::size_t cases = 0;
    for (const auto& x : c.checks) cases += x.cases;
    std::printf("criterion %2d %-28s %s  %zu cases  %.2fs", c.id, c.title.c_str(), c.ok() ? "PASS" : "FAIL", cases,
                c.seconds);
    if (c.budget > 0) std::printf(" (budget %.0fs)", c.budget);
    for (const auto& n : c.notes) std::printf("  %s", n.c_str());
    std::printf("\n");
    for (const auto& x : c.checks)
      if (!x.ok()) std::printf("    %s: %zu/%zu failed; %s\n", x.name.c_str(), x.failures, x.cases, x.detail.c_str());
    all = all && c.ok();
  }
  return all ? 0 : 1;
}
