#pragma once

// Seeded batteries of exact checks behind the relations-check and selftest commands.

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

struct CheckResult {
  std::string name;
  bool passed = true;
  int samples = 0;
  std::string detail;  // first failure, if any
};

/// The five relator families verified by composing maps: (1) on random
/// triples g1, g2, (g1 g2)^-1; (2) sigma^2; (3) all six permutations;
/// (4) random diagonals; (5) (sigma h)^3.
std::vector<CheckResult> relations_check(const Field& f, std::uint64_t seed, int samples = 50);

/// Relations plus property checks of every module.
std::vector<CheckResult> run_selftest(const Field& f, std::uint64_t seed);

}  // namespace cremona
