#pragma once

#include <string>
#include <vector>

#include "skein/maps.hpp"
#include "skein/samplers.hpp"

namespace skein::verify {

struct CheckRecord {
  std::string check;
  i64 case_idx = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  i64 checks = 0;
  i64 failures = 0;
  std::vector<CheckRecord> records;  // one per case
};

/// Equality of Phi images under the backend's decidable policy: formal first;
/// abelian backends are decisive formally; Free with omega = 0 consults the
/// trace oracle; other backends compare the abelianization images exactly.
bool phi_elements_equal(const SkeinElt&, const SkeinElt&, std::uint64_t seed = kDefaultSeed);

/// The three surface backends the suites cycle through: torus, Free{2} with
/// the symplectic form, ClosedSurface{2}.
const std::vector<SurfaceModel>& suite_backends();

std::vector<std::string> suite_names();

/// Runs one named suite; cases < 0 selects the suite's specified population.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, i64 cases = -1);

/// Identity harness over seeded random diagrams: per crossing the skein
/// relation and the crossing-switch rule, the D-identities per configuration,
/// the product homomorphism, and the trivial-loop factor.
SuiteResult verify_identities(std::uint64_t seed, i64 cases);

}  // namespace skein::verify
