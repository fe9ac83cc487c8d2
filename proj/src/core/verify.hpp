#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace f1an {

struct VerifyCase {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  bool ok = true;
  std::vector<VerifyCase> cases;
};

// Suite names accepted by the CLI: normcore, monoids, basechange, witt-ghost,
// witt-zp-isometry, ff-frobenius, key-lemma, cofinality, perfectoid,
// spectrum, all.
std::vector<std::string> suite_names();
VerifyReport run_suite(const std::string& name, std::uint64_t seed);

// The acceptance gate: twelve property checks at full scale, ids "01".."12".
std::vector<VerifyCase> acceptance_criteria(std::uint64_t seed);

}  // namespace f1an
