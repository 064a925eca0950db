#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace enriques {

struct ClaimResult {
  std::string id;         // stable kebab-case name, unique per run
  std::string statement;  // the mathematical fact being checked
  std::string params;     // ranges / seeds the run used
  bool pass = false;
  std::string witness;    // first counterexample, empty on pass
};

struct VerifyOptions {
  // Depth of the three open-ended sweeps (engine agreement, Birkhoff range,
  // complexity-bound check).  The remaining claims run at their fixed ranges.
  int sweep_max_n = 10;
  std::uint64_t seed = 0x5eed5eed5eed5eedULL;
  int random_triples_per_n = 100000;  // distributivity sampling for n = 7..9
};

// Runs the thirteen claims in a fixed order; never throws on a failing
// claim (the failure lands in the result), only on internal errors.
std::vector<ClaimResult> run_verification(const VerifyOptions& opts = {});

bool all_passed(const std::vector<ClaimResult>& results);

// One line per claim ("PASS <id> ..."), then a summary line.
std::string report_text(const std::vector<ClaimResult>& results);

// JSON array of claim objects, fields id/statement/params/pass/witness.
std::string report_json(const std::vector<ClaimResult>& results);

}  // namespace enriques
