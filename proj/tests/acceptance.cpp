// Acceptance gate: re-runs the thirteen verification claims at their
// contractual ranges and prints exactly one PASS/FAIL line per criterion.
// Exit status 0 iff everything passed.

#include <chrono>
#include <iostream>

#include "enriques/verify.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<enriques::ClaimResult> results =
      enriques::run_verification({});

  int index = 0;
  int passed = 0;
  for (const enriques::ClaimResult& r : results) {
    ++index;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << index << "/13 "
              << r.id << " [" << r.params << "]";
    if (!r.pass) std::cout << " -- " << r.witness;
    std::cout << "\n";
    if (r.pass) ++passed;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::cout << passed << "/" << results.size() << " criteria passed in "
            << static_cast<long>(secs * 1000) << " ms\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
