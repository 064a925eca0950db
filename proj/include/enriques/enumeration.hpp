#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "enriques/diagram.hpp"

namespace enriques {

// F_0 = 0, F_1 = 1, F_{k+1} = F_k + F_{k-1}.
mpz_class fibonacci(long k);

// Visits every diagram of E_n exactly once by growing the complexity from 3
// to n one step at a time: a diagram whose last free vertex v_{k-2} is
// neutral extends three ways (add nothing, add e_{k-1}, add e_{k-1} and
// v_{k-1}), one with v_{k-2} breaking only the last two (e_{k-1} must come
// along or v_{k-2} would lose its right straight edge).  The closed-form
// branch set is re-derived from the validity condition at every node and a
// mismatch throws std::logic_error.  Visit order is the DFS order, not the
// canonical one; memory is O(n).
void for_each_diagram(int n,
                      const std::function<void(const EnriquesDiagram&)>& fn);

// All of E_n sorted by canonical key (plain lexicographic string order).
std::vector<EnriquesDiagram> enumerate(int n);

struct EnumerationStats {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t count_a = 0;  // v_{n-2} neutral
  std::uint64_t count_b = 0;  // v_{n-2} breaking
  mpz_class min_m0, max_m0;
  mpz_class min_milnor, max_milnor;
  // Canonical keys of the diagrams attaining each bound, sorted.
  std::vector<std::string> min_m0_achievers, max_m0_achievers;
  std::vector<std::string> min_milnor_achievers, max_milnor_achievers;
  // n == 3: the lattice is a single point, so min and max coincide and the
  // usual two-diagram description of the maximizers degenerates.
  bool degenerate_extremals = false;
};

EnumerationStats stats(int n);

// Sweeps every diagram of complexity 3..max_n and checks two bounds:
//   * for each even mu <= 2*max_n - 4, the largest complexity whose lattice
//     contains a diagram of Milnor number mu is 2 + mu/2, attained only by
//     alpha(2 + mu/2);
//   * every diagram of E_n has branch multiplicity m_0 <= F_n.
struct ComplexityBoundReport {
  int max_n = 0;
  bool milnor_bound_ok = false;
  bool multiplicity_bound_ok = false;
  std::string witness;  // first violation, empty when both hold
};

ComplexityBoundReport complexity_bound_check(int max_n);

}  // namespace enriques
