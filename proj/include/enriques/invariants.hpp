#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "enriques/diagram.hpp"

namespace enriques {

// Which earlier blown-up points each point P_k lies infinitely near to in the
// first order: proximate_to[k] lists the i < k with P_k on the exceptional
// curve of P_i.  k-1 is always listed first; a second entry exists iff P_k is
// a satellite point, i.e. iff e_k is straight.  proximate_to[0] is empty.
struct ProximityStructure {
  std::vector<std::vector<int>> proximate_to;

  bool satellite(int k) const { return proximate_to[k].size() == 2; }
};

ProximityStructure proximity(const EnriquesDiagram& d);

struct MultiplicityProfile {
  std::vector<mpz_class> sequence;  // m_0 >= m_1 >= ... >= m_{n-1} = 1
  mpz_class initial;                // m_0, the multiplicity of the branch
  mpz_class milnor;                 // sum of m_i (m_i - 1); always even
};

// Engine A.  Walks i = n-2 down to 0 and sums m_{i+1..j(i)} where
// P_{i+1},...,P_{j(i)} are the points proximate to P_i: j(i) = i+1 unless a
// maximal straight path of the diagram starts exactly at v_{i+1} (first edge
// e_{i+2} straight, and the run cannot absorb e_{i+1}: e_{i+1} curved or
// v_{i+1} breaking), in which case j(i) is where that run ends.
MultiplicityProfile multiplicity_sequence(const EnriquesDiagram& d);

// Engine B, kept deliberately separate from engine A as a cross-check.
// Builds the point-side proximity lists (walking straight runs backwards
// from each satellite edge) and accumulates m_i as the sum of m_k over the
// points P_k proximate to P_i.
MultiplicityProfile multiplicity_sequence_by_proximity(const EnriquesDiagram& d);

mpz_class milnor(const EnriquesDiagram& d);

// (a-1)(b-1) for the branch x^a - y^b; requires a, b >= 2 coprime.
mpz_class milnor_torus(const mpz_class& a, const mpz_class& b);

// Number of maximal runs of consecutive satellite points among P_1..P_{n-1}.
// Descriptive statistic only; always >= 1 since P_{n-1} is a satellite.
int satellite_run_count(const EnriquesDiagram& d);

// One-line JSON with fixed field order, e.g.
//   {"n":6,"chi":"e3","m":[4,4,2,2,1,1],"m0":4,"milnor":28}
std::string profile_json(const EnriquesDiagram& d);

}  // namespace enriques
