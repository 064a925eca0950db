#include "enriques/invariants.hpp"

#include <stdexcept>

#include "enriques/errors.hpp"

namespace enriques {

ProximityStructure proximity(const EnriquesDiagram& d) {
  const int n = d.complexity();
  ProximityStructure ps;
  ps.proximate_to.assign(static_cast<std::size_t>(n), {});
  for (int k = 1; k <= n - 1; ++k) {
    ps.proximate_to[k].push_back(k - 1);
    if (!d.edge_straight(k)) continue;  // P_k free: predecessor only
    // P_k is a satellite: it also lies on the exceptional curve of the point
    // whose straight run e_k belongs to.  Walk the run backwards: the path
    // [v_a v_k] stays straight while the previous edge is straight and the
    // vertex between is neutral, and it can never cross e_1 (always curved).
    int a = k - 1;
    while (a >= 1 && d.edge_straight(a) && !d.vertex_breaking(a)) --a;
    ps.proximate_to[k].push_back(a - 1);
  }
  return ps;
}

namespace {

mpz_class milnor_of(const std::vector<mpz_class>& m) {
  mpz_class mu = 0;
  for (const mpz_class& mi : m) mu += mi * (mi - 1);
  return mu;
}

MultiplicityProfile finish(std::vector<mpz_class> m) {
  MultiplicityProfile p;
  p.initial = m[0];
  p.milnor = milnor_of(m);
  p.sequence = std::move(m);
  return p;
}

// j(i): the last point proximate to P_i.  See multiplicity_sequence's doc.
int proximity_reach(const EnriquesDiagram& d, int i) {
  const int n = d.complexity();
  if (i + 2 <= n - 1 && d.edge_straight(i + 2) &&
      (!d.edge_straight(i + 1) || d.vertex_breaking(i + 1))) {
    int j = i + 2;
    while (j + 1 <= n - 1 && d.edge_straight(j + 1) && !d.vertex_breaking(j))
      ++j;
    return j;
  }
  return i + 1;
}

}  // namespace

MultiplicityProfile multiplicity_sequence(const EnriquesDiagram& d) {
  const int n = d.complexity();
  std::vector<mpz_class> m(static_cast<std::size_t>(n));
  m[n - 1] = 1;
  for (int i = n - 2; i >= 0; --i) {
    const int j = proximity_reach(d, i);
    mpz_class sum = 0;
    for (int k = i + 1; k <= j; ++k) sum += m[k];
    m[i] = sum;
  }
  return finish(std::move(m));
}

MultiplicityProfile multiplicity_sequence_by_proximity(
    const EnriquesDiagram& d) {
  const int n = d.complexity();
  const ProximityStructure ps = proximity(d);
  // Invert the point-side lists once: targets[i] = the k with P_k
  // proximate to P_i.
  std::vector<std::vector<int>> targets(static_cast<std::size_t>(n));
  for (int k = 1; k <= n - 1; ++k) {
    for (const int i : ps.proximate_to[k]) targets[i].push_back(k);
  }
  std::vector<mpz_class> m(static_cast<std::size_t>(n));
  m[n - 1] = 1;
  for (int i = n - 2; i >= 0; --i) {
    mpz_class sum = 0;
    for (const int k : targets[i]) sum += m[k];
    m[i] = sum;
  }
  return finish(std::move(m));
}

mpz_class milnor(const EnriquesDiagram& d) {
  return multiplicity_sequence(d).milnor;
}

mpz_class milnor_torus(const mpz_class& a, const mpz_class& b) {
  if (a < 2 || b < 2) {
    throw DomainError("x^a - y^b needs a, b >= 2 to be singular");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) {
    throw DomainError("x^a - y^b is a branch only for coprime exponents; "
                      "gcd(" + a.get_str() + "," + b.get_str() + ") = " +
                      g.get_str());
  }
  return (a - 1) * (b - 1);
}

int satellite_run_count(const EnriquesDiagram& d) {
  const int n = d.complexity();
  int runs = 0;
  bool in_run = false;
  for (int k = 1; k <= n - 1; ++k) {
    const bool sat = d.edge_straight(k);
    if (sat && !in_run) ++runs;
    in_run = sat;
  }
  return runs;
}

std::string profile_json(const EnriquesDiagram& d) {
  const MultiplicityProfile p = multiplicity_sequence(d);
  std::string out = "{\"n\":" + std::to_string(d.complexity());
  out += ",\"chi\":\"" + d.code().chi_string() + "\"";
  out += ",\"m\":[";
  for (std::size_t i = 0; i < p.sequence.size(); ++i) {
    if (i > 0) out += ',';
    out += p.sequence[i].get_str();
  }
  out += "],\"m0\":" + p.initial.get_str();
  out += ",\"milnor\":" + p.milnor.get_str();
  out += "}";
  return out;
}

}  // namespace enriques
