#include "enriques/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"
#include "enriques/invariants.hpp"
#include "enriques/lattice.hpp"
#include "enriques/operators.hpp"

namespace enriques {

namespace {

// Keeps the first counterexample only; later ones add nothing.
struct Check {
  bool pass = true;
  std::string witness;

  void fail(const std::string& w) {
    if (pass) {
      pass = false;
      witness = w;
    }
  }
  bool ok() const { return pass; }
};

ClaimResult finish(const char* id, const char* statement, std::string params,
                   const Check& c) {
  return ClaimResult{id, statement, std::move(params), c.pass, c.witness};
}

std::vector<int> dual_permutation(const std::vector<EnriquesDiagram>& all) {
  std::vector<std::string> keys;
  keys.reserve(all.size());
  for (const EnriquesDiagram& d : all) keys.push_back(d.key());
  std::vector<int> perm(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto it =
        std::lower_bound(keys.begin(), keys.end(), dual(all[i]).key());
    perm[i] = static_cast<int>(it - keys.begin());
  }
  return perm;
}

// --- claim 1 ---------------------------------------------------------------

ClaimResult claim_cardinality() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 14 && c.ok(); ++n) {
    std::uint64_t total = 0;
    for_each_diagram(n, [&](const EnriquesDiagram&) { ++total; });
    if (fibonacci(2 * n - 4) != static_cast<unsigned long>(total)) {
      c.fail("n=" + std::to_string(n) + ": counted " + std::to_string(total) +
             ", expected F(" + std::to_string(2 * n - 4) + ") = " +
             fibonacci(2 * n - 4).get_str());
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (c.ok() && secs > 5.0) {
    c.fail("counting n=3..14 took " + std::to_string(secs) + "s (> 5s)");
  }
  return finish("cardinality", "diagram count of E_n equals F(2n-4)",
                "n=3..14, under 5s", c);
}

// --- claim 2 ---------------------------------------------------------------

ClaimResult claim_ab_refinement() {
  Check c;
  for (int n = 3; n <= 14 && c.ok(); ++n) {
    std::uint64_t a = 0, b = 0;
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      (d.vertex_breaking(n - 2) ? b : a) += 1;
    });
    if (fibonacci(2 * n - 5) != static_cast<unsigned long>(a) ||
        fibonacci(2 * n - 6) != static_cast<unsigned long>(b)) {
      c.fail("n=" + std::to_string(n) + ": |A|=" + std::to_string(a) +
             " |B|=" + std::to_string(b) + ", expected F(" +
             std::to_string(2 * n - 5) + ")=" + fibonacci(2 * n - 5).get_str() +
             " and F(" + std::to_string(2 * n - 6) + ")=" +
             fibonacci(2 * n - 6).get_str());
    }
  }
  return finish("ab-refinement",
                "diagrams with v_{n-2} neutral number F(2n-5), "
                "with v_{n-2} breaking F(2n-6)",
                "n=3..14", c);
}

// --- claim 3 ---------------------------------------------------------------

ClaimResult claim_extremal_multiplicity() {
  Check c;
  {
    const EnumerationStats s3 = stats(3);
    if (!s3.degenerate_extremals ||
        s3.max_m0_achievers != std::vector<std::string>{omega(3).key()}) {
      c.fail("n=3 should be flagged degenerate with omega(3) the only "
             "maximizer");
    }
  }
  for (int n = 4; n <= 12 && c.ok(); ++n) {
    const EnumerationStats s = stats(n);
    std::vector<std::string> expected{omega(n).key(), pi(n).key()};
    std::sort(expected.begin(), expected.end());
    if (s.max_m0 != fibonacci(n)) {
      c.fail("n=" + std::to_string(n) + ": max m0 = " + s.max_m0.get_str() +
             ", expected F(" + std::to_string(n) + ") = " +
             fibonacci(n).get_str());
    } else if (s.max_m0_achievers != expected) {
      std::string got;
      for (const auto& k : s.max_m0_achievers) got += " " + k;
      c.fail("n=" + std::to_string(n) + ": maximizers are" + got +
             ", expected omega and pi only");
    }
  }
  return finish("extremal-multiplicity",
                "the largest branch multiplicity in E_n is F_n, attained "
                "exactly by omega(n) and pi(n)",
                "n=4..12 (n=3 degenerate, flagged)", c);
}

// --- claim 4 ---------------------------------------------------------------

ClaimResult claim_extremal_milnor() {
  Check c;
  for (int n = 3; n <= 12 && c.ok(); ++n) {
    const EnumerationStats s = stats(n);
    const mpz_class expected_min = 2 * n - 4;
    const mpz_class expected_max =
        (fibonacci(n + 1) - 1) * (fibonacci(n) - 1);
    if (s.min_milnor != expected_min ||
        s.min_milnor_achievers != std::vector<std::string>{alpha(n).key()}) {
      c.fail("n=" + std::to_string(n) + ": min milnor " +
             s.min_milnor.get_str() + " (expected " + expected_min.get_str() +
             ", alpha alone)");
    } else if (s.max_milnor != expected_max ||
               s.max_milnor_achievers !=
                   std::vector<std::string>{omega(n).key()}) {
      c.fail("n=" + std::to_string(n) + ": max milnor " +
             s.max_milnor.get_str() + " (expected " + expected_max.get_str() +
             ", omega alone)");
    }
  }
  return finish("extremal-milnor",
                "milnor numbers in E_n range over [2n-4, (F_{n+1}-1)(F_n-1)], "
                "each bound attained by a unique diagram",
                "n=3..12", c);
}

// --- claim 5 ---------------------------------------------------------------

ClaimResult claim_milnor_cross_oracle() {
  Check c;
  for (int n = 4; n <= 14 && c.ok(); ++n) {
    struct Case {
      const char* name;
      EnriquesDiagram d;
      mpz_class a, b;
    };
    const Case cases[] = {
        {"alpha", alpha(n), mpz_class(2 * n - 3), mpz_class(2)},
        {"omega", omega(n), fibonacci(n + 1), fibonacci(n)},
        {"pi", pi(n), fibonacci(n - 2) + fibonacci(n), fibonacci(n)},
    };
    for (const Case& k : cases) {
      const mpz_class via_diagram = milnor(k.d);
      const mpz_class via_curve = milnor_torus(k.a, k.b);
      if (via_diagram != via_curve) {
        c.fail(std::string(k.name) + "(" + std::to_string(n) + "): milnor " +
               via_diagram.get_str() + " != (a-1)(b-1) = " +
               via_curve.get_str() + " for x^" + k.a.get_str() + "-y^" +
               k.b.get_str());
        break;
      }
    }
  }
  return finish("milnor-cross-oracle",
                "milnor numbers of alpha/omega/pi match (a-1)(b-1) for their "
                "defining branches x^a - y^b",
                "n=4..14", c);
}

// --- claim 6 ---------------------------------------------------------------

ClaimResult claim_multiplicity_engines(const VerifyOptions& opts) {
  Check c;
  for (int n = 3; n <= opts.sweep_max_n && c.ok(); ++n) {
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      if (!c.ok()) return;
      if (multiplicity_sequence(d).sequence !=
          multiplicity_sequence_by_proximity(d).sequence) {
        c.fail("engines disagree on " + d.key());
      }
    });
  }
  if (c.ok()) {
    const EnriquesDiagram d = parse("n=6;chi=e3");
    const std::vector<mpz_class> expected{4, 4, 2, 2, 1, 1};
    const MultiplicityProfile a = multiplicity_sequence(d);
    const MultiplicityProfile b = multiplicity_sequence_by_proximity(d);
    if (a.sequence != expected || b.sequence != expected || a.milnor != 28 ||
        b.milnor != 28) {
      c.fail("pinned profile of n=6;chi=e3 is off (expected m=(4,4,2,2,1,1), "
             "milnor=28)");
    }
  }
  return finish("multiplicity-engines",
                "the straight-run engine and the proximity-accumulation "
                "engine compute identical multiplicity sequences",
                "n=3.." + std::to_string(opts.sweep_max_n) +
                    " exhaustive, plus pinned n=6;chi=e3",
                c);
}

// --- claim 7 ---------------------------------------------------------------

void check_one_operator(const EnriquesDiagram& d, OperatorKind kind, int p,
                        const std::vector<mpz_class>& m_in,
                        const mpz_class& mu_in, Check& c) {
  const std::string tag = (kind == OperatorKind::Straighten ? "s" : "b") +
                          std::to_string(p) + " on " + d.key();
  const OperatorApplication app = apply_operator(d, kind, p);
  const EnriquesDiagram& out = app.output;

  if (!leq(d, out) || d == out) {
    c.fail(tag + ": output does not sit strictly above the input");
    return;
  }
  // Code effect: exactly the advertised symbols get added.
  std::vector<Symbol> expected_added;
  if (kind == OperatorKind::Break) {
    expected_added = {vertex(p)};
  } else {
    expected_added = {edge(p)};
    if (d.edge_straight(p + 1)) expected_added.push_back(vertex(p));
  }
  if (out.code().size() != d.code().size() + expected_added.size() ||
      !std::all_of(expected_added.begin(), expected_added.end(),
                   [&](Symbol s) { return out.code().contains(s); })) {
    c.fail(tag + ": code did not gain exactly the advertised symbols");
    return;
  }

  const MultiplicityProfile prof_out = multiplicity_sequence(out);
  const std::vector<mpz_class>& m_out = prof_out.sequence;
  std::vector<int> observed;
  for (std::size_t i = 0; i < m_in.size(); ++i) {
    if (m_out[i] < m_in[i]) {
      c.fail(tag + ": multiplicity dropped at index " + std::to_string(i));
      return;
    }
    if (m_out[i] > m_in[i]) observed.push_back(static_cast<int>(i));
  }
  if (observed.empty()) {
    c.fail(tag + ": no multiplicity grew");
    return;
  }
  if (prof_out.milnor <= mu_in) {
    c.fail(tag + ": milnor number did not grow");
    return;
  }
  const bool m0_kept = m_out[0] == m_in[0];
  const bool m0_kept_expected =
      kind == OperatorKind::Break && !d.edge_straight(p - 1);
  if (m0_kept != m0_kept_expected) {
    c.fail(tag + ": m0 " + (m0_kept ? "survived" : "grew") +
           " against the rule (break below a curved edge is the only "
           "m0-preserving case)");
    return;
  }
  if (m0_kept && observed.size() != 1) {
    c.fail(tag + ": m0 survived but more than one multiplicity changed");
    return;
  }
  if (observed != strict_increase_set(d, kind, p)) {
    c.fail(tag + ": predicted strict-increase set does not match the "
                 "observed one");
  }
}

ClaimResult claim_operator_growth() {
  Check c;
  for (int n = 3; n <= 9 && c.ok(); ++n) {
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      if (!c.ok()) return;
      const MultiplicityProfile prof_in = multiplicity_sequence(d);
      for (int p = 2; p <= n - 2 && c.ok(); ++p) {
        if (can_straighten(d, p)) {
          check_one_operator(d, OperatorKind::Straighten, p, prof_in.sequence,
                             prof_in.milnor, c);
        }
        if (can_break(d, p)) {
          check_one_operator(d, OperatorKind::Break, p, prof_in.sequence,
                             prof_in.milnor, c);
        }
      }
    });
  }
  return finish("operator-growth",
                "straightening and breaking grow multiplicities pointwise, "
                "grow the milnor number strictly, preserve m0 in exactly the "
                "break-below-curved-edge case, and change exactly the "
                "predicted index set",
                "every applicable operator, n=3..9", c);
}

// --- claim 8 ---------------------------------------------------------------

ClaimResult claim_duality() {
  Check c;
  for (int n = 3; n <= 9 && c.ok(); ++n) {
    const std::vector<EnriquesDiagram> all = enumerate(n);
    std::vector<EnriquesDiagram> duals;
    duals.reserve(all.size());
    for (const EnriquesDiagram& d : all) {
      duals.push_back(dual(d));
      if (!(dual(duals.back()) == d)) {
        c.fail("dual is not an involution at " + d.key());
        break;
      }
    }
    if (!c.ok()) break;
    if (!(dual(alpha(n)) == omega(n))) {
      c.fail("dual(alpha(" + std::to_string(n) + ")) != omega");
      break;
    }
    for (std::size_t i = 0; i < all.size() && c.ok(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (leq(all[i], all[j]) != leq(duals[j], duals[i])) {
          c.fail("order reversal fails on (" + all[i].key() + ", " +
                 all[j].key() + ")");
          break;
        }
      }
    }
  }
  if (c.ok()) {
    const std::string dk = dual(parse("n=6;chi=e3")).key();
    if (dk != "n=6;chi=e2,e3,e4,v2,v4") {
      c.fail("pinned dual of n=6;chi=e3 came out as " + dk);
    }
  }
  return finish("duality",
                "complement-and-reverse is an order-reversing involution "
                "exchanging alpha and omega",
                "n=3..9 (all pairs), plus pinned n=6;chi=e3", c);
}

// --- claim 9 ---------------------------------------------------------------

void check_lattice_triple(const EnriquesDiagram& a, const EnriquesDiagram& b,
                          const EnriquesDiagram& x, Check& c) {
  try {
    const EnriquesDiagram ab = meet(a, b);
    const EnriquesDiagram aub = join(a, b);
    if (!leq(ab, a) || !leq(ab, b) || !leq(a, aub) || !leq(b, aub)) {
      c.fail("meet/join bounds wrong for (" + a.key() + ", " + b.key() + ")");
      return;
    }
    if (!(meet(a, join(b, x)) == join(meet(a, b), meet(a, x))) ||
        !(join(a, meet(b, x)) == meet(join(a, b), join(a, x)))) {
      c.fail("distributivity fails on (" + a.key() + ", " + b.key() + ", " +
             x.key() + ")");
    }
  } catch (const Error& e) {
    c.fail("meet/join left the lattice: " + std::string(e.what()));
  }
}

void check_hasse(int n, Check& c) {
  const HasseGraph g = hasse(n);
  const int count = static_cast<int>(g.nodes.size());
  if (fibonacci(2 * n - 4) != static_cast<unsigned long>(count)) {
    c.fail("hasse(" + std::to_string(n) + ") has a wrong node count");
    return;
  }
  std::vector<std::vector<int>> succ(count);
  std::vector<int> indeg(count, 0);
  for (const HasseGraph::Edge& e : g.edges) {
    const Code& lo = g.nodes[e.lower].code();
    const Code& hi = g.nodes[e.upper].code();
    if (hi.size() != lo.size() + 1 || !hi.contains(e.label) ||
        lo.contains(e.label) ||
        !leq(g.nodes[e.lower], g.nodes[e.upper])) {
      c.fail("hasse(" + std::to_string(n) + "): edge " +
             g.nodes[e.lower].key() + " -> " + g.nodes[e.upper].key() +
             " does not add exactly its label " + e.label.name());
      return;
    }
    succ[e.lower].push_back(e.upper);
    ++indeg[e.upper];
  }
  // Acyclicity (Kahn).
  {
    std::vector<int> degree = indeg, queue;
    for (int i = 0; i < count; ++i)
      if (degree[i] == 0) queue.push_back(i);
    int seen = 0;
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      ++seen;
      for (const int w : succ[u])
        if (--degree[w] == 0) queue.push_back(w);
    }
    if (seen != count) {
      c.fail("hasse(" + std::to_string(n) + ") contains a directed cycle");
      return;
    }
  }
  // No edge may be a shortcut for a longer directed path.
  std::vector<char> visited(count);
  for (const HasseGraph::Edge& e : g.edges) {
    std::fill(visited.begin(), visited.end(), 0);
    std::vector<int> stack;
    for (const int w : succ[e.lower])
      if (w != e.upper) stack.push_back(w);
    bool reached = false;
    while (!stack.empty() && !reached) {
      const int u = stack.back();
      stack.pop_back();
      if (visited[u]) continue;
      visited[u] = 1;
      if (u == e.upper) {
        reached = true;
        break;
      }
      for (const int w : succ[u])
        if (!visited[w]) stack.push_back(w);
    }
    if (reached) {
      c.fail("hasse(" + std::to_string(n) + "): edge " +
             g.nodes[e.lower].key() + " -> " + g.nodes[e.upper].key() +
             " shortcuts a longer path");
      return;
    }
  }
}

ClaimResult claim_lattice_laws(const VerifyOptions& opts) {
  Check c;
  for (int n = 3; n <= 6 && c.ok(); ++n) {
    const std::vector<EnriquesDiagram> all = enumerate(n);
    for (std::size_t i = 0; i < all.size() && c.ok(); ++i) {
      for (std::size_t j = 0; j < all.size() && c.ok(); ++j) {
        for (std::size_t k = 0; k < all.size() && c.ok(); ++k) {
          check_lattice_triple(all[i], all[j], all[k], c);
        }
      }
    }
  }
  for (int n = 7; n <= 9 && c.ok(); ++n) {
    const std::vector<EnriquesDiagram> all = enumerate(n);
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(n));
    for (int t = 0; t < opts.random_triples_per_n && c.ok(); ++t) {
      const auto pick = [&]() -> const EnriquesDiagram& {
        return all[static_cast<std::size_t>(rng() % all.size())];
      };
      check_lattice_triple(pick(), pick(), pick(), c);
    }
  }
  for (int n = 3; n <= 8 && c.ok(); ++n) check_hasse(n, c);
  return finish("lattice-laws",
                "code intersection and union are meet and join, the lattice "
                "is distributive, and the cover graph is a genuine Hasse "
                "diagram (acyclic, no shortcut edges)",
                "triples exhaustive n=3..6, " +
                    std::to_string(opts.random_triples_per_n) +
                    " seeded triples each n=7..9, Hasse checks n=3..8",
                c);
}

// --- claim 10 --------------------------------------------------------------

ClaimResult claim_birkhoff(const VerifyOptions& opts) {
  Check c;
  for (int n = 3; n <= opts.sweep_max_n && c.ok(); ++n) {
    const FencePoset fence = sup_irreducibles(n);
    std::vector<std::vector<Symbol>> codes;
    try {
      for (const EnriquesDiagram& d : enumerate(n)) {
        const std::vector<Symbol> ideal = birkhoff(d);
        if (!fence.hereditary(ideal)) {
          c.fail(d.key() + " is not down-closed in the fence");
          break;
        }
        codes.push_back(ideal);
      }
    } catch (const std::logic_error& e) {
      c.fail(e.what());
    }
    if (!c.ok()) break;
    std::sort(codes.begin(), codes.end());
    // An explicit --max-n overrides the accidental-explosion guard: the mask
    // scan is 4^{n-3} and the caller asked for it.
    if (codes != fence.hereditary_subsets(opts.sweep_max_n)) {
      c.fail("n=" + std::to_string(n) +
             ": codes and fence ideals are not the same family");
    }
  }
  return finish("birkhoff",
                "codes are exactly the down-closed subsets of the fence of "
                "join-irreducibles",
                "n=3.." + std::to_string(opts.sweep_max_n), c);
}

// --- claim 11 --------------------------------------------------------------

ClaimResult claim_duality_uniqueness() {
  Check c;
  for (int n = 3; n <= 5 && c.ok(); ++n) {
    const std::vector<std::vector<int>> found =
        order_reversing_bijections_exhaustive(n);
    if (found.size() != 1 || found[0] != dual_permutation(enumerate(n))) {
      c.fail("backtracking at n=" + std::to_string(n) + " found " +
             std::to_string(found.size()) +
             " order-reversing bijections (expected the dual alone)");
    }
  }
  for (int n = 3; n <= 14 && c.ok(); ++n) {
    const std::vector<std::vector<int>> autos =
        sup_irreducibles(n).automorphisms();
    bool trivial = autos.size() == 1;
    if (trivial) {
      for (std::size_t i = 0; i < autos[0].size(); ++i) {
        trivial = trivial && autos[0][i] == static_cast<int>(i);
      }
    }
    if (!trivial) {
      c.fail("the fence for n=" + std::to_string(n) + " admits " +
             std::to_string(autos.size()) + " automorphisms; rigidity fails");
      break;
    }
    const std::vector<std::vector<int>> found = order_reversing_bijections(n);
    if (found.size() != 1 || found[0] != dual_permutation(enumerate(n))) {
      c.fail("n=" + std::to_string(n) +
             ": the order-reversing bijection list is not exactly the dual");
    }
  }
  return finish("duality-uniqueness",
                "the dual is the only order-reversing bijection: directly by "
                "backtracking for small n, via rigidity of the fence of "
                "join-irreducibles for all n in range",
                "backtracking n=3..5, fence rigidity n=3..14", c);
}

// --- claim 12 --------------------------------------------------------------

ClaimResult claim_self_duals() {
  Check c;
  for (int n = 3; n <= 14 && c.ok(); ++n) {
    const std::vector<EnriquesDiagram> sd = self_duals(n);
    if (fibonacci(n - 2) != static_cast<unsigned long>(sd.size())) {
      c.fail("n=" + std::to_string(n) + ": " + std::to_string(sd.size()) +
             " self-duals, expected F(" + std::to_string(n - 2) + ") = " +
             fibonacci(n - 2).get_str());
      break;
    }
    const int h = n % 2 == 0 ? (n + 2) / 2 : (n + 3) / 2;
    std::set<std::string> image;
    for (const EnriquesDiagram& d : sd) {
      image.insert(self_dual_half(d).key());
    }
    if (image.size() != sd.size()) {
      c.fail("n=" + std::to_string(n) + ": halving map is not injective");
      break;
    }
    std::set<std::string> target;
    for (const EnriquesDiagram& d : enumerate(h)) {
      if (n % 2 == 0 || !d.vertex_breaking(h - 2)) target.insert(d.key());
    }
    if (image != target) {
      c.fail("n=" + std::to_string(n) + ": halving map image is not " +
             (n % 2 == 0 ? "all of E_" + std::to_string(h)
                         : "the v_" + std::to_string(h - 2) +
                               "-neutral part of E_" + std::to_string(h)));
    }
  }
  return finish("self-duals",
                "there are F(n-2) self-dual diagrams, and restricting their "
                "codes to the half complexity is a bijection onto E_h (n "
                "even) resp. its v_{h-2}-neutral part (n odd)",
                "n=3..14", c);
}

// --- claim 13 --------------------------------------------------------------

ClaimResult claim_complexity_bound(const VerifyOptions& opts) {
  Check c;
  const ComplexityBoundReport rep = complexity_bound_check(opts.sweep_max_n);
  if (!rep.milnor_bound_ok || !rep.multiplicity_bound_ok) c.fail(rep.witness);
  return finish("complexity-bound",
                "a branch with milnor number mu has complexity at most "
                "2 + mu/2 (alpha alone attains it), and branch multiplicity "
                "in E_n never exceeds F_n",
                "complexities 3.." + std::to_string(opts.sweep_max_n), c);
}

}  // namespace

std::vector<ClaimResult> run_verification(const VerifyOptions& opts) {
  std::vector<ClaimResult> results;
  results.push_back(claim_cardinality());
  results.push_back(claim_ab_refinement());
  results.push_back(claim_extremal_multiplicity());
  results.push_back(claim_extremal_milnor());
  results.push_back(claim_milnor_cross_oracle());
  results.push_back(claim_multiplicity_engines(opts));
  results.push_back(claim_operator_growth());
  results.push_back(claim_duality());
  results.push_back(claim_lattice_laws(opts));
  results.push_back(claim_birkhoff(opts));
  results.push_back(claim_duality_uniqueness());
  results.push_back(claim_self_duals());
  results.push_back(claim_complexity_bound(opts));
  return results;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const ClaimResult& r) { return r.pass; });
}

std::string report_text(const std::vector<ClaimResult>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const ClaimResult& r : results) {
    out += r.pass ? "PASS " : "FAIL ";
    out += r.id + "  [" + r.params + "]";
    if (!r.pass) out += "  witness: " + r.witness;
    out += "\n";
    if (r.pass) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) +
         " claims passed\n";
  return out;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string report_json(const std::vector<ClaimResult>& results) {
  std::string out = "[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const ClaimResult& r = results[i];
    if (i > 0) out += ",";
    out += "\n  {\"id\":\"" + json_escape(r.id) + "\"";
    out += ",\"statement\":\"" + json_escape(r.statement) + "\"";
    out += ",\"params\":\"" + json_escape(r.params) + "\"";
    out += ",\"pass\":" + std::string(r.pass ? "true" : "false");
    out += ",\"witness\":\"" + json_escape(r.witness) + "\"}";
  }
  out += "\n]\n";
  return out;
}

}  // namespace enriques
