#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "enriques/diagram.hpp"
#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"
#include "enriques/lattice.hpp"

using namespace enriques;

TEST_CASE("staircase order basics") {
  CHECK(leq(alpha(6), omega(6)));
  CHECK(leq(pi(6), omega(6)));
  CHECK(!leq(omega(6), pi(6)));
  CHECK(leq(alpha(6), alpha(6)));
  CHECK_THROWS_AS(leq(alpha(4), alpha(5)), DomainError);
  CHECK_THROWS_AS(meet(alpha(4), alpha(5)), DomainError);
  CHECK_THROWS_AS(join(omega(4), omega(5)), DomainError);
}

TEST_CASE("meet and join are intersection and union") {
  CHECK(join(parse("n=6;chi=e2"), parse("n=6;chi=e3")) ==
        parse("n=6;chi=e2,e3"));
  CHECK(meet(omega(6), pi(6)) == pi(6));
  for_each_diagram(6, [&](const EnriquesDiagram& d) {
    REQUIRE(meet(omega(6), d) == d);
    REQUIRE(join(alpha(6), d) == d);
    REQUIRE(meet(d, d) == d);
    REQUIRE(join(d, d) == d);
  });
}

TEST_CASE("meet/join closure, commutativity and bounds for all pairs") {
  for (int n = 3; n <= 8; ++n) {
    const std::vector<EnriquesDiagram> all = enumerate(n);
    for (const EnriquesDiagram& a : all) {
      for (const EnriquesDiagram& b : all) {
        // Constructing through validate() re-checks closure; a throw here
        // fails the test.
        const EnriquesDiagram lo = meet(a, b);
        const EnriquesDiagram hi = join(a, b);
        REQUIRE(lo == meet(b, a));
        REQUIRE(hi == join(b, a));
        REQUIRE(leq(lo, a));
        REQUIRE(leq(lo, b));
        REQUIRE(leq(a, hi));
        REQUIRE(leq(b, hi));
      }
    }
  }
}

TEST_CASE("distributivity, exhaustively at n=5") {
  const std::vector<EnriquesDiagram> all = enumerate(5);
  for (const EnriquesDiagram& a : all) {
    for (const EnriquesDiagram& b : all) {
      for (const EnriquesDiagram& c : all) {
        REQUIRE(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
        REQUIRE(join(a, meet(b, c)) == meet(join(a, b), join(a, c)));
      }
    }
  }
}

TEST_CASE("duality: pinned example, involution, extremal swap") {
  CHECK(dual(parse("n=6;chi=e3")).key() == "n=6;chi=e2,e3,e4,v2,v4");
  CHECK(dual(parse("n=6;chi=e2,e3,e4,v2,v4")) == parse("n=6;chi=e3"));
  for (int n = 3; n <= 8; ++n) {
    CHECK(dual(alpha(n)) == omega(n));
    CHECK(dual(omega(n)) == alpha(n));
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      REQUIRE(dual(dual(d)) == d);
    });
  }
  // n=3: one-point lattice, dual is the identity.
  CHECK(dual(alpha(3)) == alpha(3));
  CHECK(self_dual(alpha(3)));
}

TEST_CASE("duality reverses the order (spot complexity 6)") {
  const std::vector<EnriquesDiagram> all = enumerate(6);
  for (const EnriquesDiagram& a : all) {
    for (const EnriquesDiagram& b : all) {
      REQUIRE(leq(a, b) == leq(dual(b), dual(a)));
    }
  }
}

namespace {

// Covers computed the slow way: b covers a iff a < b with nothing strictly
// between.
std::vector<std::string> brute_force_covers(
    const EnriquesDiagram& a, const std::vector<EnriquesDiagram>& all) {
  std::vector<std::string> out;
  for (const EnriquesDiagram& b : all) {
    if (!(leq(a, b)) || b == a) continue;
    bool direct = true;
    for (const EnriquesDiagram& c : all) {
      if (c == a || c == b) continue;
      if (leq(a, c) && leq(c, b)) {
        direct = false;
        break;
      }
    }
    if (direct) out.push_back(b.key());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cover_successors matches the order-theoretic covers") {
  for (int n = 3; n <= 6; ++n) {
    const std::vector<EnriquesDiagram> all = enumerate(n);
    for (const EnriquesDiagram& a : all) {
      std::vector<std::string> fast;
      for (const auto& [label, b] : cover_successors(a)) {
        REQUIRE(b.code().size() == a.code().size() + 1);
        REQUIRE(b.code().contains(label));
        REQUIRE(!a.code().contains(label));
        fast.push_back(b.key());
      }
      std::sort(fast.begin(), fast.end());
      REQUIRE(fast == brute_force_covers(a, all));
    }
  }
}

TEST_CASE("cover_successors pinned at complexity 4") {
  const auto bottom = cover_successors(alpha(4));
  REQUIRE(bottom.size() == 1);
  CHECK(bottom[0].first == edge(2));
  CHECK(bottom[0].second == parse("n=4;chi=e2"));

  const auto middle = cover_successors(parse("n=4;chi=e2"));
  REQUIRE(middle.size() == 1);
  CHECK(middle[0].first == vertex(2));
  CHECK(middle[0].second == omega(4));

  CHECK(cover_successors(omega(4)).empty());
  CHECK(cover_successors(omega(9)).empty());
}

TEST_CASE("hasse graph shape at small complexity") {
  const HasseGraph g4 = hasse(4);
  CHECK(g4.nodes.size() == 3);
  CHECK(g4.edges.size() == 2);
  CHECK(g4.index_of("n=4;chi=e2") == 1);
  CHECK(g4.index_of("nonsense") == -1);

  CHECK(hasse(5).nodes.size() == 8);
  CHECK(hasse(6).nodes.size() == 21);

  // alpha is the unique source, omega the unique sink.
  const HasseGraph g6 = hasse(6);
  std::vector<int> indeg(g6.nodes.size(), 0), outdeg(g6.nodes.size(), 0);
  for (const auto& e : g6.edges) {
    ++indeg[e.upper];
    ++outdeg[e.lower];
  }
  int sources = 0, sinks = 0;
  for (std::size_t i = 0; i < g6.nodes.size(); ++i) {
    if (indeg[i] == 0) {
      ++sources;
      CHECK(g6.nodes[i] == alpha(6));
    }
    if (outdeg[i] == 0) {
      ++sinks;
      CHECK(g6.nodes[i] == omega(6));
    }
  }
  CHECK(sources == 1);
  CHECK(sinks == 1);

  CHECK_THROWS_AS(hasse(15), ResourceError);
}

TEST_CASE("DOT output is deterministic and carries the node attributes") {
  const std::string expected =
      "digraph enriques_4 {\n"
      "  rankdir=BT;\n"
      "  \"n=4;chi=\" [m0=2, milnor=4];\n"
      "  \"n=4;chi=e2\" [m0=3, milnor=6, selfdual=true];\n"
      "  \"n=4;chi=e2,v2\" [m0=3, milnor=8];\n"
      "  \"n=4;chi=\" -> \"n=4;chi=e2\" [label=\"e2\"];\n"
      "  \"n=4;chi=e2\" -> \"n=4;chi=e2,v2\" [label=\"v2\"];\n"
      "}\n";
  CHECK(to_dot(hasse(4)) == expected);
  CHECK(to_dot(hasse(4)) == to_dot(hasse(4)));
}

TEST_CASE("fence poset of join-irreducibles") {
  const FencePoset f6 = sup_irreducibles(6);
  CHECK(f6.elements() == symbol_set(6));
  CHECK(f6.leq(edge(3), vertex(3)));
  CHECK(f6.leq(edge(4), vertex(3)));
  CHECK(!f6.leq(edge(2), vertex(3)));
  CHECK(!f6.leq(vertex(3), edge(3)));
  CHECK(f6.leq(edge(4), edge(4)));
  CHECK(f6.lower_covers(vertex(3)) == std::vector<Symbol>{edge(3), edge(4)});
  // v_{n-2} is the tail of the fence: one lower cover only.
  CHECK(f6.lower_covers(vertex(4)) == std::vector<Symbol>{edge(4)});
  CHECK(f6.lower_covers(edge(3)).empty());

  CHECK(f6.hereditary({edge(3)}));
  CHECK(f6.hereditary({edge(3), edge(4), vertex(3)}));
  CHECK(!f6.hereditary({vertex(3)}));
  CHECK(!f6.hereditary({edge(3), vertex(3)}));
  CHECK(f6.hereditary({edge(4), vertex(4)}));
}

TEST_CASE("hereditary subsets of the fence are exactly the codes") {
  // Spelled out for n=4...
  const FencePoset f4 = sup_irreducibles(4);
  const std::vector<std::vector<Symbol>> k4 = f4.hereditary_subsets();
  REQUIRE(k4.size() == 3);
  CHECK(k4[0].empty());
  CHECK(k4[1] == std::vector<Symbol>{edge(2)});
  CHECK(k4[2] == std::vector<Symbol>{edge(2), vertex(2)});

  // ...and structurally up to n=9.
  for (int n = 3; n <= 9; ++n) {
    std::vector<std::vector<Symbol>> codes;
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      codes.push_back(d.code().members());
    });
    std::sort(codes.begin(), codes.end());
    CHECK(sup_irreducibles(n).hereditary_subsets() == codes);
  }

  CHECK_THROWS_AS(sup_irreducibles(13).hereditary_subsets(), ResourceError);
}

TEST_CASE("join-irreducible diagrams are the principal ideals") {
  const std::vector<EnriquesDiagram> irr = sup_irreducible_diagrams(6);
  REQUIRE(irr.size() == 6);
  CHECK(irr[0] == parse("n=6;chi=e2"));
  CHECK(irr[1] == parse("n=6;chi=e3"));
  CHECK(irr[2] == parse("n=6;chi=e4"));
  CHECK(irr[3] == parse("n=6;chi=e2,e3,v2"));
  CHECK(irr[4] == parse("n=6;chi=e3,e4,v3"));
  CHECK(irr[5] == parse("n=6;chi=e4,v4"));

  // Cross-check against the lattice: the join-irreducible elements of a
  // finite distributive lattice are those with exactly one lower cover.
  for (int n = 4; n <= 8; ++n) {
    const HasseGraph g = hasse(n);
    std::vector<int> indeg(g.nodes.size(), 0);
    for (const auto& e : g.edges) ++indeg[e.upper];
    std::set<std::string> one_cover;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      if (indeg[i] == 1) one_cover.insert(g.nodes[i].key());
    }
    std::set<std::string> predicted;
    for (const EnriquesDiagram& d : sup_irreducible_diagrams(n)) {
      predicted.insert(d.key());
    }
    REQUIRE(one_cover == predicted);
  }
}

TEST_CASE("birkhoff: code membership recovers the order on irreducibles") {
  for (int n = 4; n <= 7; ++n) {
    const FencePoset fence = sup_irreducibles(n);
    const std::vector<EnriquesDiagram> ideals = sup_irreducible_diagrams(n);
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      REQUIRE(birkhoff(d) == d.code().members());
      REQUIRE(fence.hereditary(birkhoff(d)));
      // The down-set of irreducibles below d is literally the code.
      std::vector<Symbol> below;
      for (std::size_t t = 0; t < ideals.size(); ++t) {
        if (leq(ideals[t], d)) below.push_back(fence.elements()[t]);
      }
      std::sort(below.begin(), below.end());
      REQUIRE(below == d.code().members());
    });
  }
}

TEST_CASE("fence automorphisms are trivial") {
  for (int n = 3; n <= 10; ++n) {
    const auto autos = sup_irreducibles(n).automorphisms();
    REQUIRE(autos.size() == 1);
    for (std::size_t i = 0; i < autos[0].size(); ++i) {
      REQUIRE(autos[0][i] == static_cast<int>(i));
    }
  }
}

namespace {

std::vector<int> dual_perm(int n) {
  const std::vector<EnriquesDiagram> all = enumerate(n);
  std::vector<std::string> keys;
  for (const EnriquesDiagram& d : all) keys.push_back(d.key());
  std::vector<int> perm;
  for (const EnriquesDiagram& d : all) {
    perm.push_back(static_cast<int>(
        std::lower_bound(keys.begin(), keys.end(), dual(d).key()) -
        keys.begin()));
  }
  return perm;
}

}  // namespace

TEST_CASE("the dual is the only order-reversing bijection") {
  CHECK(order_reversing_bijections_exhaustive(4) ==
        std::vector<std::vector<int>>{{2, 1, 0}});
  for (int n = 3; n <= 6; ++n) {
    const auto found = order_reversing_bijections_exhaustive(n);
    REQUIRE(found.size() == 1);
    REQUIRE(found[0] == dual_perm(n));
  }
  for (int n = 3; n <= 9; ++n) {
    const auto found = order_reversing_bijections(n);
    REQUIRE(found.size() == 1);
    REQUIRE(found[0] == dual_perm(n));
  }
  CHECK_THROWS_AS(order_reversing_bijections_exhaustive(7), ResourceError);
  CHECK_THROWS_AS(order_reversing_bijections(15), ResourceError);
}

TEST_CASE("self-dual diagrams and the halving map") {
  const std::vector<EnriquesDiagram> sd4 = self_duals(4);
  REQUIRE(sd4.size() == 1);
  CHECK(sd4[0].key() == "n=4;chi=e2");
  CHECK(self_dual_half(sd4[0]) == alpha(3));

  CHECK(self_duals(6).size() == 3);
  for (int n = 3; n <= 10; ++n) {
    const auto sd = self_duals(n);
    CHECK(fibonacci(n - 2) == static_cast<unsigned long>(sd.size()));
    const int h = n % 2 == 0 ? (n + 2) / 2 : (n + 3) / 2;
    std::set<std::string> image;
    for (const EnriquesDiagram& d : sd) {
      REQUIRE(self_dual(d));
      image.insert(self_dual_half(d).key());
    }
    REQUIRE(image.size() == sd.size());  // restriction stays injective
    std::set<std::string> target;
    for (const EnriquesDiagram& d : enumerate(h)) {
      if (n % 2 == 0 || !d.vertex_breaking(h - 2)) target.insert(d.key());
    }
    REQUIRE(image == target);
  }

  CHECK_THROWS_AS(self_dual_half(alpha(4)), DomainError);
}
