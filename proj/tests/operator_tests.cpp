#include <doctest.h>

#include <vector>

#include "enriques/diagram.hpp"
#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"
#include "enriques/invariants.hpp"
#include "enriques/lattice.hpp"
#include "enriques/operators.hpp"

using namespace enriques;

TEST_CASE("straightening: pinned applications") {
  CHECK(straighten(alpha(4), 2) == omega(4));
  CHECK(straighten(parse("n=6;chi="), 3) == parse("n=6;chi=e3"));
  // A straight e4 behind the new e3 triggers the vertex addition...
  CHECK(straighten(parse("n=6;chi=e4"), 3) == parse("n=6;chi=e3,e4,v3"));
  // ...but a straight e2 in front never does (the operator is asymmetric).
  CHECK(straighten(parse("n=6;chi=e2"), 3) == parse("n=6;chi=e2,e3"));
  // p = n-2 always adds the vertex: e_{n-1} is straight in every diagram.
  CHECK(straighten(parse("n=6;chi="), 4) == parse("n=6;chi=e4,v4"));

  CHECK(can_straighten(parse("n=6;chi="), 3));
  CHECK(!can_straighten(parse("n=6;chi=e3"), 3));
  CHECK(!can_straighten(parse("n=6;chi="), 1));
  CHECK(!can_straighten(parse("n=6;chi="), 5));
  CHECK_THROWS_AS(straighten(parse("n=6;chi=e3"), 3), OperatorError);
  CHECK_THROWS_AS(straighten(parse("n=6;chi="), 1), OperatorError);
  CHECK_THROWS_AS(straighten(parse("n=6;chi="), 5), OperatorError);
}

TEST_CASE("breaking: pinned applications") {
  for (int n = 4; n <= 9; ++n) {
    CHECK(break_at(pi(n), 2) == omega(n));
  }
  CHECK(break_at(parse("n=6;chi=e3,e4"), 3) == parse("n=6;chi=e3,e4,v3"));
  // Breaking needs the whole path [v_{p-1} v_{p+1}] straight.
  CHECK_THROWS_AS(break_at(parse("n=6;chi=e3"), 2), OperatorError);
  CHECK_THROWS_AS(break_at(parse("n=6;chi=e3"), 3), OperatorError);  // e4 curved
  CHECK_THROWS_AS(break_at(parse("n=6;chi=e3,e4,v3"), 3), OperatorError);
  CHECK(can_break(parse("n=6;chi=e4"), 4));  // e5 = e_{n-1} counts as straight
  CHECK(!can_break(parse("n=6;chi=e4"), 0));
  CHECK(!can_break(parse("n=6;chi=e4"), 7));
}

TEST_CASE("apply_operator dispatches and records the application") {
  const EnriquesDiagram d = parse("n=6;chi=e3,e4");
  const OperatorApplication app = apply_operator(d, OperatorKind::Break, 3);
  CHECK(app.kind == OperatorKind::Break);
  CHECK(app.position == 3);
  CHECK(app.input == d);
  CHECK(app.output == parse("n=6;chi=e3,e4,v3"));
  CHECK_THROWS_AS(apply_operator(d, OperatorKind::Straighten, 3),
                  OperatorError);
}

TEST_CASE("strict-increase set: the break-at-the-bottom case is {p-1}") {
  // Breaking pi at v_2 sits over the always-curved e_1, the one case where
  // the branch multiplicity survives.
  for (int n = 4; n <= 9; ++n) {
    CHECK(strict_increase_set(pi(n), OperatorKind::Break, 2) ==
          std::vector<int>{1});
  }
  CHECK_THROWS_AS(strict_increase_set(parse("n=6;chi=e3"), OperatorKind::Break, 2),
                  OperatorError);
}

namespace {

std::vector<int> observed_increase(const EnriquesDiagram& before,
                                   const EnriquesDiagram& after) {
  const std::vector<mpz_class> m0 = multiplicity_sequence(before).sequence;
  const std::vector<mpz_class> m1 = multiplicity_sequence(after).sequence;
  std::vector<int> out;
  for (std::size_t i = 0; i < m0.size(); ++i) {
    if (m1[i] > m0[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

TEST_CASE("operator growth laws, exhaustively for small complexity") {
  for (int n = 3; n <= 7; ++n) {
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      const MultiplicityProfile before = multiplicity_sequence(d);
      for (int p = 2; p <= n - 2; ++p) {
        for (const OperatorKind kind :
             {OperatorKind::Straighten, OperatorKind::Break}) {
          if (kind == OperatorKind::Straighten && !can_straighten(d, p)) {
            continue;
          }
          if (kind == OperatorKind::Break && !can_break(d, p)) continue;

          const EnriquesDiagram out = apply_operator(d, kind, p).output;
          const MultiplicityProfile after = multiplicity_sequence(out);

          REQUIRE(leq(d, out));
          REQUIRE(!(out == d));
          for (std::size_t i = 0; i < before.sequence.size(); ++i) {
            REQUIRE(after.sequence[i] >= before.sequence[i]);
          }
          REQUIRE(after.milnor > before.milnor);

          const std::vector<int> diff = observed_increase(d, out);
          REQUIRE(!diff.empty());
          REQUIRE(diff == strict_increase_set(d, kind, p));

          // m_0 survives exactly when a break happens above a curved edge;
          // then the change is confined to a single vertex.
          const bool m0_kept = after.sequence[0] == before.sequence[0];
          REQUIRE(m0_kept == (kind == OperatorKind::Break &&
                              !d.edge_straight(p - 1)));
          if (m0_kept) REQUIRE(diff.size() == 1);
        }
      }
    });
  }
}

TEST_CASE("operators realize the cover relation") {
  for (int n = 4; n <= 7; ++n) {
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      for (const auto& [label, upper] : cover_successors(d)) {
        if (label.kind == SymbolKind::Vertex) {
          // Every vertex-labeled cover is a break: the two adjacent edges
          // must already be straight or the bigger code would be invalid.
          REQUIRE(can_break(d, label.index));
          REQUIRE(break_at(d, label.index) == upper);
        } else if (!d.edge_straight(label.index + 1)) {
          // Edge-labeled covers are straightenings whenever the operator
          // would not drag the vertex along.
          REQUIRE(straighten(d, label.index) == upper);
        } else {
          // e_{p+1} straight: the single-symbol enlargement is a genuine
          // cover but s_p jumps two symbols up; check exactly that.
          const EnriquesDiagram two_up = straighten(d, label.index);
          REQUIRE(two_up.code().size() == d.code().size() + 2);
          REQUIRE(leq(upper, two_up));
          REQUIRE(!(upper == two_up));
        }
      }
    });
  }
}
