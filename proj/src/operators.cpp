#include "enriques/operators.hpp"

#include <algorithm>

#include "enriques/errors.hpp"

namespace enriques {

namespace {

void check_position(const EnriquesDiagram& d, int p) {
  const int n = d.complexity();
  if (p < 2 || p > n - 2) {
    throw OperatorError("operator position " + std::to_string(p) +
                        " out of range 2.." + std::to_string(n - 2) +
                        " for n=" + std::to_string(n));
  }
}

EnriquesDiagram with_added(const EnriquesDiagram& d,
                           const std::vector<Symbol>& added) {
  std::vector<Symbol> members = d.code().members();
  members.insert(members.end(), added.begin(), added.end());
  return EnriquesDiagram(Code::validate(d.complexity(), std::move(members)));
}

}  // namespace

bool can_straighten(const EnriquesDiagram& d, int p) {
  const int n = d.complexity();
  return p >= 2 && p <= n - 2 && !d.edge_straight(p);
}

EnriquesDiagram straighten(const EnriquesDiagram& d, int p) {
  check_position(d, p);
  if (d.edge_straight(p)) {
    throw OperatorError("cannot straighten e" + std::to_string(p) +
                        ": it is already straight");
  }
  std::vector<Symbol> added{edge(p)};
  // If the next edge is straight too, the freshly straightened e_p must not
  // merge with it into one run, so v_p becomes a breaking vertex.  Nothing
  // of the sort happens on the left: v_{p-1} stays as it was.
  if (d.edge_straight(p + 1)) added.push_back(vertex(p));
  return with_added(d, added);
}

bool can_break(const EnriquesDiagram& d, int p) {
  const int n = d.complexity();
  return p >= 2 && p <= n - 2 && d.edge_straight(p) &&
         d.edge_straight(p + 1) && !d.vertex_breaking(p);
}

EnriquesDiagram break_at(const EnriquesDiagram& d, int p) {
  check_position(d, p);
  if (!can_break(d, p)) {
    throw OperatorError("cannot break at v" + std::to_string(p) +
                        ": the path [v" + std::to_string(p - 1) + " v" +
                        std::to_string(p + 1) + "] is not straight");
  }
  return with_added(d, {vertex(p)});
}

OperatorApplication apply_operator(const EnriquesDiagram& d, OperatorKind kind,
                                   int p) {
  EnriquesDiagram out =
      kind == OperatorKind::Straighten ? straighten(d, p) : break_at(d, p);
  return OperatorApplication{kind, p, d, std::move(out)};
}

std::vector<int> strict_increase_set(const EnriquesDiagram& d,
                                     OperatorKind kind, int p) {
  const OperatorApplication app = apply_operator(d, kind, p);
  const EnriquesDiagram& out = app.output;

  // l >= 1 maximal with [v_{p-l} v_p] straight in the output (e_p is straight
  // there for both operators; extending left over v_{p-l} needs e_{p-l}
  // straight and v_{p-l} neutral, and e_1 always stops the walk).
  int l = 1;
  while (p - l >= 1 && out.edge_straight(p - l) && !out.vertex_breaking(p - l))
    ++l;

  std::vector<int> j_set;
  if (kind == OperatorKind::Straighten) {
    for (int i = 0; i <= p - l - 1; ++i) j_set.push_back(i);
  } else if (l > 1) {
    for (int i = 0; i <= p - 1; ++i) j_set.push_back(i);
  } else if (!d.edge_straight(p - 1)) {
    j_set.push_back(p - 1);
  } else {
    // l = 1 with e_{p-1} straight forces v_{p-1} breaking; the growth skips
    // the straight run [v_{p-k} v_{p-1}] hanging off that breaking vertex.
    int k = 2;
    while (p - k >= 1 && d.edge_straight(p - k) && !d.vertex_breaking(p - k))
      ++k;
    for (int i = 0; i <= p - k - 1; ++i) j_set.push_back(i);
    j_set.push_back(p - 1);
  }
  return j_set;
}

}  // namespace enriques
