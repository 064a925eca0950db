#pragma once

#include <vector>

#include "enriques/diagram.hpp"

namespace enriques {

enum class OperatorKind { Straighten, Break };

struct OperatorApplication {
  OperatorKind kind;
  int position;
  EnriquesDiagram input;
  EnriquesDiagram output;
};

// Both operators act at a position p with 2 <= p <= n-2 and strictly enlarge
// the code, hence move strictly up the staircase order.

// Straightening requires e_p curved.  It makes e_p straight and, when the
// next edge e_{p+1} is already straight (always the case for p = n-2, where
// e_{p+1} = e_{n-1}), also turns v_p into a breaking vertex so that the two
// straight runs stay separated.  Note the asymmetry: v_{p-1} is never
// touched, even when e_{p-1} is straight.
bool can_straighten(const EnriquesDiagram& d, int p);
EnriquesDiagram straighten(const EnriquesDiagram& d, int p);

// Breaking requires the path [v_{p-1} v_{p+1}] to be straight (edges e_p and
// e_{p+1} straight, v_p neutral) and turns v_p into a breaking vertex.
bool can_break(const EnriquesDiagram& d, int p);
EnriquesDiagram break_at(const EnriquesDiagram& d, int p);

// Dispatcher; throws OperatorError when the precondition fails.
OperatorApplication apply_operator(const EnriquesDiagram& d, OperatorKind kind,
                                   int p);

// The set J of indices i with m_i(output) > m_i(input), predicted in closed
// form from the local shape around p.  With l >= 1 maximal such that
// [v_{p-l} v_p] is straight in the output:
//
//   straighten:                               J = {0,...,p-l-1}
//   break, l > 1:                             J = {0,...,p-1}
//   break, l = 1, e_{p-1} curved:             J = {p-1}
//   break, l = 1, e_{p-1} straight:           J = {0,...,p-k-1} u {p-1},
//     with k >= 2 maximal such that [v_{p-k} v_{p-1}] is straight.
//
// Returned sorted ascending.  In particular the branch multiplicity m_0
// survives an operator only in the third case.
std::vector<int> strict_increase_set(const EnriquesDiagram& d,
                                     OperatorKind kind, int p);

}  // namespace enriques
