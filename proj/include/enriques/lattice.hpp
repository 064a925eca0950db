#pragma once

#include <string>
#include <utility>
#include <vector>

#include "enriques/diagram.hpp"

namespace enriques {

// ---------------------------------------------------------------------------
// The staircase order on diagrams of a fixed complexity: a <= b iff every
// edge straight in a is straight in b and every vertex breaking in a is
// breaking in b, i.e. code inclusion.  Under meet = code intersection and
// join = code union this is a distributive lattice with minimum alpha(n) and
// maximum omega(n).
// ---------------------------------------------------------------------------

bool leq(const EnriquesDiagram& a, const EnriquesDiagram& b);
EnriquesDiagram meet(const EnriquesDiagram& a, const EnriquesDiagram& b);
EnriquesDiagram join(const EnriquesDiagram& a, const EnriquesDiagram& b);

// The unique order-reversing bijection of the lattice: symbol s is in the
// dual's code iff the complementary-index symbol of the other kind is absent,
//
//   v_k in dual(d)  iff  e_{n-k} not in code(d)
//   e_k in dual(d)  iff  v_{n-k} not in code(d)
//
// An involution exchanging alpha(n) and omega(n).  For n = 3 it is the
// identity on the one-element lattice.
EnriquesDiagram dual(const EnriquesDiagram& d);

bool self_dual(const EnriquesDiagram& d);

// All diagrams covering d, i.e. the valid single-symbol enlargements of its
// code, paired with the added symbol, in canonical symbol order.
std::vector<std::pair<Symbol, EnriquesDiagram>> cover_successors(
    const EnriquesDiagram& d);

inline constexpr int kDefaultHasseBound = 14;

struct HasseGraph {
  struct Edge {
    int lower, upper;  // node indices
    Symbol label;      // the one symbol the upper code adds
  };

  int complexity;
  std::vector<EnriquesDiagram> nodes;  // canonical order
  std::vector<Edge> edges;             // sorted by (lower, label)

  int index_of(const std::string& key) const;  // -1 if absent
};

// Materializes all of E_n.  The node count grows like F_{2n-4}, so a guard
// rejects n beyond max_n (ResourceError); raise it knowingly.
HasseGraph hasse(int n, int max_n = kDefaultHasseBound);

// Graphviz text.  Node id = canonical key; every node carries m0 and milnor
// attributes and self-dual nodes carry selfdual=true; every edge is labeled
// with its added symbol.  Output is deterministic (canonical node order,
// label order within a node).
std::string to_dot(const HasseGraph& g);

// ---------------------------------------------------------------------------
// Birkhoff structure.  The join-irreducible diagrams of E_n are the
// principal ideals of the fence on S_n in which v_i sits above e_i and
// e_{i+1} (above only e_{n-2} for i = n-2), and codes are exactly the
// down-closed subsets of that fence.
// ---------------------------------------------------------------------------

class FencePoset {
 public:
  explicit FencePoset(int n);

  int complexity() const { return n_; }
  const std::vector<Symbol>& elements() const { return elements_; }  // canonical order

  bool leq(Symbol a, Symbol b) const;                // a below-or-equal b
  std::vector<Symbol> lower_covers(Symbol s) const;  // empty for edges

  bool hereditary(const std::vector<Symbol>& subset) const;

  // Every down-closed subset, each in canonical symbol order, the whole list
  // sorted.  Enumerates all 2^|S_n| candidate masks, so guarded (default
  // n <= 12 keeps it under 2^18 masks).
  std::vector<std::vector<Symbol>> hereditary_subsets(int max_n = 12) const;

  // All permutations of the elements preserving the cover digraph, found by
  // backtracking.  The fence is rigid: only the identity survives, which is
  // what forces the duality to be unique.
  std::vector<std::vector<int>> automorphisms() const;

 private:
  int n_;
  std::vector<Symbol> elements_;
};

// The fence poset of join-irreducibles of E_n.
FencePoset sup_irreducibles(int n);

// The join-irreducible diagrams themselves: codes {e_i}, {v_i, e_i, e_{i+1}}
// (i <= n-3) and {v_{n-2}, e_{n-2}}, listed as the principal ideals of
// sup_irreducibles(n) in canonical element order.
std::vector<EnriquesDiagram> sup_irreducible_diagrams(int n);

// d's code viewed as a subset of the fence, checked down-closed.
std::vector<Symbol> birkhoff(const EnriquesDiagram& d);

// ---------------------------------------------------------------------------
// Uniqueness of the duality.  Two independent routes:
//   * order_reversing_bijections_exhaustive backtracks directly over E_n
//     (images constrained rank -> corank); practical for n <= 6;
//   * order_reversing_bijections reduces through Birkhoff: every
//     order-reversing bijection is dual composed with a lattice automorphism,
//     and lattice automorphisms restrict to automorphisms of the fence, so
//     the rigid fence leaves exactly dual itself.
// Both return permutations of the canonical enumeration order.
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> order_reversing_bijections_exhaustive(
    int n, int max_n = 6);
std::vector<std::vector<int>> order_reversing_bijections(
    int n, int max_n = kDefaultHasseBound);

// All self-dual diagrams of E_n in canonical order; there are F_{n-2}.
std::vector<EnriquesDiagram> self_duals(int n, int max_n = kDefaultHasseBound);

// The halving map on self-dual diagrams: restricting the code to the symbols
// of the half complexity h = (n+2)/2 (n even) or h = (n+3)/2 (n odd) is a
// bijection from the self-duals of E_n onto E_h (n even) resp. onto the
// diagrams of E_h with v_{h-2} neutral (n odd).
EnriquesDiagram self_dual_half(const EnriquesDiagram& d);

}  // namespace enriques
