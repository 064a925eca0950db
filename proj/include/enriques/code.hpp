#pragma once

#include <vector>

#include "enriques/symbol.hpp"

namespace enriques {

// A validated code: a subset of S_n that is realized by an actual diagram.
// The closure condition is the vertex rule
//
//     v_i in chi  ==>  e_i in chi, and e_{i+1} in chi when i <= n-3
//
// (a breaking vertex needs both adjacent edges straight; for i = n-2 the
// right-hand edge e_{n-1} is straight in every diagram, so only e_{n-2} is a
// real requirement).  Instances are immutable and always valid; the only way
// to construct one is through validate().
class Code {
 public:
  // Sorts `members` into canonical order and checks admissibility and the
  // closure condition.  Throws DomainError (n < 3), IndexError (symbol
  // outside S_n), or ValidityError (duplicate, or vertex missing an edge).
  static Code validate(int n, std::vector<Symbol> members);

  int complexity() const { return n_; }
  const std::vector<Symbol>& members() const { return members_; }  // canonical order
  std::size_t size() const { return members_.size(); }

  bool contains(Symbol s) const;
  bool contains_edge(int i) const { return contains(edge(i)); }
  bool contains_vertex(int i) const { return contains(vertex(i)); }

  // "e2,e3,v2" — the payload of the text form, empty string for the empty code.
  std::string chi_string() const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  Code(int n, std::vector<Symbol> members)
      : n_(n), members_(std::move(members)) {}

  int n_;
  std::vector<Symbol> members_;
};

}  // namespace enriques
