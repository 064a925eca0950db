#pragma once

#include <string>
#include <string_view>

#include "enriques/code.hpp"

namespace enriques {

// The Enriques diagram of a plane branch whose resolution blows up n points
// P_0,...,P_{n-1}: a chain of vertices v_0..v_{n-1} joined by edges
// e_i = [v_{i-1} v_i].  Edges are curved (free point) or straight (satellite
// point); vertices are breaking or neutral.  For every singular branch
//
//   * e_1 is curved and e_{n-1} is straight,
//   * v_0, v_1 and v_{n-1} are neutral,
//   * a breaking vertex has both adjacent edges straight,
//   * a curved edge has both endpoints neutral,
//
// so the diagram is determined by its code (see Code) and n.  This class
// stores the code plus the full decoration tables with the forced values
// filled in, so the numerical machinery never special-cases the boundary.
class EnriquesDiagram {
 public:
  explicit EnriquesDiagram(Code code);

  int complexity() const { return n_; }
  const Code& code() const { return code_; }

  bool edge_straight(int i) const;    // 1 <= i <= n-1
  bool vertex_breaking(int i) const;  // 0 <= i <= n-1

  // Canonical text form, e.g. "n=6;chi=e3".  parse(key()) == *this.
  std::string key() const;

  friend bool operator==(const EnriquesDiagram&, const EnriquesDiagram&);

 private:
  int n_;
  Code code_;
  std::vector<char> edge_straight_;    // index 1..n-1; [0] unused
  std::vector<char> vertex_breaking_;  // index 0..n-1
};

// The three extremal diagrams of complexity n.
EnriquesDiagram alpha(int n);  // empty code; the branch x^{2n-3} - y^2
EnriquesDiagram omega(int n);  // full code S_n; the branch x^{F_{n+1}} - y^{F_n}
EnriquesDiagram pi(int n);     // S_n minus v_2 (n >= 4); x^{F_{n-2}+F_n} - y^{F_n}

// Text grammar (no whitespace anywhere):
//
//   key    := "n=" int ";chi=" [ sym ("," sym)* ]
//   sym    := ("e" | "v") int
//
// Symbols may arrive in any order; duplicates are rejected.  Parse errors
// carry the byte offset of the offending character.
EnriquesDiagram parse(std::string_view text);

// Canonical form: symbols in canonical order.  format(parse(s)) is the
// canonical spelling of s; parse(format(d)) == d.
std::string format(const EnriquesDiagram& d);

}  // namespace enriques
