#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace enriques {

// The decorations of a diagram of complexity n that are not forced are the
// straight/curved state of edges e_2..e_{n-2} and the breaking/neutral state
// of vertices v_2..v_{n-2}.  A Symbol names one of those 2(n-3) free slots;
// a diagram's code is the set of symbols that are "on" (straight / breaking).
enum class SymbolKind : std::uint8_t { Edge = 0, Vertex = 1 };

struct Symbol {
  SymbolKind kind;
  int index;

  // Canonical order: all edges by index, then all vertices by index.
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

  std::string name() const;  // "e7" or "v7"
};

constexpr Symbol edge(int i) { return Symbol{SymbolKind::Edge, i}; }
constexpr Symbol vertex(int i) { return Symbol{SymbolKind::Vertex, i}; }

// True iff s names a free slot of a complexity-n diagram (2 <= index <= n-2).
bool admissible(int n, Symbol s);

// S_n, in canonical order: e_2,...,e_{n-2},v_2,...,v_{n-2}.
// Empty for n == 3.  Throws DomainError for n < 3.
std::vector<Symbol> symbol_set(int n);

// Throws DomainError unless n >= 3.  Every entry point that takes a
// complexity funnels through this.
void require_complexity(int n);

}  // namespace enriques
