#include "enriques/symbol.hpp"

#include "enriques/errors.hpp"

namespace enriques {

std::string Symbol::name() const {
  return (kind == SymbolKind::Edge ? "e" : "v") + std::to_string(index);
}

bool admissible(int n, Symbol s) {
  return s.index >= 2 && s.index <= n - 2;
}

void require_complexity(int n) {
  if (n < 3) {
    throw DomainError("complexity must be >= 3 (a singular branch needs at "
                      "least three blow-ups); got n=" + std::to_string(n));
  }
}

std::vector<Symbol> symbol_set(int n) {
  require_complexity(n);
  std::vector<Symbol> out;
  out.reserve(2 * static_cast<std::size_t>(n > 3 ? n - 3 : 0));
  for (int i = 2; i <= n - 2; ++i) out.push_back(edge(i));
  for (int i = 2; i <= n - 2; ++i) out.push_back(vertex(i));
  return out;
}

}  // namespace enriques
