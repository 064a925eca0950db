#include "enriques/code.hpp"

#include <algorithm>

#include "enriques/errors.hpp"

namespace enriques {

Code Code::validate(int n, std::vector<Symbol> members) {
  require_complexity(n);
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Symbol s = members[i];
    if (!admissible(n, s)) {
      throw IndexError("symbol " + s.name() + " is out of range for n=" +
                       std::to_string(n) + " (indices run 2.." +
                       std::to_string(n - 2) + ")");
    }
    if (i > 0 && members[i - 1] == s) {
      throw ValidityError("duplicate symbol " + s.name(), s.name());
    }
  }

  auto has = [&](Symbol s) {
    return std::binary_search(members.begin(), members.end(), s);
  };
  for (const Symbol s : members) {
    if (s.kind != SymbolKind::Vertex) continue;
    const int i = s.index;
    if (!has(edge(i)) || (i <= n - 3 && !has(edge(i + 1)))) {
      throw ValidityError(
          "invalid code: breaking vertex " + s.name() +
              " requires both adjacent edges straight (" + edge(i).name() +
              (i <= n - 3 ? " and " + edge(i + 1).name() : std::string()) +
              " must be in the code)",
          s.name());
    }
  }
  return Code(n, std::move(members));
}

bool Code::contains(Symbol s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::string Code::chi_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += members_[i].name();
  }
  return out;
}

}  // namespace enriques
