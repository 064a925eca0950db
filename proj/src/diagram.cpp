#include "enriques/diagram.hpp"

#include <stdexcept>

#include "enriques/errors.hpp"

namespace enriques {

EnriquesDiagram::EnriquesDiagram(Code code)
    : n_(code.complexity()),
      code_(std::move(code)),
      edge_straight_(static_cast<std::size_t>(n_), 0),
      vertex_breaking_(static_cast<std::size_t>(n_), 0) {
  // Fill the decoration tables, forced values included: e_1 curved,
  // e_{n-1} straight, boundary vertices neutral.
  edge_straight_[n_ - 1] = 1;
  for (const Symbol s : code_.members()) {
    if (s.kind == SymbolKind::Edge) {
      edge_straight_[s.index] = 1;
    } else {
      vertex_breaking_[s.index] = 1;
    }
  }
  // Cheap re-check of the two decoration rules; Code::validate already
  // guarantees them, so a throw here means a library bug.
  for (int i = 0; i < n_; ++i) {
    if (!vertex_breaking_[i]) continue;
    if (!edge_straight_[i] || i + 1 > n_ - 1 || !edge_straight_[i + 1]) {
      throw std::logic_error("diagram invariant broken at vertex " +
                             std::to_string(i));
    }
  }
}

bool EnriquesDiagram::edge_straight(int i) const {
  if (i < 1 || i > n_ - 1) {
    throw IndexError("edge index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(n_ - 1));
  }
  return edge_straight_[i] != 0;
}

bool EnriquesDiagram::vertex_breaking(int i) const {
  if (i < 0 || i > n_ - 1) {
    throw IndexError("vertex index " + std::to_string(i) +
                     " out of range 0.." + std::to_string(n_ - 1));
  }
  return vertex_breaking_[i] != 0;
}

std::string EnriquesDiagram::key() const {
  return "n=" + std::to_string(n_) + ";chi=" + code_.chi_string();
}

bool operator==(const EnriquesDiagram& a, const EnriquesDiagram& b) {
  return a.code_ == b.code_;
}

EnriquesDiagram alpha(int n) {
  return EnriquesDiagram(Code::validate(n, {}));
}

EnriquesDiagram omega(int n) {
  return EnriquesDiagram(Code::validate(n, symbol_set(n)));
}

EnriquesDiagram pi(int n) {
  if (n < 4) {
    throw DomainError("pi(n) needs n >= 4: for n=3 the symbol v_2 it removes "
                      "does not exist");
  }
  std::vector<Symbol> members;
  for (const Symbol s : symbol_set(n)) {
    if (s != vertex(2)) members.push_back(s);
  }
  return EnriquesDiagram(Code::validate(n, std::move(members)));
}

namespace {

// Strict digit-run parser; rejects empty runs and values that cannot fit.
long parse_int(std::string_view text, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  long value = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    if (value > 100000000) {
      throw ParseError(std::string(what) + " is absurdly large", start);
    }
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  if (pos == start) {
    throw ParseError("expected digits for " + std::string(what), start);
  }
  return value;
}

void expect(std::string_view text, std::size_t& pos, std::string_view lit) {
  if (text.substr(pos, lit.size()) != lit) {
    throw ParseError("expected \"" + std::string(lit) + "\"", pos);
  }
  pos += lit.size();
}

}  // namespace

EnriquesDiagram parse(std::string_view text) {
  std::size_t pos = 0;
  expect(text, pos, "n=");
  const long n = parse_int(text, pos, "n");
  expect(text, pos, ";chi=");

  std::vector<Symbol> members;
  if (pos < text.size()) {
    for (;;) {
      const std::size_t sym_at = pos;
      const char k = text[pos];
      if (k != 'e' && k != 'v') {
        throw ParseError("expected symbol ('e<i>' or 'v<i>')", pos);
      }
      ++pos;
      const long index = parse_int(text, pos, "symbol index");
      const Symbol s{k == 'e' ? SymbolKind::Edge : SymbolKind::Vertex,
                     static_cast<int>(index)};
      for (const Symbol seen : members) {
        if (seen == s) {
          throw ParseError("duplicate symbol " + s.name(), sym_at);
        }
      }
      members.push_back(s);
      if (pos == text.size()) break;
      if (text[pos] != ',') {
        throw ParseError("expected ',' or end of input", pos);
      }
      ++pos;
      if (pos == text.size()) {
        throw ParseError("trailing ',' without a symbol", pos);
      }
    }
  }
  return EnriquesDiagram(
      Code::validate(static_cast<int>(n), std::move(members)));
}

std::string format(const EnriquesDiagram& d) { return d.key(); }

}  // namespace enriques
