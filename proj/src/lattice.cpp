#include "enriques/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "enriques/enumeration.hpp"
#include "enriques/errors.hpp"
#include "enriques/invariants.hpp"

namespace enriques {

namespace {

void require_same_complexity(const EnriquesDiagram& a,
                             const EnriquesDiagram& b) {
  if (a.complexity() != b.complexity()) {
    throw DomainError("diagrams of different complexities (" +
                      std::to_string(a.complexity()) + " vs " +
                      std::to_string(b.complexity()) +
                      ") are not comparable");
  }
}

}  // namespace

bool leq(const EnriquesDiagram& a, const EnriquesDiagram& b) {
  require_same_complexity(a, b);
  const auto& am = a.code().members();
  const auto& bm = b.code().members();
  return std::includes(bm.begin(), bm.end(), am.begin(), am.end());
}

EnriquesDiagram meet(const EnriquesDiagram& a, const EnriquesDiagram& b) {
  require_same_complexity(a, b);
  const auto& am = a.code().members();
  const auto& bm = b.code().members();
  std::vector<Symbol> out;
  std::set_intersection(am.begin(), am.end(), bm.begin(), bm.end(),
                        std::back_inserter(out));
  return EnriquesDiagram(Code::validate(a.complexity(), std::move(out)));
}

EnriquesDiagram join(const EnriquesDiagram& a, const EnriquesDiagram& b) {
  require_same_complexity(a, b);
  const auto& am = a.code().members();
  const auto& bm = b.code().members();
  std::vector<Symbol> out;
  std::set_union(am.begin(), am.end(), bm.begin(), bm.end(),
                 std::back_inserter(out));
  return EnriquesDiagram(Code::validate(a.complexity(), std::move(out)));
}

EnriquesDiagram dual(const EnriquesDiagram& d) {
  const int n = d.complexity();
  std::vector<Symbol> members;
  for (int k = 2; k <= n - 2; ++k) {
    if (!d.vertex_breaking(n - k)) members.push_back(edge(k));
  }
  for (int k = 2; k <= n - 2; ++k) {
    if (!d.edge_straight(n - k)) members.push_back(vertex(k));
  }
  return EnriquesDiagram(Code::validate(n, std::move(members)));
}

bool self_dual(const EnriquesDiagram& d) { return dual(d) == d; }

std::vector<std::pair<Symbol, EnriquesDiagram>> cover_successors(
    const EnriquesDiagram& d) {
  const int n = d.complexity();
  const Code& c = d.code();
  std::vector<std::pair<Symbol, EnriquesDiagram>> out;
  for (const Symbol s : symbol_set(n)) {
    if (c.contains(s)) continue;
    if (s.kind == SymbolKind::Vertex) {
      // The enlarged code is valid iff the new breaking vertex already has
      // its straight edges in place.
      if (!c.contains_edge(s.index)) continue;
      if (s.index <= n - 3 && !c.contains_edge(s.index + 1)) continue;
    }
    std::vector<Symbol> members = c.members();
    members.push_back(s);
    out.emplace_back(
        s, EnriquesDiagram(Code::validate(n, std::move(members))));
  }
  return out;
}

int HasseGraph::index_of(const std::string& key) const {
  const auto it = std::lower_bound(
      nodes.begin(), nodes.end(), key,
      [](const EnriquesDiagram& d, const std::string& k) { return d.key() < k; });
  if (it == nodes.end() || it->key() != key) return -1;
  return static_cast<int>(it - nodes.begin());
}

HasseGraph hasse(int n, int max_n) {
  require_complexity(n);
  if (n > max_n) {
    throw ResourceError("hasse(" + std::to_string(n) + ") exceeds the bound " +
                        std::to_string(max_n) +
                        "; the node count grows like F_{2n-4} - raise the "
                        "bound explicitly if you mean it");
  }
  HasseGraph g;
  g.complexity = n;
  g.nodes = enumerate(n);
  std::unordered_map<std::string, int> index;
  index.reserve(g.nodes.size() * 2);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    index.emplace(g.nodes[i].key(), static_cast<int>(i));
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& [label, upper] : cover_successors(g.nodes[i])) {
      const auto it = index.find(upper.key());
      if (it == index.end()) {
        throw std::logic_error("cover of an enumerated diagram not found");
      }
      g.edges.push_back({static_cast<int>(i), it->second, label});
    }
  }
  return g;
}

std::string to_dot(const HasseGraph& g) {
  std::string out = "digraph enriques_" + std::to_string(g.complexity) + " {\n";
  out += "  rankdir=BT;\n";
  std::vector<std::string> keys(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    keys[i] = g.nodes[i].key();
    const MultiplicityProfile p = multiplicity_sequence(g.nodes[i]);
    out += "  \"" + keys[i] + "\" [m0=" + p.initial.get_str() +
           ", milnor=" + p.milnor.get_str();
    if (self_dual(g.nodes[i])) out += ", selfdual=true";
    out += "];\n";
  }
  for (const HasseGraph::Edge& e : g.edges) {
    out += "  \"" + keys[e.lower] + "\" -> \"" + keys[e.upper] +
           "\" [label=\"" + e.label.name() + "\"];\n";
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Birkhoff structure.
// ---------------------------------------------------------------------------

FencePoset::FencePoset(int n) : n_(n), elements_(symbol_set(n)) {}

bool FencePoset::leq(Symbol a, Symbol b) const {
  if (a == b) return true;
  return a.kind == SymbolKind::Edge && b.kind == SymbolKind::Vertex &&
         (a.index == b.index || a.index == b.index + 1);
}

std::vector<Symbol> FencePoset::lower_covers(Symbol s) const {
  if (s.kind == SymbolKind::Edge) return {};
  std::vector<Symbol> out{edge(s.index)};
  if (s.index <= n_ - 3) out.push_back(edge(s.index + 1));
  return out;
}

bool FencePoset::hereditary(const std::vector<Symbol>& subset) const {
  std::vector<Symbol> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  auto has = [&](Symbol s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };
  for (const Symbol s : sorted) {
    for (const Symbol below : lower_covers(s)) {
      if (!has(below)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Symbol>> FencePoset::hereditary_subsets(
    int max_n) const {
  if (n_ > max_n) {
    throw ResourceError("hereditary_subsets scans 2^" +
                        std::to_string(2 * (n_ - 3)) +
                        " candidate masks for n=" + std::to_string(n_) +
                        "; raise the bound explicitly if you mean it");
  }
  const int m = static_cast<int>(elements_.size());
  const int half = m / 2;  // edges occupy bits 0..half-1, vertices the rest
  // required[t]: bits that must be present when element t is.
  std::vector<std::uint32_t> required(static_cast<std::size_t>(m), 0);
  for (int t = half; t < m; ++t) {
    for (const Symbol below : lower_covers(elements_[t])) {
      required[t] |= 1u << (below.index - 2);
    }
  }
  std::vector<std::vector<Symbol>> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int t = half; t < m && ok; ++t) {
      if ((mask >> t) & 1u) ok = (mask & required[t]) == required[t];
    }
    if (!ok) continue;
    std::vector<Symbol> subset;
    for (int t = 0; t < m; ++t) {
      if ((mask >> t) & 1u) subset.push_back(elements_[t]);
    }
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> FencePoset::automorphisms() const {
  const int m = static_cast<int>(elements_.size());
  // Cover digraph, edges pointing upward (edge-symbol -> vertex-symbol).
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  std::vector<int> out_deg(m, 0), in_deg(m, 0);
  for (int t = 0; t < m; ++t) {
    for (const Symbol below : lower_covers(elements_[t])) {
      const auto it =
          std::lower_bound(elements_.begin(), elements_.end(), below);
      const int b = static_cast<int>(it - elements_.begin());
      adj[b][t] = 1;
      ++out_deg[b];
      ++in_deg[t];
    }
  }
  std::vector<std::vector<int>> found;
  std::vector<int> image(m, -1);
  std::vector<char> used(m, 0);
  auto backtrack = [&](auto&& self, int t) -> void {
    if (t == m) {
      found.push_back(image);
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (used[c] || in_deg[c] != in_deg[t] || out_deg[c] != out_deg[t])
        continue;
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) {
        ok = adj[s][t] == adj[image[s]][c] && adj[t][s] == adj[c][image[s]];
      }
      if (!ok) continue;
      image[t] = c;
      used[c] = 1;
      self(self, t + 1);
      used[c] = 0;
      image[t] = -1;
    }
  };
  backtrack(backtrack, 0);
  return found;
}

FencePoset sup_irreducibles(int n) { return FencePoset(n); }

std::vector<EnriquesDiagram> sup_irreducible_diagrams(int n) {
  const FencePoset fence(n);
  std::vector<EnriquesDiagram> out;
  for (const Symbol s : fence.elements()) {
    std::vector<Symbol> members = fence.lower_covers(s);
    members.push_back(s);
    out.push_back(EnriquesDiagram(Code::validate(n, std::move(members))));
  }
  return out;
}

std::vector<Symbol> birkhoff(const EnriquesDiagram& d) {
  const std::vector<Symbol>& members = d.code().members();
  if (!FencePoset(d.complexity()).hereditary(members)) {
    throw std::logic_error("valid code is not down-closed in the fence: " +
                           d.key());
  }
  return members;
}

// ---------------------------------------------------------------------------
// Uniqueness of the duality.
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> order_reversing_bijections_exhaustive(
    int n, int max_n) {
  require_complexity(n);
  if (n > max_n) {
    throw ResourceError(
        "exhaustive order-reversing search is factorial-flavoured; n=" +
        std::to_string(n) + " exceeds the bound " + std::to_string(max_n));
  }
  const std::vector<EnriquesDiagram> all = enumerate(n);
  const int count = static_cast<int>(all.size());
  std::vector<std::vector<char>> le(count, std::vector<char>(count, 0));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) le[i][j] = leq(all[i], all[j]) ? 1 : 0;
  }
  // An order-reversing bijection sends an element whose code has k symbols
  // to one with 2(n-3) - k: saturated chains all add one symbol per step.
  const int full = 2 * (n - 3);
  std::vector<int> rank(count);
  for (int i = 0; i < count; ++i)
    rank[i] = static_cast<int>(all[i].code().size());

  std::vector<std::vector<int>> found;
  std::vector<int> image(count, -1);
  std::vector<char> used(count, 0);
  auto backtrack = [&](auto&& self, int i) -> void {
    if (i == count) {
      found.push_back(image);
      return;
    }
    for (int c = 0; c < count; ++c) {
      if (used[c] || rank[c] != full - rank[i]) continue;
      bool ok = true;
      for (int s = 0; s < i && ok; ++s) {
        ok = le[s][i] == le[c][image[s]] && le[i][s] == le[image[s]][c];
      }
      if (!ok) continue;
      image[i] = c;
      used[c] = 1;
      self(self, i + 1);
      used[c] = 0;
      image[i] = -1;
    }
  };
  backtrack(backtrack, 0);
  return found;
}

std::vector<std::vector<int>> order_reversing_bijections(int n, int max_n) {
  require_complexity(n);
  if (n <= 6) return order_reversing_bijections_exhaustive(n, 6);
  if (n > max_n) {
    throw ResourceError("order_reversing_bijections materializes E_n; n=" +
                        std::to_string(n) + " exceeds the bound " +
                        std::to_string(max_n));
  }
  // Birkhoff route: every order-reversing bijection is dual followed by a
  // lattice automorphism, and lattice automorphisms are exactly the maps
  // induced element-wise by automorphisms of the fence.
  const FencePoset fence(n);
  const std::vector<EnriquesDiagram> all = enumerate(n);
  std::unordered_map<std::string, int> index;
  index.reserve(all.size() * 2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    index.emplace(all[i].key(), static_cast<int>(i));
  }
  const auto& elems = fence.elements();
  auto element_index = [&](Symbol s) {
    return static_cast<int>(
        std::lower_bound(elems.begin(), elems.end(), s) - elems.begin());
  };
  std::vector<std::vector<int>> found;
  for (const std::vector<int>& sigma : fence.automorphisms()) {
    std::vector<int> image(all.size(), -1);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::vector<Symbol> mapped;
      for (const Symbol s : all[i].code().members()) {
        mapped.push_back(elems[sigma[element_index(s)]]);
      }
      const EnriquesDiagram shuffled(
          Code::validate(n, std::move(mapped)));
      const auto it = index.find(dual(shuffled).key());
      if (it == index.end()) {
        throw std::logic_error("automorphism image escaped the lattice");
      }
      image[i] = it->second;
    }
    found.push_back(std::move(image));
  }
  return found;
}

std::vector<EnriquesDiagram> self_duals(int n, int max_n) {
  require_complexity(n);
  if (n > max_n) {
    throw ResourceError("self_duals materializes E_n; n=" + std::to_string(n) +
                        " exceeds the bound " + std::to_string(max_n));
  }
  std::vector<EnriquesDiagram> out;
  for (const EnriquesDiagram& d : enumerate(n)) {
    if (self_dual(d)) out.push_back(d);
  }
  return out;
}

EnriquesDiagram self_dual_half(const EnriquesDiagram& d) {
  if (!self_dual(d)) {
    throw DomainError("self_dual_half is the halving map on self-dual "
                      "diagrams; " + d.key() + " is not self-dual");
  }
  const int n = d.complexity();
  const int h = n % 2 == 0 ? (n + 2) / 2 : (n + 3) / 2;
  std::vector<Symbol> members;
  for (const Symbol s : d.code().members()) {
    if (s.index <= h - 2) members.push_back(s);
  }
  return EnriquesDiagram(Code::validate(h, std::move(members)));
}

}  // namespace enriques
