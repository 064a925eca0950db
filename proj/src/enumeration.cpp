#include "enriques/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "enriques/errors.hpp"
#include "enriques/invariants.hpp"

namespace enriques {

mpz_class fibonacci(long k) {
  if (k < 0) throw DomainError("fibonacci(k) needs k >= 0");
  mpz_class r;
  mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

namespace {

struct Generator {
  int n;
  const std::function<void(const EnriquesDiagram&)>& fn;
  std::vector<char> edge_in, vert_in;  // by symbol index

  Generator(int n_, const std::function<void(const EnriquesDiagram&)>& fn_)
      : n(n_), fn(fn_),
        edge_in(static_cast<std::size_t>(n_), 0),
        vert_in(static_cast<std::size_t>(n_), 0) {}

  void emit() {
    std::vector<Symbol> members;
    for (int i = 2; i <= n - 2; ++i)
      if (edge_in[i]) members.push_back(edge(i));
    for (int i = 2; i <= n - 2; ++i)
      if (vert_in[i]) members.push_back(vertex(i));
    fn(EnriquesDiagram(Code::validate(n, std::move(members))));
  }

  // Would extending the current complexity-k code by the chosen decorations
  // of e_{k-1} / v_{k-1} satisfy the vertex rule at complexity k+1?
  bool extension_valid(int k, bool add_e, bool add_v) const {
    auto has_edge = [&](int i) { return i == k - 1 ? add_e : edge_in[i] != 0; };
    auto has_vert = [&](int i) { return i == k - 1 ? add_v : vert_in[i] != 0; };
    for (int i = 2; i <= k - 1; ++i) {
      if (!has_vert(i)) continue;
      if (!has_edge(i)) return false;
      if (i <= k - 2 && !has_edge(i + 1)) return false;
    }
    return true;
  }

  void grow(int k) {
    if (k == n) {
      emit();
      return;
    }
    // Completion rule: three extensions when v_{k-2} is neutral, otherwise
    // only the two that keep e_{k-1} straight.  Cross-derive the same set
    // from the validity condition and insist they agree.
    const bool last_breaking = vert_in[k - 2] != 0;
    const bool allow[4] = {extension_valid(k, false, false),   // -
                           extension_valid(k, true, false),    // e
                           extension_valid(k, false, true),    // v
                           extension_valid(k, true, true)};    // e+v
    const bool expect[4] = {!last_breaking, true, false, true};
    for (int c = 0; c < 4; ++c) {
      if (allow[c] != expect[c]) {
        throw std::logic_error("completion rule mismatch at complexity " +
                               std::to_string(k));
      }
    }
    if (!last_breaking) grow(k + 1);
    edge_in[k - 1] = 1;
    grow(k + 1);
    vert_in[k - 1] = 1;
    grow(k + 1);
    vert_in[k - 1] = 0;
    edge_in[k - 1] = 0;
  }
};

}  // namespace

void for_each_diagram(int n,
                      const std::function<void(const EnriquesDiagram&)>& fn) {
  require_complexity(n);
  Generator g(n, fn);
  g.grow(3);
}

std::vector<EnriquesDiagram> enumerate(int n) {
  std::vector<std::pair<std::string, EnriquesDiagram>> keyed;
  for_each_diagram(n, [&](const EnriquesDiagram& d) {
    keyed.emplace_back(d.key(), d);
  });
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<EnriquesDiagram> out;
  out.reserve(keyed.size());
  for (auto& kd : keyed) out.push_back(std::move(kd.second));
  return out;
}

namespace {

void track(const mpz_class& value, const std::string& key, bool first,
           mpz_class& min_v, std::vector<std::string>& min_keys,
           mpz_class& max_v, std::vector<std::string>& max_keys) {
  if (first || value < min_v) {
    min_v = value;
    min_keys.assign(1, key);
  } else if (value == min_v) {
    min_keys.push_back(key);
  }
  if (first || value > max_v) {
    max_v = value;
    max_keys.assign(1, key);
  } else if (value == max_v) {
    max_keys.push_back(key);
  }
}

}  // namespace

EnumerationStats stats(int n) {
  require_complexity(n);
  EnumerationStats s;
  s.n = n;
  s.degenerate_extremals = (n == 3);
  for_each_diagram(n, [&](const EnriquesDiagram& d) {
    const bool first = s.total == 0;
    ++s.total;
    if (d.vertex_breaking(n - 2)) {
      ++s.count_b;
    } else {
      ++s.count_a;
    }
    const MultiplicityProfile p = multiplicity_sequence(d);
    const std::string key = d.key();
    track(p.initial, key, first, s.min_m0, s.min_m0_achievers, s.max_m0,
          s.max_m0_achievers);
    track(p.milnor, key, first, s.min_milnor, s.min_milnor_achievers,
          s.max_milnor, s.max_milnor_achievers);
  });
  std::sort(s.min_m0_achievers.begin(), s.min_m0_achievers.end());
  std::sort(s.max_m0_achievers.begin(), s.max_m0_achievers.end());
  std::sort(s.min_milnor_achievers.begin(), s.min_milnor_achievers.end());
  std::sort(s.max_milnor_achievers.begin(), s.max_milnor_achievers.end());
  return s;
}

ComplexityBoundReport complexity_bound_check(int max_n) {
  require_complexity(max_n);
  ComplexityBoundReport rep;
  rep.max_n = max_n;
  rep.milnor_bound_ok = true;
  rep.multiplicity_bound_ok = true;

  const mpz_class mu_cap = 2 * max_n - 4;
  // milnor value -> (largest complexity attaining it, achievers there)
  std::map<mpz_class, std::pair<int, std::vector<std::string>>> best;

  for (int n = 3; n <= max_n && rep.witness.empty(); ++n) {
    const mpz_class fib_n = fibonacci(n);
    for_each_diagram(n, [&](const EnriquesDiagram& d) {
      if (!rep.witness.empty()) return;
      const MultiplicityProfile p = multiplicity_sequence(d);
      if (p.initial > fib_n) {
        rep.multiplicity_bound_ok = false;
        rep.witness = d.key() + " has m0 = " + p.initial.get_str() +
                      " > F_" + std::to_string(n) + " = " + fib_n.get_str();
        return;
      }
      if (p.milnor <= mu_cap) {
        auto& slot = best[p.milnor];
        if (slot.second.empty() || n > slot.first) {
          slot = {n, {d.key()}};
        } else if (n == slot.first) {
          slot.second.push_back(d.key());
        }
      }
    });
  }
  if (!rep.witness.empty()) return rep;

  for (mpz_class mu = 2; mu <= mu_cap; mu += 2) {
    const auto it = best.find(mu);
    const int expect_n = 2 + static_cast<int>(mpz_class(mu / 2).get_si());
    const std::string alpha_key = alpha(expect_n).key();
    if (it == best.end() || it->second.first != expect_n ||
        it->second.second != std::vector<std::string>{alpha_key}) {
      rep.milnor_bound_ok = false;
      rep.witness = "milnor " + mu.get_str() + " is not realized last by " +
                    alpha_key + " alone";
      return rep;
    }
  }
  for (const auto& [mu, slot] : best) {
    if (mpz_odd_p(mu.get_mpz_t())) {
      rep.milnor_bound_ok = false;
      rep.witness = "odd milnor number " + mu.get_str() + " observed at " +
                    slot.second.front();
      return rep;
    }
  }
  return rep;
}

}  // namespace enriques
