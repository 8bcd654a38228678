#include "kanact/groups.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>

#include "kanact/error.hpp"

namespace kanact {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> elements,
                         std::vector<std::vector<Index>> table)
    : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table)) {
  const auto n = static_cast<Index>(elements_.size());
  if (n == 0) throw Error(ErrorCode::InvariantViolation, "group has no elements");
  if (static_cast<Index>(table_.size()) != n) {
    throw Error(ErrorCode::InvariantViolation, "closure: table has wrong number of rows");
  }
  for (Index a = 0; a < n; ++a) {
    if (!lookup_.emplace(elements_[a], a).second) {
      throw Error(ErrorCode::InvariantViolation, "duplicate element name '" + elements_[a] + "'");
    }
    if (static_cast<Index>(table_[a].size()) != n) {
      throw Error(ErrorCode::InvariantViolation, "closure: table row has wrong length");
    }
    for (Index v : table_[a]) {
      if (v < 0 || v >= n) throw Error(ErrorCode::InvariantViolation, "closure");
    }
  }
  std::optional<Index> identity;
  for (Index e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::InvariantViolation, "identity");
  identity_ = *identity;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index ab = table_[a][b];
      for (Index c = 0; c < n; ++c) {
        if (table_[ab][c] != table_[a][table_[b][c]]) {
          throw Error(ErrorCode::InvariantViolation, "associativity");
        }
      }
    }
  }
  inverse_.assign(n, -1);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw Error(ErrorCode::InvariantViolation, "inverses");
  }
}

Index FiniteGroup::power(Index a, long long exponent) const {
  if (exponent < 0) {
    a = inverse(a);
    exponent = -exponent;
  }
  Index result = identity_;
  for (long long t = 0; t < exponent; ++t) result = multiply(result, a);
  return result;
}

int FiniteGroup::element_order(Index a) const {
  int k = 1;
  for (Index x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

std::optional<Index> FiniteGroup::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::require(std::string_view name) const {
  auto found = find(name);
  if (!found) {
    throw Error(ErrorCode::SchemaError,
                "unknown element '" + std::string(name) + "' of group " + name_);
  }
  return *found;
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < order(); ++a) {
    for (Index b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_p_group(int p) const {
  if (p < 2) return false;
  Index n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Index> FiniteGroup::generated_subgroup(std::span<const Index> generators) const {
  std::vector<char> seen(order(), 0);
  std::queue<Index> pending;
  seen[identity_] = 1;
  pending.push(identity_);
  while (!pending.empty()) {
    const Index a = pending.front();
    pending.pop();
    for (Index s : generators) {
      const Index b = multiply(a, s);
      if (!seen[b]) {
        seen[b] = 1;
        pending.push(b);
      }
    }
  }
  std::vector<Index> out;
  for (Index a = 0; a < order(); ++a) {
    if (seen[a]) out.push_back(a);
  }
  return out;
}

std::vector<Index> FiniteGroup::generating_set() const {
  std::vector<Index> gens;
  std::vector<Index> current = generated_subgroup(gens);
  for (Index a = 0; a < order() && static_cast<Index>(current.size()) < order(); ++a) {
    if (!std::binary_search(current.begin(), current.end(), a)) {
      gens.push_back(a);
      current = generated_subgroup(gens);
    }
  }
  return gens;
}

bool FiniteGroup::is_homomorphism_to(const FiniteGroup& target,
                                     std::span<const Index> images) const {
  if (static_cast<Index>(images.size()) != order()) return false;
  for (Index v : images) {
    if (v < 0 || v >= target.order()) return false;
  }
  for (Index a = 0; a < order(); ++a) {
    for (Index b = 0; b < order(); ++b) {
      if (images[multiply(a, b)] != target.multiply(images[a], images[b])) return false;
    }
  }
  return true;
}

void GroupHom::verify() const {
  if (!source.is_homomorphism_to(target, images)) {
    throw Error(ErrorCode::InvariantViolation,
                "homomorphism " + source.name() + " -> " + target.name());
  }
}

FiniteGroup trivial_group() { return FiniteGroup("1", {"e"}, {{0}}); }

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidIndex, "cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), std::move(names), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const Index nb = b.order();
  const Index n = a.order() * nb;
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x) {
    names.push_back("(" + a.element_name(x / nb) + "," + b.element_name(x % nb) + ")");
    for (Index y = 0; y < n; ++y) {
      table[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
    }
  }
  return FiniteGroup(a.name() + "x" + b.name(), std::move(names), std::move(table));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::BoundExceeded, "symmetric group degree must be 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto count = static_cast<Index>(perms.size());
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(count, std::vector<Index>(count));
  for (Index a = 0; a < count; ++a) {
    std::string name = "p";
    for (int v : perms[a]) name += static_cast<char>('0' + v);
    names.push_back(name);
    for (Index b = 0; b < count; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), c) -
                                       perms.begin());
    }
  }
  return FiniteGroup("S" + std::to_string(n), std::move(names), std::move(table));
}

FiniteGroup opposite_group(const FiniteGroup& g) {
  auto table = g.table();
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < g.order(); ++b) table[a][b] = g.multiply(b, a);
  }
  return FiniteGroup(g.name() + "^op", g.element_names(), std::move(table));
}

FiniteGroup subgroup(const FiniteGroup& g, std::span<const Index> members, std::string name) {
  std::unordered_map<Index, Index> position;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < members.size(); ++i) {
    position.emplace(members[i], static_cast<Index>(i));
    names.push_back(g.element_name(members[i]));
  }
  const auto n = static_cast<Index>(members.size());
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      auto it = position.find(g.multiply(members[a], members[b]));
      if (it == position.end()) {
        throw Error(ErrorCode::InvariantViolation, "subset is not closed under multiplication");
      }
      table[a][b] = it->second;
    }
  }
  return FiniteGroup(std::move(name), std::move(names), std::move(table));
}

std::vector<FiniteGroup> groups_up_to_order_six() {
  return {trivial_group(),  cyclic_group(2), cyclic_group(3),
          cyclic_group(4),  direct_product(cyclic_group(2), cyclic_group(2)),
          cyclic_group(5),  cyclic_group(6), symmetric_group(3)};
}

FiniteGroup group_from_spec(std::string_view spec) {
  auto parse_factor = [](std::string_view token) -> FiniteGroup {
    if (token == "1") return trivial_group();
    if (token.size() >= 2 && (token[0] == 'Z' || token[0] == 'S')) {
      int n = 0;
      auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), n);
      if (ec == std::errc() && ptr == token.data() + token.size() && n >= 1) {
        return token[0] == 'Z' ? cyclic_group(n) : symmetric_group(n);
      }
    }
    throw Error(ErrorCode::ParseError, "unknown group '" + std::string(token) + "'");
  };
  std::optional<FiniteGroup> result;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto end = std::min(spec.find('x', start), spec.size());
    FiniteGroup factor = parse_factor(spec.substr(start, end - start));
    result = result ? direct_product(*result, factor) : factor;
    start = end + 1;
  }
  return *result;
}

bool is_automorphism(const FiniteGroup& g, std::span<const Index> map) {
  if (!g.is_homomorphism_to(g, map)) return false;
  std::vector<char> hit(g.order(), 0);
  for (Index v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Permutation compose_maps(std::span<const Index> a, std::span<const Index> b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse_map(std::span<const Index> a) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<Index>(i);
  return out;
}

Permutation identity_map(Index n) {
  Permutation out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<Permutation> automorphisms(const FiniteGroup& q, Index bound) {
  if (q.order() > bound) {
    throw Error(ErrorCode::BoundExceeded, "automorphism search limited to order " +
                                              std::to_string(bound) + ", got " +
                                              std::to_string(q.order()));
  }
  const auto gens = q.generating_set();
  std::vector<Permutation> found;
  std::vector<Index> images(gens.size());

  auto extend = [&]() -> std::optional<Permutation> {
    Permutation map(q.order(), -1);
    map[q.identity()] = q.identity();
    std::queue<Index> pending;
    pending.push(q.identity());
    while (!pending.empty()) {
      const Index a = pending.front();
      pending.pop();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Index b = q.multiply(a, gens[s]);
        const Index image = q.multiply(map[a], images[s]);
        if (map[b] < 0) {
          map[b] = image;
          pending.push(b);
        } else if (map[b] != image) {
          return std::nullopt;
        }
      }
    }
    if (!is_automorphism(q, map)) return std::nullopt;
    return map;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (auto map = extend()) found.push_back(std::move(*map));
      return;
    }
    const int order = q.element_order(gens[depth]);
    for (Index c = 0; c < q.order(); ++c) {
      if (q.element_order(c) != order) continue;
      images[depth] = c;
      self(self, depth + 1);
    }
  };
  search(search, 0);
  std::sort(found.begin(), found.end());
  return found;
}

void verify_automorphism_action(const FiniteGroup& n, const FiniteGroup& g,
                                const AutomorphismAction& phi) {
  if (static_cast<Index>(phi.phi.size()) != g.order()) {
    throw Error(ErrorCode::NotAnAction, "one automorphism per element of " + g.name() + " required");
  }
  for (Index x = 0; x < g.order(); ++x) {
    if (static_cast<Index>(phi.phi[x].size()) != n.order() || !is_automorphism(n, phi.phi[x])) {
      throw Error(ErrorCode::NotAnAction,
                  "image of " + g.element_name(x) + " is not an automorphism of " + n.name());
    }
  }
  for (Index x = 0; x < g.order(); ++x) {
    for (Index y = 0; y < g.order(); ++y) {
      if (phi.phi[g.multiply(x, y)] != compose_maps(phi.phi[x], phi.phi[y])) {
        throw Error(ErrorCode::NotAnAction, "phi(" + g.element_name(x) + g.element_name(y) +
                                                ") != phi(" + g.element_name(x) + ")phi(" +
                                                g.element_name(y) + ")");
      }
    }
  }
}

SemidirectProduct build_semidirect(const FiniteGroup& n, const FiniteGroup& g,
                                   const AutomorphismAction& phi) {
  verify_automorphism_action(n, g, phi);
  const Index nn = n.order();
  const Index total = nn * g.order();
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(total, std::vector<Index>(total));
  for (Index l = 0; l < total; ++l) {
    const Index a = l % nn;
    const Index x = l / nn;
    names.push_back("(" + n.element_name(a) + "," + g.element_name(x) + ")");
    for (Index m = 0; m < total; ++m) {
      const Index b = m % nn;
      const Index y = m / nn;
      table[l][m] = g.multiply(x, y) * nn + n.multiply(a, phi.phi[x][b]);
    }
  }
  FiniteGroup group(n.name() + "x|" + g.name(), std::move(names), std::move(table));
  return SemidirectProduct{n, g, phi, std::move(group)};
}

RightSemidirectProduct build_right_semidirect(const FiniteGroup& g, const FiniteGroup& q,
                                              const AutomorphismAction& phi) {
  verify_automorphism_action(q, g, phi);
  const Index nq = q.order();
  const Index total = nq * g.order();
  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(total, std::vector<Index>(total));
  for (Index l = 0; l < total; ++l) {
    const Index x = l / nq;
    const Index a = l % nq;
    names.push_back("[" + g.element_name(x) + "," + q.element_name(a) + "]");
    for (Index m = 0; m < total; ++m) {
      const Index y = m / nq;
      const Index b = m % nq;
      const Index twisted = phi.phi[g.inverse(y)][a];
      table[l][m] = g.multiply(x, y) * nq + q.multiply(twisted, b);
    }
  }
  FiniteGroup group(g.name() + "|x" + q.name(), std::move(names), std::move(table));
  return RightSemidirectProduct{g, q, phi, std::move(group)};
}

Permutation semidirect_convention_isomorphism(const RightSemidirectProduct& right,
                                              const SemidirectProduct& standard) {
  Permutation map(right.group.order());
  for (Index l = 0; l < right.group.order(); ++l) {
    const Index x = right.acting_part(l);
    const Index a = right.normal_part(l);
    map[l] = standard.element(right.phi.phi[x][a], x);
  }
  return map;
}

bool is_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b, std::span<const Index> map) {
  if (a.order() != b.order() || !a.is_homomorphism_to(b, map)) return false;
  std::set<Index> image(map.begin(), map.end());
  return static_cast<Index>(image.size()) == b.order();
}

Index CrossedHom::at(Index g) const {
  auto it = std::find(domain.begin(), domain.end(), g);
  if (it == domain.end()) throw Error(ErrorCode::InvalidIndex, "element outside crossed-hom domain");
  return values[static_cast<std::size_t>(it - domain.begin())];
}

bool satisfies_crossed_relation(const FiniteGroup& g, const FiniteGroup& q, const CrossedHom& r) {
  std::unordered_map<Index, Index> value;
  for (std::size_t i = 0; i < r.domain.size(); ++i) value.emplace(r.domain[i], r.values[i]);
  for (Index a : r.domain) {
    for (Index b : r.domain) {
      auto it = value.find(g.multiply(a, b));
      if (it == value.end()) return false;
      if (it->second != q.multiply(value.at(a), r.action.phi[a][value.at(b)])) return false;
    }
  }
  return true;
}

std::vector<Index> graph_of_crossed_hom(const CrossedHom& r, const SemidirectProduct& l) {
  std::vector<Index> graph;
  for (std::size_t i = 0; i < r.domain.size(); ++i) {
    graph.push_back(l.element(r.values[i], r.domain[i]));
  }
  std::sort(graph.begin(), graph.end());
  for (Index a : graph) {
    for (Index b : graph) {
      if (!std::binary_search(graph.begin(), graph.end(), l.group.multiply(a, b))) {
        throw Error(ErrorCode::NotCrossed, "graph is not closed under multiplication in " +
                                               l.group.name());
      }
    }
  }
  return graph;
}

}  // namespace kanact
