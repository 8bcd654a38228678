#pragma once

// Finite groups given by multiplication tables, homomorphisms, automorphism
// enumeration, semidirect products and crossed homomorphisms.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kanact/operator_calculus.hpp"

namespace kanact {

/// A map of a finite set onto itself, stored as the image of each index.
using Permutation = std::vector<Index>;

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup("1", {"e"}, {{0}}) {}
  /// Verifies closure, associativity, identity and inverses; throws
  /// InvariantViolation naming the first failed axiom.
  FiniteGroup(std::string name, std::vector<std::string> elements,
              std::vector<std::vector<Index>> table);

  const std::string& name() const { return name_; }
  Index order() const { return static_cast<Index>(elements_.size()); }
  Index identity() const { return identity_; }
  Index multiply(Index a, Index b) const { return table_[a][b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index power(Index a, long long exponent) const;
  int element_order(Index a) const;

  const std::string& element_name(Index a) const { return elements_[a]; }
  const std::vector<std::string>& element_names() const { return elements_; }
  const std::vector<std::vector<Index>>& table() const { return table_; }
  std::optional<Index> find(std::string_view name) const;
  Index require(std::string_view name) const;

  bool is_abelian() const;
  /// Order is a power of p (the trivial group counts).
  bool is_p_group(int p) const;

  /// Subgroup generated by the given elements, sorted ascending.
  std::vector<Index> generated_subgroup(std::span<const Index> generators) const;
  /// A deterministic small generating set (greedy, ascending indices).
  std::vector<Index> generating_set() const;

  bool is_homomorphism_to(const FiniteGroup& target, std::span<const Index> images) const;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<Index>> table_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
  std::unordered_map<std::string, Index> lookup_;
};

FiniteGroup trivial_group();
/// Z/n with elements named "0".."n-1".
FiniteGroup cyclic_group(int n);
/// Elements named "(a,b)"; index = a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Permutations of {0..n-1} in lexicographic order, composed as functions
/// (p*q)(i) = p(q(i)).
FiniteGroup symmetric_group(int n);
/// Same elements, multiplication reversed.
FiniteGroup opposite_group(const FiniteGroup& g);
/// Induced table on a subset closed under multiplication; the result's
/// element i is members[i].
FiniteGroup subgroup(const FiniteGroup& g, std::span<const Index> members, std::string name);
/// Every group of order <= 6 up to isomorphism: 1, Z2, Z3, Z4, Z2xZ2, Z5,
/// Z6, S3.
std::vector<FiniteGroup> groups_up_to_order_six();
/// Parses "1", "Z<n>", "Z<n>xZ<m>[x...]", "S<n>".
FiniteGroup group_from_spec(std::string_view spec);

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Index> images;

  /// Throws InvariantViolation unless images respect both tables.
  void verify() const;
};

/// Automorphism: a permutation of elements respecting the table.
bool is_automorphism(const FiniteGroup& g, std::span<const Index> map);
/// Composite a o b as maps.
Permutation compose_maps(std::span<const Index> a, std::span<const Index> b);
Permutation inverse_map(std::span<const Index> a);
Permutation identity_map(Index n);

/// Default cap on |Q| for the exhaustive automorphism search.
inline constexpr Index kAutomorphismSearchBound = 24;

/// All automorphisms, sorted lexicographically, by exhaustive search over
/// generator images. Throws BoundExceeded when |Q| > bound.
std::vector<Permutation> automorphisms(const FiniteGroup& q, Index bound = kAutomorphismSearchBound);

/// Action of G on N by automorphisms: phi[x] is the automorphism for x in G.
struct AutomorphismAction {
  std::vector<Permutation> phi;
};

/// Throws NotAnAction unless every phi[x] is an automorphism of N and
/// phi(xy) = phi(x) o phi(y).
void verify_automorphism_action(const FiniteGroup& n, const FiniteGroup& g,
                                const AutomorphismAction& phi);

/// N x| G with (a, x)(b, y) = (a * phi(x)(b), xy). Element (a, x) has index
/// x * |N| + a and is named "(a,x)".
struct SemidirectProduct {
  FiniteGroup n;
  FiniteGroup g;
  AutomorphismAction phi;
  FiniteGroup group;

  Index element(Index a, Index x) const { return x * n.order() + a; }
  Index normal_part(Index l) const { return l % n.order(); }
  Index projection(Index l) const { return l / n.order(); }
  Index inclusion(Index a) const { return element(a, g.identity()); }
  Index section(Index x) const { return element(n.identity(), x); }
};

SemidirectProduct build_semidirect(const FiniteGroup& n, const FiniteGroup& g,
                                   const AutomorphismAction& phi);

/// The other convention, G x| Q with (g, a)(h, b) = (gh, h^{-1}_*(a) b).
/// Element (g, a) has index g * |Q| + a and is named "[g,a]".
struct RightSemidirectProduct {
  FiniteGroup g;
  FiniteGroup q;
  AutomorphismAction phi;
  FiniteGroup group;

  Index element(Index x, Index a) const { return x * q.order() + a; }
  Index acting_part(Index l) const { return l / q.order(); }
  Index normal_part(Index l) const { return l % q.order(); }
};

RightSemidirectProduct build_right_semidirect(const FiniteGroup& g, const FiniteGroup& q,
                                              const AutomorphismAction& phi);

/// Isomorphism [g, a] -> (g_*(a), g) from the right convention onto the
/// standard one built from the same data; images indexed by right elements.
Permutation semidirect_convention_isomorphism(const RightSemidirectProduct& right,
                                              const SemidirectProduct& standard);

/// Checks that `map` is a bijective homomorphism a -> b.
bool is_group_isomorphism(const FiniteGroup& a, const FiniteGroup& b, std::span<const Index> map);

/// r : domain -> Q with r(gh) = r(g) g_*(r(h)). values[i] is r(domain[i]).
struct CrossedHom {
  std::vector<Index> domain;
  std::vector<Index> values;
  AutomorphismAction action;

  Index at(Index g) const;
};

/// True iff the crossed relation holds on the domain.
bool satisfies_crossed_relation(const FiniteGroup& g, const FiniteGroup& q, const CrossedHom& r);

/// {(r(g), g)} inside L, sorted. Throws NotCrossed if it is not closed under
/// L's multiplication.
std::vector<Index> graph_of_crossed_hom(const CrossedHom& r, const SemidirectProduct& l);

}  // namespace kanact
