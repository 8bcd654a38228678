#pragma once

// Edge-path presentation of the fundamental group of a one-vertex complex and
// quotient maps of it onto finite groups.

#include <optional>
#include <vector>

#include "kanact/groups.hpp"
#include "kanact/simplicial_set.hpp"

namespace kanact {

/// An edge generator, or nullopt for the degenerate edge s0(phi).
using EdgeLetter = std::optional<Index>;

/// [d1 z] = [d0 z][d2 z] for a nondegenerate 2-generator z.
struct Relator {
  Index simplex = 0;
  EdgeLetter lhs;
  EdgeLetter first;
  EdgeLetter second;
};

struct Pi1Presentation {
  Index generator_count = 0;
  std::vector<Relator> relators;
};

/// Throws NotReduced unless K has one vertex and max_dim >= 2.
Pi1Presentation pi1_presentation(const SSetPresentation& k);
std::string relator_text(const SSetPresentation& k, const Relator& r);

/// Surjection from pi_1(K) onto a finite group, given on edge generators.
struct QuotientMap {
  FiniteGroup group;
  std::vector<Index> images;

  Index image(EdgeLetter letter) const { return letter ? images[*letter] : group.identity(); }
};

/// Checks every relator (RelatorViolation) and surjectivity (InvariantViolation).
QuotientMap make_quotient(const SSetPresentation& k, FiniteGroup q, std::vector<Index> images);

/// Image of d0^{n-1} x, with degenerate edges sent to the identity.
Index edge_class(const SSetPresentation& k, const QuotientMap& q, const SimplexRef& x);

enum class NerveConvention { direct, inverse };

/// Quotient of nerve(g) through a homomorphism f : g -> r, sending the edge
/// (a) to f(a) (direct) or f(a)^{-1} (inverse). The direct form respects the
/// relators only when the image of f is abelian.
QuotientMap nerve_quotient(const SSetPresentation& nerve, const FiniteGroup& g,
                           const FiniteGroup& r, std::span<const Index> f,
                           NerveConvention convention = NerveConvention::direct);

/// Automorphism q_A of Q with q(A x) = q_A(q(x)) on every edge generator.
/// Without a candidate the automorphisms of Q are searched; throws NoDescent
/// when none fits.
Permutation induced_automorphism(const SSetPresentation& k, const SimplicialMap& a,
                                 const QuotientMap& q,
                                 const std::optional<Permutation>& candidate = std::nullopt);

}  // namespace kanact
