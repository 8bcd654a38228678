#pragma once

// Nerve of a finite group: one vertex, n-simplices the n-tuples of elements.

#include <span>
#include <vector>

#include "kanact/groups.hpp"
#include "kanact/simplicial_set.hpp"

namespace kanact {

/// Generators are tuples of non-identity elements named "g1.g2...", the vertex
/// is "phi". d_0 drops g1, d_n drops gn, inner faces multiply neighbours.
SSetPresentation nerve_of_group(const FiniteGroup& q, int max_dim);

/// Full element tuple of any simplex of nerve_of_group(q, .).
std::vector<Index> nerve_tuple(const FiniteGroup& q, const SSetPresentation& nerve,
                               const SimplexRef& x);
/// Normal form of an arbitrary element tuple.
SimplexRef nerve_simplex(const FiniteGroup& q, const SSetPresentation& nerve,
                         std::span<const Index> tuple);

/// Entrywise action of an automorphism of q on its nerve.
SimplicialMap nerve_map(const FiniteGroup& q, const SSetPresentation& nerve,
                        std::span<const Index> automorphism);

}  // namespace kanact
