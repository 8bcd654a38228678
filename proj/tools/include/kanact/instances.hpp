#pragma once

// The small worked instances shared by selftest, the fixture writer and the
// acceptance run.

#include "kanact/theorems.hpp"

namespace kanact {

/// Z2 acting on nerve(Z3) by inversion, q = identity.
TheoremCase inversion_case(int truncation = 4);
/// Z2 acting on nerve(Z2 x Z2) by swapping the factors, q = identity.
TheoremCase swap_case(int truncation = 4);
/// Z2 acting trivially on nerve(Z3).
TheoremCase trivial_action_case(int truncation = 4);
/// Z2 acting on the universal cover of nerve(Z2) by its deck transformation.
/// No vertex is fixed.
TheoremCase deck_swap_case(int truncation = 4);
/// Universal cover of nerve(Z3) with the lifted inversion.
TheoremCase smith_inversion_case(int truncation = 4);
/// G = Z2 acting on Q = Z2 trivially, or on Q = Z3 by inversion; K = nerve(Q).
TheoremCase realization_case(bool inversion, int truncation = 2);

/// Identity quotient of nerve(q).
QuotientMap identity_quotient(const SSetPresentation& nerve, const FiniteGroup& q);
/// Quotient of nerve(Z_n) onto Z2 by reduction mod 2 (n even).
QuotientMap parity_quotient(const SSetPresentation& nerve, int n);

}  // namespace kanact
