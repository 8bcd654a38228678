#pragma once

// Regular covers of one-vertex complexes, group actions on them and the
// crossed homomorphisms those actions produce.

#include <vector>

#include "kanact/groups.hpp"
#include "kanact/pi_one.hpp"
#include "kanact/report.hpp"
#include "kanact/simplicial_set.hpp"

namespace kanact {

/// Total generator (x, a) has index x * |Q| + a and is named "x@a".
struct RegularCover {
  SSetPresentation base;
  QuotientMap q;
  SSetPresentation total;

  Index fibre_size() const { return q.group.order(); }
  SimplexRef lift(const SimplexRef& x, Index alpha) const {
    return SimplexRef{x.dim, x.degeneracy_mask, x.generator * fibre_size() + alpha};
  }
  SimplexRef project(const SimplexRef& b) const {
    return SimplexRef{b.dim, b.degeneracy_mask, b.generator / fibre_size()};
  }
  Index fibre(const SimplexRef& b) const { return b.generator % fibre_size(); }
  /// Right deck action b . beta.
  SimplexRef deck(const SimplexRef& b, Index beta) const {
    return lift(project(b), q.group.multiply(fibre(b), beta));
  }
};

/// d_n (x, a) = (d_n x, edge_class(x)^{-1} a), other faces keep a.
RegularCover build_cover(const SSetPresentation& k, const QuotientMap& q);

struct CoveringReport {
  int up_to_dim = 0;
  std::size_t horns_checked = 0;
  std::size_t lifts_checked = 0;
  std::vector<std::string> violations;
  KanReport total_kan;
  bool ok() const { return violations.empty() && total_kan.ok(); }
};

/// Every horn of the total over a filled base horn lifts uniquely per base
/// filler; the total is Kan in the same range.
CoveringReport verify_covering(const RegularCover& c, int up_to_dim);

/// maps[g] is the automorphism of X for element g.
struct SimplicialAction {
  FiniteGroup group;
  std::vector<SimplicialMap> maps;

  SimplexRef act(Index g, const SimplexRef& x) const { return maps[g](x); }
};

/// Throws InvariantViolation("equivariance of faces") if a map breaks a face
/// relation, NotAnAction if the maps fail to form an action.
void verify_action(const SSetPresentation& x, const SimplicialAction& a);

/// G acting on nerve(Q) entrywise through phi : G -> Aut(Q).
SimplicialAction nerve_action(const FiniteGroup& q, const SSetPresentation& nerve,
                              const FiniteGroup& g, const AutomorphismAction& phi);

struct LiftedAction {
  SimplicialAction base;
  AutomorphismAction star;
  SimplicialAction total;
};

/// g (x, a) = (g x, g_*(a)).
LiftedAction lift_action(const RegularCover& c, const SimplicialAction& a);

/// r_b on G_{p(b)}: g b = b . r_b(g).
CrossedHom crossed_hom_at(const RegularCover& c, const LiftedAction& a, const SimplexRef& b);

CheckReport verify_rb_lemmas(const RegularCover& c, const LiftedAction& a, int up_to_dim);

struct FixedData {
  SSetPresentation e;
  SSetPresentation k_g;
  std::vector<Index> gamma;
  std::vector<std::vector<bool>> e_members;
  std::vector<std::vector<bool>> k_g_members;
};

FixedData fixed_data(const RegularCover& c, const LiftedAction& a);

/// Right action of G x| Q on the total, b . [g, a] = (g^{-1} b) . a, with the
/// standard L = Q x| G and the convention adapter.
struct CoverSemidirectAction {
  RightSemidirectProduct right;
  SemidirectProduct l;
  Permutation adapter;
};

CoverSemidirectAction semidirect_action_on_cover(const RegularCover& c, const LiftedAction& a);
SimplexRef act_right(const RegularCover& c, const LiftedAction& a,
                     const CoverSemidirectAction& s, const SimplexRef& b, Index element);
/// Isotropy at b, mapped into L and sorted.
std::vector<Index> isotropy_in_l(const RegularCover& c, const LiftedAction& a,
                                 const CoverSemidirectAction& s, const SimplexRef& b);
/// Right action axioms and isotropy = graph of r_b for every b up to up_to_dim.
CheckReport verify_semidirect_action(const RegularCover& c, const LiftedAction& a,
                                     const CoverSemidirectAction& s, int up_to_dim);

}  // namespace kanact
