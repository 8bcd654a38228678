#pragma once

// Executable checks of the extension, realization and fixed point results on
// concrete instances. Hypotheses are gated separately from conclusions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kanact/covering.hpp"
#include "kanact/groups.hpp"
#include "kanact/report.hpp"
#include "kanact/simplicial_set.hpp"

namespace kanact {

struct CheckLine {
  std::string name;
  Outcome outcome = Outcome::pass;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  std::vector<CheckLine> lines;
  /// Optional side-by-side table; first row is the header.
  std::vector<std::vector<std::string>> table;

  void hypothesis(std::string name, bool holds, std::string detail = "");
  void conclusion(std::string name, bool holds, std::string detail = "");
  void conclusion(const CheckReport& check);
  bool hypotheses_hold() const;
  /// fail beats hypothesis_failed beats pass.
  Outcome outcome() const;
};

Outcome combine(const std::vector<TheoremReport>& reports);

/// L = Q^op x| G acting on the cover by Psi(n, x) = psi(n) o T(x), where
/// psi(n) is the deck transformation b -> b.n. Using Q^op makes the right
/// deck action a left action of L; for abelian Q it is Q x| G itself.
struct ExtensionAction {
  SemidirectProduct l;
  std::vector<SimplicialMap> psi;

  SimplexRef act(Index element, const SimplexRef& b) const { return psi[element](b); }
};

/// Throws GlueFailure when T(x) psi(n) != psi(x_* n) T(x) somewhere.
ExtensionAction build_extension_action(const RegularCover& c, const LiftedAction& a);

/// Multiplicativity over all of L, restrictions to Q and G, and equivariance
/// of the projection.
TheoremReport verify_extension_action(const RegularCover& c, const LiftedAction& a,
                                      const ExtensionAction& e);

/// f -> (r_x(f)^{-1}, f) maps G_{p(x)} isomorphically onto L_x for every
/// simplex x up to up_to_dim.
TheoremReport verify_isotropy_iso(const RegularCover& c, const LiftedAction& a,
                                  const ExtensionAction& e, int up_to_dim);

struct Realization {
  TheoremReport report;
  std::size_t y_vertices = 0;
  std::size_t quotient_vertices = 0;
  SSetPresentation quotient;
};

/// Default cap on the number of simplices of Y in the top dimension.
inline constexpr std::size_t kRealizationLimit = 2000000;

/// Y = product of |G| copies of the cover, indexed by G. Sigma_s(chi)(z) =
/// chi(z).phi(z)(s), J_x(chi)(z) = chi(zx). Throws TooLarge.
Realization realize_extension(const FiniteGroup& q, const FiniteGroup& g,
                              const AutomorphismAction& phi, const SSetPresentation& k,
                              const QuotientMap& quotient,
                              std::size_t limit = kRealizationLimit);

enum class CaseSpace { base, cover };

struct TheoremCase {
  std::string name;
  SSetPresentation complex;
  QuotientMap quotient;
  /// Acts on the base, or directly on the space when action_on_space is set.
  SimplicialAction action;
  CaseSpace space = CaseSpace::base;
  bool action_on_space = false;
  int p = 2;
  int check_depth = 2;
  std::vector<std::string> theorems;
  /// Group and phi : G -> Aut(Q) for the realization check.
  std::optional<FiniteGroup> phi_group;
  std::optional<AutomorphismAction> phi;
};

/// Generators fixed by every element.
SSetPresentation fixed_subcomplex(const SSetPresentation& x, const SimplicialAction& a);

TheoremReport verify_smith_instance(const TheoremCase& c);
TheoremReport verify_fixed_point_cohomology(const TheoremCase& c);
TheoremReport verify_trivial_action_corollary(const TheoremCase& c);
TheoremReport verify_borel_corollary(const TheoremCase& c);
std::vector<TheoremReport> verify_corollaries(const TheoremCase& c);

TheoremReport verify_extension_theorem(const TheoremCase& c);
TheoremReport verify_realization_theorem(const TheoremCase& c);

/// Runs every theorem listed in the case: thm42, thm43, smith, thm52, cor54,
/// borel.
std::vector<TheoremReport> run_case(const TheoremCase& c);

}  // namespace kanact
