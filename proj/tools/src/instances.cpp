#include "kanact/instances.hpp"

#include <numeric>

#include "kanact/nerve.hpp"

namespace kanact {

QuotientMap identity_quotient(const SSetPresentation& nerve, const FiniteGroup& q) {
  std::vector<Index> id(q.order());
  std::iota(id.begin(), id.end(), 0);
  return nerve_quotient(nerve, q, q, id);
}

QuotientMap parity_quotient(const SSetPresentation& nerve, int n) {
  std::vector<Index> f(n);
  for (int a = 0; a < n; ++a) f[a] = a % 2;
  return nerve_quotient(nerve, cyclic_group(n), cyclic_group(2), f);
}

namespace {

TheoremCase nerve_case(std::string name, const FiniteGroup& q, const AutomorphismAction& phi,
                       int truncation) {
  TheoremCase c;
  c.name = std::move(name);
  c.complex = nerve_of_group(q, truncation);
  c.quotient = identity_quotient(c.complex, q);
  c.action = nerve_action(q, c.complex, cyclic_group(2), phi);
  c.p = 2;
  c.check_depth = std::min(2, truncation - 1);
  return c;
}

}  // namespace

TheoremCase inversion_case(int truncation) {
  return nerve_case("inversion", cyclic_group(3), AutomorphismAction{{{0, 1, 2}, {0, 2, 1}}},
                    truncation);
}

TheoremCase swap_case(int truncation) {
  const auto z2 = cyclic_group(2);
  // (a,b) has index 2a + b.
  return nerve_case("swap", direct_product(z2, z2),
                    AutomorphismAction{{{0, 1, 2, 3}, {0, 2, 1, 3}}}, truncation);
}

TheoremCase trivial_action_case(int truncation) {
  return nerve_case("trivial", cyclic_group(3), AutomorphismAction{{{0, 1, 2}, {0, 1, 2}}},
                    truncation);
}

TheoremCase deck_swap_case(int truncation) {
  const auto z2 = cyclic_group(2);
  auto c = nerve_case("deck-swap", z2, AutomorphismAction{{{0, 1}, {0, 1}}}, truncation);
  const auto cover = build_cover(c.complex, c.quotient);
  SimplicialAction deck{z2, {identity_simplicial_map(cover.total), {}}};
  for (int n = 0; n <= cover.total.max_dim(); ++n) {
    std::vector<Index> images;
    for (Index s = 0; s < cover.total.generator_count(n); ++s) {
      images.push_back(cover.deck(SimplexRef::nondegenerate(n, s), 1).generator);
    }
    deck.maps[1].generators.push_back(std::move(images));
  }
  c.action = std::move(deck);
  c.space = CaseSpace::cover;
  c.action_on_space = true;
  c.theorems = {"smith"};
  return c;
}

TheoremCase smith_inversion_case(int truncation) {
  auto c = inversion_case(truncation);
  c.name = "smith-inversion";
  c.space = CaseSpace::cover;
  c.theorems = {"smith"};
  return c;
}

TheoremCase realization_case(bool inversion, int truncation) {
  const AutomorphismAction phi = inversion ? AutomorphismAction{{{0, 1, 2}, {0, 2, 1}}}
                                           : AutomorphismAction{{{0, 1}, {0, 1}}};
  const auto q = inversion ? cyclic_group(3) : cyclic_group(2);
  auto c = nerve_case(inversion ? "realize-inversion" : "realize-trivial", q, phi, truncation);
  c.phi_group = cyclic_group(2);
  c.phi = phi;
  c.theorems = {"thm43"};
  return c;
}

}  // namespace kanact
