#include <gtest/gtest.h>

#include "kanact/covering.hpp"
#include "kanact/error.hpp"
#include "kanact/homology.hpp"
#include "kanact/instances.hpp"
#include "kanact/nerve.hpp"
#include "kanact/theorems.hpp"
#include "oracles.hpp"

using namespace kanact;

namespace {

// Kernel of the homomorphism a -> a mod m on Z_n.
Index kernel_order(int n, int m) {
  Index k = 0;
  for (int a = 0; a < n; ++a) k += (a % m == 0);
  return k;
}

}  // namespace

TEST(Pi1, PresentationOfNerve) {
  const auto z3 = cyclic_group(3);
  const auto k = nerve_of_group(z3, 3);
  const auto p = pi1_presentation(k);
  EXPECT_EQ(p.generator_count, 2);
  EXPECT_EQ(p.relators.size(), 4u);
  EXPECT_THROW(pi1_presentation(standard_complex(StandardKind::delta, 1, 0, 2)), Error);
}

TEST(Pi1, QuotientsCheckRelatorsAndSurjectivity) {
  const auto z4 = cyclic_group(4);
  const auto z2 = cyclic_group(2);
  const auto k = nerve_of_group(z4, 3);
  // edges 1,2,3 -> 1,0,1 is reduction mod 2
  EXPECT_NO_THROW(make_quotient(k, z2, {1, 0, 1}));
  try {
    make_quotient(k, z2, {1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RelatorViolation);
  }
  try {
    make_quotient(k, z2, {0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
  }
}

TEST(Pi1, InducedAutomorphism) {
  const auto c = inversion_case(3);
  const auto a = induced_automorphism(c.complex, c.action.maps[1], c.quotient);
  EXPECT_EQ(a, (Permutation{0, 2, 1}));
  EXPECT_EQ(induced_automorphism(c.complex, c.action.maps[0], c.quotient), (Permutation{0, 1, 2}));
}

TEST(Cover, StructureAndNames) {
  const auto k = nerve_of_group(cyclic_group(4), 3);
  const auto c = build_cover(k, parity_quotient(k, 4));
  EXPECT_TRUE(validate(c.total).ok());
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(c.total.generator_count(n), 2 * k.generator_count(n));
  EXPECT_EQ(c.total.generator_name(0, 1), "phi@1");
  // last face twisted by the inverse edge class: d1 (1)@0 = phi@(0 - 1) = phi@1
  const auto e = c.lift(SimplexRef::nondegenerate(1, k.require("1").index), 0);
  EXPECT_EQ(c.total.simplex_name(c.total.face(e, 1)), "phi@1");
  EXPECT_EQ(c.total.simplex_name(c.total.face(e, 0)), "phi@0");
  // deck commutes with faces
  for (int n = 1; n <= 3; ++n) {
    for (const auto& b : enumerate_simplices(c.total, n)) {
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(c.total.face(c.deck(b, 1), i), c.deck(c.total.face(b, i), 1));
      }
    }
  }
}

TEST(Cover, HomologyMatchesKernel) {
  for (int n : {4, 6}) {
    const auto k = nerve_of_group(cyclic_group(n), 4);
    const auto c = build_cover(k, parity_quotient(k, n));
    const auto report = verify_covering(c, 2);
    EXPECT_TRUE(report.ok());
    EXPECT_GT(report.lifts_checked, 0u);
    const auto h = integral_homology(boundary_matrices(c.total));
    // kernel of Z_n -> Z_2 is cyclic of order n/2, its own abelianization
    ASSERT_EQ(h.degrees[1].torsion.size(), 1u);
    EXPECT_EQ(h.degrees[1].torsion[0], kernel_order(n, 2));
    EXPECT_EQ(h.degrees[1].free_rank, 0);
    const auto o = oracle::homology(c.total);
    ASSERT_EQ(o[1].torsion.size(), 1u);
    EXPECT_EQ(o[1].torsion[0], kernel_order(n, 2));
  }
}

TEST(Cover, UniversalCoversAreAcyclic) {
  for (int n : {2, 3}) {
    const auto q = cyclic_group(n);
    const auto k = nerve_of_group(q, 4);
    const auto c = build_cover(k, identity_quotient(k, q));
    const auto h = integral_homology(boundary_matrices(c.total));
    for (int i = 1; i <= 3; ++i) {
      EXPECT_EQ(h.degrees[i].free_rank, 0);
      EXPECT_TRUE(h.degrees[i].torsion.empty());
    }
    EXPECT_EQ(h.degrees[0].free_rank, 1);
  }
}

TEST(Actions, VerifyRejectsBrokenMaps) {
  auto c = inversion_case(3);
  // edges fixed but higher simplices inverted
  c.action.maps[1].generators[1] = {0, 1};
  try {
    verify_action(c.complex, c.action);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
    EXPECT_NE(std::string(e.what()).find("equivariance of faces"), std::string::npos);
  }
  auto d = inversion_case(3);
  d.action.maps[0] = d.action.maps[1];
  try {
    verify_action(d.complex, d.action);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnAction);
  }
}

TEST(Actions, LiftFormula) {
  const auto c = inversion_case(3);
  const auto cover = build_cover(c.complex, c.quotient);
  const auto lifted = lift_action(cover, c.action);
  EXPECT_EQ(lifted.star.phi[1], (Permutation{0, 2, 1}));
  verify_action(cover.total, lifted.total);
  // g(x, a) = (g x, g_* a)
  for (int n = 0; n <= 3; ++n) {
    for (Index s = 0; s < cover.total.generator_count(n); ++s) {
      const auto b = SimplexRef::nondegenerate(n, s);
      const auto x = cover.project(b);
      const auto expect = cover.lift(c.action.act(1, x), lifted.star.phi[1][cover.fibre(b)]);
      EXPECT_EQ(lifted.total.act(1, b), expect);
    }
  }
}

TEST(Actions, RbLemmasAndCrossedRelation) {
  for (auto c : {inversion_case(4), swap_case(4)}) {
    const auto cover = build_cover(c.complex, c.quotient);
    const auto lifted = lift_action(cover, c.action);
    const auto report = verify_rb_lemmas(cover, lifted, 2);
    EXPECT_TRUE(report.ok()) << c.name << ": "
                             << (report.violations.empty() ? "" : report.violations.front());
    EXPECT_GT(report.checks, 0u);
    for (int n = 0; n <= 2; ++n) {
      for (const auto& b : enumerate_simplices(cover.total, n)) {
        const auto r = crossed_hom_at(cover, lifted, b);
        EXPECT_TRUE(satisfies_crossed_relation(c.action.group, cover.q.group, r));
      }
    }
  }
}

TEST(Actions, CrossedHomAtShiftedBasepoint) {
  // inversion, b = (phi, 1): g b = (phi, 2) = b . 1, so r_b(g) = 1
  const auto c = inversion_case(3);
  const auto cover = build_cover(c.complex, c.quotient);
  const auto lifted = lift_action(cover, c.action);
  const auto b = cover.lift(SimplexRef::nondegenerate(0, 0), 1);
  const auto r = crossed_hom_at(cover, lifted, b);
  EXPECT_EQ(r.at(1), 1);
  EXPECT_EQ(r.at(0), 0);
}

TEST(FixedData, SwapGivesDiagonal) {
  const auto c = swap_case(4);
  const auto cover = build_cover(c.complex, c.quotient);
  const auto fd = fixed_data(cover, lift_action(cover, c.action));
  // (a,b) with index 2a+b is fixed by the swap iff a == b
  EXPECT_EQ(fd.gamma, (std::vector<Index>{0, 3}));
  const auto z2 = nerve_of_group(cyclic_group(2), 4);
  const auto iso = find_isomorphism(fd.k_g, z2);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_isomorphism(fd.k_g, z2, *iso));
}

TEST(FixedData, InversionGivesPoint) {
  const auto c = inversion_case(4);
  const auto cover = build_cover(c.complex, c.quotient);
  const auto fd = fixed_data(cover, lift_action(cover, c.action));
  EXPECT_EQ(fd.gamma, (std::vector<Index>{0}));
  EXPECT_EQ(fd.k_g.generator_count(0), 1);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(fd.k_g.generator_count(n), 0);
  EXPECT_EQ(fd.k_g.generator_name(0, 0), "phi");
}

TEST(SemidirectOnCover, IsotropyAtShiftedVertex) {
  const auto c = inversion_case(3);
  const auto cover = build_cover(c.complex, c.quotient);
  const auto lifted = lift_action(cover, c.action);
  const auto s = semidirect_action_on_cover(cover, lifted);
  const auto b = cover.lift(SimplexRef::nondegenerate(0, 0), 1);
  const auto iso = isotropy_in_l(cover, lifted, s, b);
  EXPECT_EQ(iso, (std::vector<Index>{s.l.element(0, 0), s.l.element(1, 1)}));
  EXPECT_TRUE(verify_semidirect_action(cover, lifted, s, 2).ok());
}

TEST(Extension, PsiExampleValues) {
  const auto c = inversion_case(3);
  const auto cover = build_cover(c.complex, c.quotient);
  const auto lifted = lift_action(cover, c.action);
  const auto e = build_extension_action(cover, lifted);
  const auto base = cover.lift(SimplexRef::nondegenerate(0, 0), 0);
  // Psi(1, g)(phi, 0) = (phi, g_*(0) + 1) = (phi, 1)
  EXPECT_EQ(cover.total.simplex_name(e.act(e.l.element(1, 1), base)), "phi@1");
  // Psi(n, x)(y@a) = (x y)@(x_*(a) n), by hand over all generators
  for (int n = 0; n <= 3; ++n) {
    for (Index s = 0; s < cover.total.generator_count(n); ++s) {
      const auto b = SimplexRef::nondegenerate(n, s);
      for (Index el = 0; el < e.l.group.order(); ++el) {
        const Index shift = e.l.normal_part(el);
        const Index x = e.l.projection(el);
        const Index alpha = (lifted.star.phi[x][cover.fibre(b)] + shift) % 3;
        EXPECT_EQ(e.act(el, b), cover.lift(c.action.act(x, cover.project(b)), alpha));
      }
    }
  }
  EXPECT_EQ(verify_extension_action(cover, lifted, e).outcome(), Outcome::pass);
  EXPECT_EQ(verify_isotropy_iso(cover, lifted, e, 2).outcome(), Outcome::pass);
}

TEST(Extension, GlueFailureIsReported) {
  // a fake lifted action whose star does not match the total maps
  const auto c = inversion_case(3);
  const auto cover = build_cover(c.complex, c.quotient);
  auto lifted = lift_action(cover, c.action);
  lifted.star.phi[1] = {0, 1, 2};
  try {
    build_extension_action(cover, lifted);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GlueFailure);
  }
}
