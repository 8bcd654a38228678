#include <gtest/gtest.h>

#include "kanact/error.hpp"
#include "kanact/groups.hpp"
#include "oracles.hpp"

using namespace kanact;

namespace {

std::string failed_axiom(std::vector<std::vector<Index>> table) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < table.size(); ++i) names.push_back("x" + std::to_string(i));
  try {
    FiniteGroup("bad", names, std::move(table));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Groups, TableAxiomsAreNamed) {
  EXPECT_NE(failed_axiom({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}).find("associativity"), std::string::npos);
  EXPECT_NE(failed_axiom({{0, 3}, {1, 0}}).find("closure"), std::string::npos);
  // constant table: associative, no identity
  EXPECT_NE(failed_axiom({{0, 0}, {0, 0}}).find("identity"), std::string::npos);
  // left-zero semigroup with an adjoined identity has no inverses
  EXPECT_NE(failed_axiom({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}).find("inverses"), std::string::npos);
}

TEST(Groups, SmallGroupsAreGroupsOfTheRightShape) {
  const auto groups = groups_up_to_order_six();
  ASSERT_EQ(groups.size(), 8u);
  const std::vector<int> orders{1, 2, 3, 4, 4, 5, 6, 6};
  const std::vector<bool> abelian{true, true, true, true, true, true, true, false};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EXPECT_EQ(groups[i].order(), orders[i]) << groups[i].name();
    EXPECT_EQ(groups[i].is_abelian(), abelian[i]) << groups[i].name();
  }
}

TEST(Groups, AutomorphismCountsMatchBruteForce) {
  for (const auto& g : groups_up_to_order_six()) {
    const auto autos = automorphisms(g);
    EXPECT_EQ(autos.size(), oracle::automorphism_count(g)) << g.name();
    for (const auto& a : autos) EXPECT_TRUE(is_automorphism(g, a));
    EXPECT_TRUE(std::is_sorted(autos.begin(), autos.end()));
  }
  // classical values
  EXPECT_EQ(automorphisms(cyclic_group(3)).size(), 2u);
  EXPECT_EQ(automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size(), 6u);
  EXPECT_EQ(automorphisms(symmetric_group(3)).size(), 6u);
  EXPECT_EQ(automorphisms(cyclic_group(5)).size(), 4u);
}

TEST(Groups, AutomorphismSearchIsBounded) {
  try {
    automorphisms(symmetric_group(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(Groups, SpecsParse) {
  EXPECT_EQ(group_from_spec("Z6").order(), 6);
  EXPECT_EQ(group_from_spec("Z2xZ2").order(), 4);
  EXPECT_EQ(group_from_spec("S3").order(), 6);
  EXPECT_EQ(group_from_spec("1").order(), 1);
  EXPECT_THROW(group_from_spec("Q8"), Error);
}

TEST(Groups, SemidirectInversionIsS3) {
  const auto z3 = cyclic_group(3);
  const auto z2 = cyclic_group(2);
  AutomorphismAction inv{{{0, 1, 2}, {0, 2, 1}}};
  verify_automorphism_action(z3, z2, inv);
  const auto l = build_semidirect(z3, z2, inv);
  EXPECT_EQ(l.group.order(), 6);
  EXPECT_FALSE(l.group.is_abelian());
  // (a,x)(b,y) = (a + (-1)^x b, x + y), computed by hand
  for (Index x = 0; x < 2; ++x) {
    for (Index a = 0; a < 3; ++a) {
      for (Index y = 0; y < 2; ++y) {
        for (Index b = 0; b < 3; ++b) {
          const Index c = (a + (x ? 3 - b : b)) % 3;
          EXPECT_EQ(l.group.multiply(l.element(a, x), l.element(b, y)), l.element(c, (x + y) % 2));
        }
      }
    }
  }
  EXPECT_EQ(l.group.element_name(l.element(1, 1)), "(1,1)");
}

TEST(Groups, RightConventionIsIsomorphic) {
  const auto z3 = cyclic_group(3);
  const auto z2 = cyclic_group(2);
  AutomorphismAction inv{{{0, 1, 2}, {0, 2, 1}}};
  const auto right = build_right_semidirect(z2, z3, inv);
  const auto left = build_semidirect(z3, z2, inv);
  const auto iso = semidirect_convention_isomorphism(right, left);
  EXPECT_TRUE(is_group_isomorphism(right.group, left.group, iso));
  // (g,a)(h,b) = (gh, h^{-1}_*(a) b)
  const Index g = right.element(1, 1);
  const Index h = right.element(1, 0);
  EXPECT_EQ(right.group.multiply(g, h), right.element(0, 2));
}

TEST(Groups, ActionMustBeHomomorphism) {
  const auto z3 = cyclic_group(3);
  const auto z2 = cyclic_group(2);
  // identity element must act trivially
  AutomorphismAction bad{{{0, 2, 1}, {0, 2, 1}}};
  EXPECT_THROW(verify_automorphism_action(z3, z2, bad), Error);
  // not an automorphism
  AutomorphismAction worse{{{0, 1, 2}, {0, 1, 1}}};
  EXPECT_THROW(verify_automorphism_action(z3, z2, worse), Error);
}

TEST(Groups, CrossedHomGraphIsSubgroup) {
  const auto z3 = cyclic_group(3);
  const auto z2 = cyclic_group(2);
  AutomorphismAction inv{{{0, 1, 2}, {0, 2, 1}}};
  const auto l = build_semidirect(z3, z2, inv);
  // r(e) = 0, r(g) = 1: r(gg) = r(g) + g_*(r(g)) = 1 + 2 = 0
  CrossedHom r{{0, 1}, {0, 1}, inv};
  EXPECT_TRUE(satisfies_crossed_relation(z2, z3, r));
  const auto graph = graph_of_crossed_hom(r, l);
  EXPECT_EQ(graph, (std::vector<Index>{l.element(0, 0), l.element(1, 1)}));
  // for the trivial action r(g) = 1 breaks r(gg) = 2 r(g)
  AutomorphismAction triv{{{0, 1, 2}, {0, 1, 2}}};
  CrossedHom bad{{0, 1}, {0, 1}, triv};
  EXPECT_FALSE(satisfies_crossed_relation(z2, z3, bad));
  EXPECT_THROW(graph_of_crossed_hom(bad, build_semidirect(z3, z2, triv)), Error);
}

TEST(Groups, PropertyInversesAndPowers) {
  for (const auto& g : groups_up_to_order_six()) {
    for (Index a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
      EXPECT_EQ(g.power(a, g.element_order(a)), g.identity());
      EXPECT_EQ(g.order() % g.element_order(a), 0);
    }
    EXPECT_EQ(static_cast<Index>(g.generated_subgroup(g.generating_set()).size()), g.order());
    const auto op = opposite_group(g);
    for (Index a = 0; a < g.order(); ++a) {
      for (Index b = 0; b < g.order(); ++b) EXPECT_EQ(op.multiply(a, b), g.multiply(b, a));
    }
  }
}

TEST(Groups, PGroups) {
  EXPECT_TRUE(cyclic_group(4).is_p_group(2));
  EXPECT_TRUE(trivial_group().is_p_group(3));
  EXPECT_FALSE(cyclic_group(6).is_p_group(2));
  EXPECT_FALSE(cyclic_group(3).is_p_group(2));
}
