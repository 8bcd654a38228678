#include <gtest/gtest.h>

#include <random>

#include "kanact/error.hpp"
#include "kanact/homology.hpp"
#include "kanact/nerve.hpp"
#include "oracles.hpp"

using namespace kanact;

namespace {

SparseMatrix sparse(const oracle::Dense& d) {
  SparseMatrix m;
  m.rows = static_cast<Index>(d.size());
  m.cols = d.empty() ? 0 : static_cast<Index>(d[0].size());
  m.columns.resize(m.cols);
  for (Index c = 0; c < m.cols; ++c) {
    for (Index r = 0; r < m.rows; ++r) {
      if (d[r][c] != 0) m.columns[c].push_back({r, d[r][c]});
    }
  }
  return m;
}

oracle::Dense random_dense(std::mt19937& rng, int rows, int cols, int spread) {
  oracle::Dense d(rows, std::vector<std::int64_t>(cols));
  for (auto& row : d) {
    for (auto& x : row) x = rng() % 3 == 0 ? static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread : 0;
  }
  return d;
}

SSetPresentation circle(int max_dim) {
  SSetPresentation s("S1", max_dim);
  s.add_generator(0, "v");
  s.add_generator(1, "a");
  s.set_faces(1, 0, {SimplexRef::nondegenerate(0, 0), SimplexRef::nondegenerate(0, 0)});
  return s;
}

std::vector<std::int64_t> small(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

}  // namespace

TEST(Smith, RandomMatricesMatchDenseOracle) {
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const auto d = random_dense(rng, rows, cols, 4);
    const auto s = smith_normal_form(sparse(d));
    auto expect = oracle::smith_diagonal(d);
    EXPECT_EQ(static_cast<std::size_t>(s.rank), expect.size());
    EXPECT_EQ(small(s.diagonal), expect);
    for (int p : {2, 3, 5}) {
      EXPECT_EQ(static_cast<std::size_t>(rank_mod_p(sparse(d), p)), oracle::rank_mod_p(d, p));
    }
  }
}

TEST(Smith, KnownForms) {
  // diag(2, 3) ~ diag(1, 6)
  const auto s = smith_normal_form(sparse({{2, 0}, {0, 3}}));
  EXPECT_EQ(small(s.diagonal), (std::vector<std::int64_t>{1, 6}));
  const auto z = smith_normal_form(sparse({{0, 0}, {0, 0}}));
  EXPECT_EQ(z.rank, 0);
}

TEST(Homology, BoundarySquaresToZero) {
  for (const auto& g : groups_up_to_order_six()) {
    const auto c = boundary_matrices(nerve_of_group(g, 3));
    for (int n = 2; n <= 3; ++n) {
      const auto a = c.boundary[n - 1].dense();
      const auto b = c.boundary[n].dense();
      for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t col = 0; col < (b.empty() ? 0 : b[0].size()); ++col) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < b.size(); ++k) s += a[r][k] * b[k][col];
          EXPECT_EQ(s, 0);
        }
      }
    }
  }
}

TEST(Homology, NerveOfZ2) {
  const auto h = integral_homology(boundary_matrices(nerve_of_group(cyclic_group(2), 5)));
  EXPECT_EQ(h.reliable_up_to, 4);
  ASSERT_GE(h.degrees.size(), 4u);
  EXPECT_EQ(format_group(h.degrees[0]), "Z");
  EXPECT_EQ(format_group(h.degrees[1]), "Z/2");
  EXPECT_EQ(format_group(h.degrees[2]), "0");
  EXPECT_EQ(format_group(h.degrees[3]), "Z/2");
  const auto o = oracle::homology(nerve_of_group(cyclic_group(2), 5));
  for (int n = 0; n < 4; ++n) {
    EXPECT_EQ(o[n].free_rank, static_cast<int>(h.degrees[n].free_rank));
    EXPECT_EQ(o[n].torsion, small(h.degrees[n].torsion));
  }
}

TEST(Homology, TorusFromCircles) {
  const auto t = cartesian_product(circle(3), circle(3));
  const auto h = integral_homology(boundary_matrices(t));
  EXPECT_EQ(format_group(h.degrees[0]), "Z");
  EXPECT_EQ(format_group(h.degrees[1]), "Z^2");
  EXPECT_EQ(format_group(h.degrees[2]), "Z");
}

TEST(Homology, MatchesDenseOracleOnNerves) {
  for (const auto& g : groups_up_to_order_six()) {
    const auto k = nerve_of_group(g, 4);
    const auto h = integral_homology(boundary_matrices(k));
    const auto o = oracle::homology(k);
    for (int n = 0; n < 4; ++n) {
      EXPECT_EQ(o[n].free_rank, static_cast<int>(h.degrees[n].free_rank)) << g.name() << n;
      auto ot = o[n].torsion;
      auto ht = small(h.degrees[n].torsion);
      // compare the group order; factorizations may differ in presentation
      std::int64_t a = 1, b = 1;
      for (auto x : ot) a *= x;
      for (auto x : ht) b *= x;
      EXPECT_EQ(a, b) << g.name() << " H_" << n;
    }
  }
  // H_1 of a nerve is the abelianization
  EXPECT_EQ(format_group(integral_homology(boundary_matrices(nerve_of_group(symmetric_group(3), 3)))
                             .degrees[1]),
            "Z/2");
}

TEST(Homology, UniversalCoefficientsAcrossPrimes) {
  for (const auto& g : groups_up_to_order_six()) {
    const auto c = boundary_matrices(nerve_of_group(g, 4));
    const auto h = integral_homology(c);
    for (int p : {2, 3, 5}) {
      const auto m = mod_p_cohomology(c, p);
      EXPECT_TRUE(universal_coefficients_hold(h, m)) << g.name() << " p=" << p;
    }
  }
}

TEST(Homology, ModPCohomologyOfCyclicGroups) {
  // H^i(Z/n; F_p) is F_p in every degree when p | n, else only degree 0
  for (int n : {2, 3, 4}) {
    for (int p : {2, 3}) {
      const auto dims = group_cohomology(cyclic_group(n), p, 3);
      ASSERT_EQ(dims.size(), 4u);
      EXPECT_EQ(dims[0], 1);
      for (int i = 1; i <= 3; ++i) EXPECT_EQ(dims[i], n % p == 0 ? 1 : 0) << n << " " << p;
    }
  }
}

TEST(Homology, RejectsNonPrime) {
  const auto c = boundary_matrices(nerve_of_group(cyclic_group(2), 3));
  try {
    mod_p_cohomology(c, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(1));
}
