#include <gtest/gtest.h>

#include <random>

#include "kanact/error.hpp"
#include "kanact/operator_calculus.hpp"
#include "oracles.hpp"
#include "rewrite.hpp"

using namespace kanact;
using Sym = OperatorSymbol;

namespace {

void expect_matches_oracle(const std::vector<Sym>& word, int n) {
  const auto w = normalize_operator(word, n);
  const auto v = oracle::vertex_list(word, n);
  EXPECT_EQ(w.vertex_map(), v);
  const auto c = oracle::canonical(v, n);
  EXPECT_EQ(w.faces(), c.faces);
  EXPECT_EQ(w.degeneracies(), c.degeneracies);
  EXPECT_EQ(w.source_dim(), n);
  EXPECT_EQ(w.target_dim(), static_cast<int>(v.size()) - 1);
}

}  // namespace

TEST(OperatorCalculus, FaceFaceIdentityExhaustive) {
  for (int n = 2; n <= 6; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        EXPECT_EQ(normalize_operator(std::vector{Sym::face(i), Sym::face(j)}, n),
                  normalize_operator(std::vector{Sym::face(j - 1), Sym::face(i)}, n));
      }
    }
  }
}

TEST(OperatorCalculus, MixedIdentitiesExhaustive) {
  for (int n = 0; n <= 6; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) {
        EXPECT_EQ(normalize_operator(std::vector{Sym::degeneracy(i), Sym::degeneracy(j)}, n),
                  normalize_operator(std::vector{Sym::degeneracy(j + 1), Sym::degeneracy(i)}, n));
      }
      for (int i = 0; i <= n + 1; ++i) {
        const std::vector lhs{Sym::face(i), Sym::degeneracy(j)};
        const auto got = normalize_operator(lhs, n);
        if (i < j) {
          EXPECT_EQ(got, normalize_operator(std::vector{Sym::degeneracy(j - 1), Sym::face(i)}, n));
        } else if (i <= j + 1) {
          EXPECT_TRUE(got.is_identity());
        } else {
          EXPECT_EQ(got, normalize_operator(std::vector{Sym::degeneracy(j), Sym::face(i - 1)}, n));
        }
      }
    }
  }
}

TEST(OperatorCalculus, RandomWordsMatchVertexOracle) {
  std::mt19937 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const int n = static_cast<int>(rng() % 6);
    const auto w = oracle::random_word(rng, n, static_cast<int>(rng() % 9), 10);
    expect_matches_oracle(w, n);
  }
}

TEST(OperatorCalculus, RandomRewritesPreserveNormalForm) {
  std::mt19937 rng(11);
  int rewrites = 0;
  for (int t = 0; t < 10000; ++t) {
    const int n = static_cast<int>(rng() % 5);
    auto w = oracle::random_word(rng, n, 2 + static_cast<int>(rng() % 7), 9);
    const auto before = normalize_operator(w, n);
    if (oracle::rewrite(w, rng)) {
      ++rewrites;
      ASSERT_EQ(normalize_operator(w, n), before);
    }
  }
  EXPECT_GT(rewrites, 8000);
}

TEST(OperatorCalculus, CanonicalFormExamples) {
  // d0 s0 = id, d2 s0 = s0 d1
  EXPECT_TRUE(normalize_operator(std::vector{Sym::face(0), Sym::degeneracy(0)}, 1).is_identity());
  const auto w = normalize_operator(std::vector{Sym::face(2), Sym::degeneracy(0)}, 2);
  EXPECT_EQ(w.to_string(), "s0 d1");
  EXPECT_EQ(OperatorWord::identity(3).to_string(), "id");
}

TEST(OperatorCalculus, ComposeAgreesWithConcatenation) {
  std::mt19937 rng(3);
  for (int t = 0; t < 500; ++t) {
    const int n = static_cast<int>(rng() % 5);
    const auto inner = oracle::random_word(rng, n, static_cast<int>(rng() % 5), 8);
    const auto a = normalize_operator(inner, n);
    const auto outer = oracle::random_word(rng, a.target_dim(), static_cast<int>(rng() % 5), 8);
    const auto b = normalize_operator(outer, a.target_dim());
    auto joined = outer;
    joined.insert(joined.end(), inner.begin(), inner.end());
    EXPECT_EQ(compose(b, a), normalize_operator(joined, n));
  }
}

TEST(OperatorCalculus, RejectsBadIndices) {
  EXPECT_THROW(normalize_operator(std::vector{Sym::face(3)}, 2), Error);
  EXPECT_THROW(normalize_operator(std::vector{Sym::face(0)}, 0), Error);
  EXPECT_THROW(normalize_operator(std::vector{Sym::degeneracy(3)}, 2), Error);
  const std::vector<int> up{0, 1};
  EXPECT_THROW(OperatorWord::from_indices(3, {}, up), Error);
}

TEST(OperatorCalculus, DegeneracyWordCount) {
  // strictly decreasing words from k to n are (n choose n-k)
  EXPECT_EQ(degeneracy_word_count(1, 3), 3u);
  EXPECT_EQ(degeneracy_word_count(0, 4), 1u);
  EXPECT_EQ(degeneracy_word_count(2, 2), 1u);
  EXPECT_EQ(degeneracy_masks(1, 3).size(), 3u);
}
