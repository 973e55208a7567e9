#include <gtest/gtest.h>

#include "qverma/cartan.hpp"

using namespace qverma;

TEST(Cartan, CMatrix) {
  EXPECT_EQ(c_matrix(3, 1, 1), 1);
  EXPECT_EQ(c_matrix(3, 2, 1), -1);
  EXPECT_EQ(c_matrix(3, 3, 1), 0);
  EXPECT_THROW(c_matrix(2, 4, 1), std::out_of_range);
  EXPECT_THROW(c_matrix(2, 1, 3), std::out_of_range);
}

TEST(Cartan, AMatrixIsSlCartanMatrix) {
  for (int l = 1; l <= 5; ++l) {
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) {
        const int expected = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
        EXPECT_EQ(a_matrix(l, i, j), expected);
      }
    }
  }
  EXPECT_THROW(a_matrix(2, 0, 1), std::out_of_range);
}

TEST(Cartan, AffineMatrix) {
  EXPECT_EQ(affine_a_matrix(1, 0, 0), 2);
  EXPECT_EQ(affine_a_matrix(1, 0, 1), -2);
  EXPECT_EQ(affine_a_matrix(1, 1, 0), -2);
  for (int l = 2; l <= 6; ++l) {
    EXPECT_EQ(affine_a_matrix(l, 0, l), -1);
    EXPECT_EQ(affine_a_matrix(l, l, 0), -1);
    for (int i = 0; i <= l; ++i) {
      int row = 0;
      for (int j = 0; j <= l; ++j) row += affine_a_matrix(l, i, j);
      EXPECT_EQ(row, 0);
      for (int j = 1; j <= l; ++j) {
        if (i >= 1) EXPECT_EQ(affine_a_matrix(l, i, j), a_matrix(l, i, j));
      }
    }
  }
  for (int i = 0; i <= 1; ++i) {
    int row = 0;
    for (int j = 0; j <= 1; ++j) row += affine_a_matrix(1, i, j);
    EXPECT_EQ(row, 0);
  }
  EXPECT_THROW(affine_a_matrix(2, 3, 0), std::out_of_range);
}

TEST(Cartan, PairingConsistency) {
  for (int l = 1; l <= 5; ++l) {
    for (int i = 1; i <= l; ++i) {
      const RootIndex alpha{i, i + 1};
      for (int j = 1; j <= l + 1; ++j) EXPECT_EQ(pairing(alpha, CartanExp::K(l, j)), c_matrix(l, j, i));
      for (int j = 1; j <= l; ++j) EXPECT_EQ(pairing(alpha, CartanExp::H(l, j, j + 1)), a_matrix(l, j, i));
    }
  }
}

TEST(Cartan, ClassifyBranchExamples) {
  EXPECT_EQ(classify_branch({1, 2}, {1, 3}), Branch::I);
  EXPECT_EQ(classify_branch({1, 3}, {2, 3}), Branch::III);
  EXPECT_EQ(classify_branch({1, 2}, {3, 4}), Branch::VI);
  EXPECT_EQ(classify_branch({2, 3}, {1, 4}), Branch::II);
  EXPECT_EQ(classify_branch({1, 3}, {2, 4}), Branch::IV);
  EXPECT_EQ(classify_branch({1, 2}, {2, 3}), Branch::V);
  EXPECT_THROW(classify_branch({1, 3}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(classify_branch({1, 3}, {1, 3}), std::invalid_argument);
}

TEST(Cartan, BranchesPartitionPairs) {
  for (int l = 1; l <= 5; ++l) {
    const auto roots = colex_enumerate(l);
    const int n = num_roots(l);
    std::map<Branch, int> counts;
    int total = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      for (std::size_t b = a + 1; b < roots.size(); ++b) {
        const auto p = roots[a], r = roots[b];
        // independent restatement of the six inequality patterns
        int hits = 0;
        hits += p.i == r.i && p.j < r.j;
        hits += r.i < p.i && p.j < r.j;
        hits += p.i < r.i && r.i < p.j && p.j == r.j;
        hits += p.i < r.i && r.i < p.j && p.j < r.j;
        hits += p.j == r.i;
        hits += p.j < r.i;
        EXPECT_EQ(hits, 1);
        ++counts[classify_branch(p, r)];
        ++total;
      }
    }
    EXPECT_EQ(total, n * (n - 1) / 2);
    if (l >= 3) EXPECT_EQ(counts.size(), 6u);
  }
}

TEST(Cartan, ColexEnumerate) {
  EXPECT_EQ(colex_enumerate(1), (std::vector<RootIndex>{{1, 2}}));
  EXPECT_EQ(colex_enumerate(2), (std::vector<RootIndex>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(colex_enumerate(3), (std::vector<RootIndex>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
  for (int l = 1; l <= 6; ++l) {
    const auto r = colex_enumerate(l);
    ASSERT_EQ(static_cast<int>(r.size()), num_roots(l));
    for (std::size_t k = 0; k < r.size(); ++k) {
      EXPECT_EQ(colex_position(r[k]), static_cast<int>(k));
      if (k > 0) EXPECT_LT(r[k - 1], r[k]);
    }
  }
}

TEST(Cartan, PsiEnumerate) {
  using P = std::pair<std::vector<int>, std::vector<int>>;
  EXPECT_EQ(psi_enumerate(1, 0), (std::vector<P>{{{1, 2}, {1, 2}}}));
  EXPECT_EQ(psi_enumerate(2, 0), (std::vector<P>{{{1, 3}, {1, 3}}}));
  EXPECT_EQ(psi_enumerate(2, 1), (std::vector<P>{{{1, 2, 3}, {1, 2, 3}}}));
  EXPECT_THROW(psi_enumerate(2, 2), std::out_of_range);
  // brute force over all pairs of increasing interiors
  for (int l = 1; l <= 5; ++l) {
    for (int k = 0; k < l; ++k) {
      std::size_t expected = 0;
      const auto tuples = lambda_enumerate(l, k);
      for (const auto& i : tuples) {
        for (const auto& j : tuples) {
          bool ok = true;
          for (int a = 1; a <= k; ++a) ok = ok && j[a - 1] < i[a] && i[a] <= j[a];
          expected += ok;
        }
      }
      EXPECT_EQ(psi_enumerate(l, k).size(), expected);
      EXPECT_GE(ladder_enumerate(l, k).size(), expected);
    }
  }
  EXPECT_EQ(lambda_enumerate(4, 2).size(), 3u);  // C(3, 2)
}

TEST(Cartan, CartanExpArithmetic) {
  const int l = 2;
  CartanExp x = CartanExp::K(l, 1, 2) + CartanExp::H(l, 2, 3, Rational(1, 2));
  EXPECT_EQ(x.to_string(), "2K1+1/2K2-1/2K3");
  Weight w{{Rational(1), Rational(4), Rational(-2)}};
  EXPECT_EQ(x.evaluate(w), Rational(2 + 2 + 1));
  EXPECT_TRUE((x + -x).is_zero());
  EXPECT_EQ(pairing({1, 3}, x), Rational(2) - Rational(-1, 2));
}
