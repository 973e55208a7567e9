#include <gtest/gtest.h>

#include <random>

#include "qverma/verma.hpp"

using namespace qverma;

namespace {

MultiIndex mi(std::vector<int> m) { return {std::move(m)}; }

Weight random_weight(std::mt19937& rng, int l, int den) {
  std::uniform_int_distribution<int> d(-12, 12);
  Weight w;
  for (int i = 0; i <= l; ++i) w.lambda.emplace_back(d(rng), den);
  for (auto& x : w.lambda) x.canonicalize();
  return w;
}

}  // namespace

TEST(Verma, CartanActionExamples) {
  Weight w{{Rational(3), Rational(1, 2), Rational(-2)}};
  VermaModule V(w);
  const QRing& r = V.ring();
  ASSERT_EQ(r.root_degree(), 2);
  EXPECT_EQ(V.K(1, 1, MultiIndex::zero(2)), ModuleVector::basis(MultiIndex::zero(2), r.q_pow(3)));
  EXPECT_EQ(V.K(2, 1, mi({1, 0, 0})), ModuleVector::basis(mi({1, 0, 0}), r.q_pow(Rational(3, 2))));
  EXPECT_EQ(V.K(2, 0, mi({1, 2, 3})), ModuleVector::basis(mi({1, 2, 3})));
  EXPECT_EQ(V.H(1, 1, MultiIndex::zero(2)), ModuleVector::basis(MultiIndex::zero(2), r.q_pow(Rational(5, 2))));
  EXPECT_THROW(V.K(4, 1, MultiIndex::zero(2)), std::out_of_range);

  VermaModule V1(Weight{{Rational(5), Rational(1)}});
  for (int m = 0; m < 4; ++m) {
    EXPECT_EQ(V1.H(1, 1, mi({m})), ModuleVector::basis(mi({m}), V1.ring().q_pow(4 - 2 * m)));
  }
}

TEST(Verma, HIsKOverK) {
  std::mt19937 rng(3);
  for (int l = 1; l <= 4; ++l) {
    VermaModule V(random_weight(rng, l, 3));
    for (const auto& m : multi_indices(l, 4)) {
      for (int i = 1; i <= l; ++i) {
        const auto v = ModuleVector::basis(m);
        EXPECT_EQ(V.act_H(i, 1, v), V.act_K(i, 1, V.act_K(i + 1, -1, v)));
      }
    }
  }
}

TEST(Verma, FActionExamples) {
  Weight w{{Rational(2), Rational(0), Rational(-1)}};
  VermaModule V(w);
  const QRing& r = V.ring();
  EXPECT_EQ(V.F(1, MultiIndex::zero(2)), ModuleVector::basis(mi({1, 0, 0})));
  EXPECT_EQ(V.F(2, MultiIndex::zero(2)), ModuleVector::basis(mi({0, 0, 1})));
  EXPECT_EQ(V.F(2, mi({1, 0, 0})), ModuleVector::basis(mi({1, 0, 1}), r.q_pow(-1)) + ModuleVector::basis(mi({0, 1, 0})));
  VermaModule V1(Weight{{Rational(1), Rational(1)}});
  EXPECT_EQ(V1.F(1, mi({3})), ModuleVector::basis(mi({4})));
}

TEST(Verma, EActionExamples) {
  Weight w{{Rational(4), Rational(1), Rational(0)}};
  VermaModule V(w);
  const QRing& r = V.ring();
  for (int i = 1; i <= 2; ++i) EXPECT_TRUE(V.E(i, MultiIndex::zero(2)).is_zero());
  // E_1 v_(0,1,0) = -q^{-lambda1+lambda2-2+1}[1] v_(0,0,1)
  EXPECT_EQ(V.E(1, mi({0, 1, 0})), ModuleVector::basis(mi({0, 0, 1}), -r.q_pow(-3 - 1)));
  VermaModule V1(Weight{{Rational(7, 2), Rational(1)}});
  const QRing& r1 = V1.ring();
  for (int m = 1; m < 5; ++m) {
    // [lambda1 - lambda2 - m + 1][m]
    const Scalar expected = r1.qnum(-m + 1, r1.q_pow(Rational(5, 2))) * r1.qnum(m);
    EXPECT_EQ(V1.E(1, mi({m})), ModuleVector::basis(mi({m - 1}), expected));
  }
}

TEST(Verma, TopActions) {
  Weight w{{Rational(1), Rational(2), Rational(3)}};
  VermaModule V(w);
  const QRing& r = V.ring();
  EXPECT_EQ(V.F_top(MultiIndex::zero(2)), ModuleVector::basis(mi({0, 1, 0})));
  EXPECT_EQ(V.F_top(mi({1, 0, 0})), ModuleVector::basis(mi({1, 1, 0}), r.q_pow(1)));
  EXPECT_EQ(V.F_top(mi({0, 1, 0})), ModuleVector::basis(mi({0, 2, 0})));
  EXPECT_TRUE(V.E_top(MultiIndex::zero(2)).is_zero());
  VermaModule V1(Weight{{Rational(2), Rational(-1)}});
  for (int m = 0; m < 5; ++m) {
    EXPECT_EQ(V1.F_top(mi({m})), V1.F(1, mi({m})));
    EXPECT_EQ(V1.E_top(mi({m})), V1.E(1, mi({m})));
  }
}

TEST(Verma, ETopOnFirstExcitations) {
  // E_13 F_13 v_0 = [H_13] v_0 and E_13 F_12 F_23 v_0 computed independently
  Weight w{{Rational(3), Rational(1), Rational(-1)}};
  VermaModule V(w);
  PbwAlgebra alg(2, V.ring());
  const Scalar h13 = V.ring().qnum(0, V.ring().q_pow(4));
  EXPECT_EQ(V.E_top(mi({0, 1, 0})), ModuleVector::basis(MultiIndex::zero(2), h13));
  const AlgebraElement e13 = alg.root_vector_E(1, 3);
  auto oracle = alg.evaluate_normal(alg.bootstrap_normal_order(e13 * alg.F(1, 2) * alg.F(2, 3)), w);
  EXPECT_EQ(V.E_top(mi({1, 0, 1})), oracle);
}

TEST(Verma, MatrixShapes) {
  VermaModule V(Weight{{Rational(2), Rational(0)}});
  auto e = V.matrix("E1", 2);
  ASSERT_EQ(e.basis().size(), 3u);
  EXPECT_EQ(e.nonzeros(), 2u);
  const QRing& r = V.ring();
  EXPECT_EQ(e.entry(0, 1), r.qnum(2) * r.qnum(1));
  EXPECT_EQ(e.entry(1, 2), r.qnum(1) * r.qnum(2));
  EXPECT_TRUE(e.overflow().empty());
  auto f = V.matrix("F1", 2);
  EXPECT_EQ(f.overflow(), (std::vector<std::size_t>{2}));
  auto k = V.matrix("K1", 3);
  for (std::size_t c = 0; c < k.basis().size(); ++c) {
    ASSERT_EQ(k.column(c).size(), 1u);
    EXPECT_EQ(k.column(c)[0].first, c);
  }
  VermaModule V2(Weight{{Rational(2), Rational(0), Rational(1)}});
  auto f2 = V2.matrix("F2", 1);
  EXPECT_EQ(f2.basis().size(), 4u);
  auto col = f2.column(*f2.position(mi({1, 0, 0})));
  ASSERT_EQ(col.size(), 1u);  // v_(0,1,0); v_(1,0,1) leaves the truncation
  EXPECT_EQ(f2.basis()[col[0].first], mi({0, 1, 0}));
  EXPECT_EQ(V.generator_ids().size(), 6u);
  EXPECT_THROW(V.generator("E3"), std::invalid_argument);
}

TEST(Verma, GradingByWeight) {
  std::mt19937 rng(9);
  for (int l = 1; l <= 3; ++l) {
    VermaModule V(random_weight(rng, l, 1));
    for (const auto& m : multi_indices(l, 3)) {
      for (int i = 1; i <= l; ++i) {
        const auto up = V.E(i, m);
        for (const auto& [n, c] : up.terms()) {
          for (int k = 1; k <= l + 1; ++k) {
            EXPECT_EQ(V.k_exponent(k, n), Rational(V.k_exponent(k, m) + c_matrix(l, k, i)));
          }
        }
        const auto down = V.F(i, m);
        for (const auto& [n, c] : down.terms()) {
          for (int k = 1; k <= l + 1; ++k) {
            EXPECT_EQ(V.k_exponent(k, n), Rational(V.k_exponent(k, m) - c_matrix(l, k, i)));
          }
        }
      }
    }
  }
}

TEST(Verma, DefiningRelations) {
  std::mt19937 rng(21);
  for (int l = 1; l <= 3; ++l) {
    VermaModule V(random_weight(rng, l, 2));
    auto rep = verify_defining(V, 4);
    EXPECT_TRUE(rep.ok()) << rep.summary(5);
  }
}

TEST(Verma, InjectedFaultIsDetected) {
  VermaModule V(Weight{{Rational(1), Rational(0), Rational(2)}}, QRing(), {true});
  EXPECT_FALSE(verify_defining(V, 3).ok());
  PbwAlgebra alg(2, QRing());
  EXPECT_FALSE(verify_against_oracle(V, alg, 3).ok());
}

TEST(Verma, ClosedFormsMatchOracle) {
  std::mt19937 rng(5);
  for (int l = 1; l <= 3; ++l) {
    for (int t = 0; t < 2; ++t) {
      VermaModule V(random_weight(rng, l, 1 + t));
      PbwAlgebra alg(l, V.ring());
      auto rep = verify_against_oracle(V, alg, l == 3 ? 3 : 4);
      EXPECT_TRUE(rep.ok()) << rep.summary(5);
    }
  }
}
