#include <gtest/gtest.h>

#include "qverma/oscillator.hpp"

using namespace qverma;

namespace {

ReducedIndex ri(std::vector<int> m) { return {std::move(m)}; }
FockVector fv(std::vector<int> m, Scalar c = Scalar(1)) { return FockVector::basis(ri(std::move(m)), c); }
Scalar v(int k) { return Scalar::variable(var::kV, k); }
Scalar bracket(int n) { return (v(n) - v(-n)) / (v(1) - v(-1)); }

}  // namespace

TEST(Oscillator, CanonicalProducts) {
  const OscAlgebra A(2);
  // b bdag - bdag b = [N+1] - [N]
  EXPECT_EQ(A.mul(A.b(1), A.bdag(1)) - A.mul(A.bdag(1), A.b(1)), A.qnum_N(1, 1) - A.qnum_N(1, 0));
  EXPECT_EQ(A.mul(A.qN(1, 1), A.bdag(1)), v(1) * A.mul(A.bdag(1), A.qN(1, 1)));
  EXPECT_EQ(A.mul(A.qN(2, 1), A.b(2)), v(-1) * A.mul(A.b(2), A.qN(2, 1)));
  EXPECT_EQ(A.mul(A.b(1), A.bdag(2)), A.mul(A.bdag(2), A.b(1)));
  EXPECT_EQ(A.mul(A.bdag(1), A.bdag(1)).terms().size(), 1u);
  // bdag^2 b^2 = [N][N-1]
  const OscElement lhs = A.mul({A.bdag(1), A.bdag(1), A.b(1), A.b(1)});
  const OscElement rhs = A.mul(A.qnum_N(1, 0), A.qnum_N(1, -1));
  EXPECT_EQ(lhs, rhs);
  for (const auto& [w, c] : lhs.terms()) EXPECT_EQ(w.d, (std::vector<int>{0, 0}));
  EXPECT_THROW(A.b(3), std::out_of_range);
}

TEST(Oscillator, ChiPlus) {
  const OscAlgebra A(1);
  EXPECT_EQ(A.chi_plus(A.b(1), fv({0})), FockVector());
  for (int m = 0; m <= 4; ++m) {
    EXPECT_EQ(A.chi_plus(A.bdag(1), fv({m})), fv({m + 1}));
    EXPECT_EQ(A.chi_plus(A.mul(A.bdag(1), A.b(1)), fv({m})), fv({m}, bracket(m)));
    EXPECT_EQ(A.chi_plus(A.qN(1, 3), fv({m})), fv({m}, v(3 * m)));
  }
}

TEST(Oscillator, ChiMinus) {
  const OscAlgebra A(1);
  EXPECT_EQ(A.chi_minus(A.bdag(1), fv({0})), FockVector());
  EXPECT_EQ(A.chi_minus(A.qN(1, 1), fv({0})), fv({0}, v(-1)));
  for (int m = 0; m <= 4; ++m) {
    EXPECT_EQ(A.chi_minus(A.b(1), fv({m})), fv({m + 1}));
    // [N+1] at eigenvalue -(m+1) is [-m] = -[m]
    EXPECT_EQ(A.chi_minus(A.mul(A.b(1), A.bdag(1)), fv({m})), fv({m}, -bracket(m)));
    EXPECT_EQ(A.chi_minus(A.qnum_N(1, 1), fv({m})), fv({m}, -bracket(m)));
  }
}

TEST(Oscillator, Exchange) {
  const OscAlgebra A(1);
  EXPECT_EQ(A.exchange(A.b(1)), A.bdag(1));
  EXPECT_EQ(A.exchange(A.bdag(1)), Scalar(-1) * A.b(1));
  EXPECT_EQ(A.exchange(A.qN(1, 1)), v(-1) * A.qN(1, -1));
  // [N] -> [-N-1] = -[N+1]
  EXPECT_EQ(A.exchange(A.qnum_N(1, 0)), Scalar(-1) * A.qnum_N(1, 1));
  EXPECT_EQ(A.exchange(A.mul(A.bdag(1), A.b(1))), Scalar(-1) * A.mul(A.b(1), A.bdag(1)));
}

TEST(Oscillator, RhoImages) {
  const OscAlgebra A(3);
  EXPECT_EQ(A.rho(LoopGenerator::h(1)), A.qN({-1, 1, 0}));
  EXPECT_EQ(A.rho(LoopGenerator::h(0, 2)), A.qN({4, 2, 2}));
  EXPECT_EQ(A.rho(LoopGenerator::h(3)), A.qN({-1, -1, -2}));
  EXPECT_EQ(A.rho(LoopGenerator::e(3)), Scalar(-1) / (v(1) - v(-1)) * A.mul(A.b(3), A.qN(3, 1)));
  EXPECT_EQ(A.rho(LoopGenerator::e(0)), A.mul(A.bdag(1), A.qN({0, 1, 1})));
  EXPECT_EQ(A.rho(LoopGenerator::e(2)), -v(-1) * A.mul({A.b(2), A.bdag(3), A.qN({0, 1, -1})}));
  OscElement c = A.one();
  for (int i = 0; i <= 3; ++i) c = A.mul(c, A.rho(LoopGenerator::h(i)));
  EXPECT_EQ(c, A.one());
  const OscAlgebra B(1);
  EXPECT_EQ(B.rho(LoopGenerator::e(0)), B.bdag(1));
  EXPECT_EQ(B.rho(LoopGenerator::h(0)), B.qN(1, 2));
  EXPECT_EQ(B.rho(LoopGenerator::h(1)), B.qN(1, -2));
  EXPECT_THROW(B.rho(LoopGenerator::f(0)), std::invalid_argument);
}

TEST(Oscillator, AlgebraChecks) {
  for (int l = 1; l <= 3; ++l) {
    const Report rep = verify_oscillator_algebra(OscAlgebra(l, QRing(2)), l == 3 ? 4 : 5);
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
}

TEST(Oscillator, RhoIsHomomorphism) {
  for (int l = 1; l <= 4; ++l) {
    const Report rep = verify_rho_homomorphism(OscAlgebra(l));
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
}

TEST(Oscillator, FactorizesQuotientModule) {
  const std::vector<std::vector<int>> spins = {{1, 2}, {0, -1, 3}, {2, 1, 0, -2}};
  for (int l = 1; l <= 3; ++l) {
    const OscAlgebra A(l);
    const Report rep = verify_oscillator_factorization(A, SpinVector{spins[static_cast<std::size_t>(l - 1)]}, 5);
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
  const OscAlgebra A(3);
  const SpinVector s{{1, 1, 1, 1}};
  const ReducedIndex m = ri({1, 2, 1});
  EXPECT_EQ(Scalar::variable(var::kZeta, 1) * A.chi_plus(A.rho(LoopGenerator::e(1)), FockVector::basis(m)),
            act_quotient(3, LoopGenerator::e(1), m, A.ring(), &s));
}

TEST(Oscillator, ChiMinusDoesNotFactorize) {
  const OscAlgebra A(2);
  const SpinVector s{{0, 0, 0}};
  const auto image = A.chi_minus(A.rho(LoopGenerator::e(0)), fv({0, 0}));
  EXPECT_NE(image, act_quotient(2, LoopGenerator::e(0), ri({0, 0}), A.ring(), &s));
}
