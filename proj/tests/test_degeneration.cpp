#include <gtest/gtest.h>

#include "qverma/degeneration.hpp"

using namespace qverma;

namespace {

MultiIndex mi(std::vector<int> m) { return {std::move(m)}; }

Scalar v(int k) { return Scalar::variable(var::kV, k); }
Scalar u(int i, int k = 1) { return Scalar::variable(var::u(i), k); }
Scalar zt(int k) { return Scalar::variable(var::kZetaTilde, k); }
// (q^n - q^-n)/(q - q^-1) with q = v
Scalar bracket(int n) { return (v(n) - v(-n)) / (v(1) - v(-1)); }

}  // namespace

TEST(Degeneration, ShiftElement) {
  const Weight w{{Rational(3), Rational(1, 2), Rational(-2)}};
  const ShiftElement xi = weight_shift(w);
  EXPECT_EQ(xi[0], 5);
  EXPECT_EQ(xi[1], Rational(-5, 2));
  EXPECT_EQ(xi[2], Rational(-5, 2));
  EXPECT_EQ(xi.central(), 0);

  BorelAction<MultiIndex> diag = [](const LoopGenerator& g, const MultiIndex& m) {
    return ModuleVector::basis(m, g.kind == LoopGenerator::Kind::H ? v(7) : v(1));
  };
  const QRing ring(2);
  const auto m = MultiIndex::zero(2);
  auto same = shift_representation(diag, ShiftElement::zero(2), ring);
  for (const auto& g : {LoopGenerator::e(1), LoopGenerator::h(0), LoopGenerator::h(2, -1)}) {
    EXPECT_EQ(same(g, m), diag(g, m));
  }
  auto shifted = shift_representation(diag, xi, ring);
  EXPECT_EQ(shifted(LoopGenerator::e(0), m), diag(LoopGenerator::e(0), m));
  EXPECT_EQ(shifted(LoopGenerator::h(1), m), ModuleVector::basis(m, v(7 - 5)));
  EXPECT_EQ(shifted(LoopGenerator::h(0, -1), m), ModuleVector::basis(m, v(7 - 10)));
  EXPECT_THROW(shifted(LoopGenerator::f(1), m), std::invalid_argument);
  EXPECT_THROW(shift_representation(diag, ShiftElement{{1, 0, 0}}, ring), std::invalid_argument);
}

TEST(Degeneration, RebaseCoefficient) {
  const SpinVector s{{1, 2, 1}};
  const QRing ring(2);
  // (2 * 3/2 - 2) s_k / 4 = s_k / 4
  EXPECT_EQ(rebase_coefficient(Rational(3, 2), s, {1, 2}, 0, ring), Scalar(1));
  EXPECT_EQ(rebase_coefficient(Rational(3, 2), s, {2, 3}, 1, QRing(4)), u(2) * Scalar::variable(var::kV, 5));
  EXPECT_EQ(rebase_coefficient(Rational(3, 2), s, {1, 3}, 1, QRing(4)),
            rebase_coefficient(Rational(3, 2), s, {1, 2}, 1, QRing(4)) *
                rebase_coefficient(Rational(3, 2), s, {2, 3}, 1, QRing(4)));
  EXPECT_EQ(rebase_coefficient(Rational(3, 2), s, {1, 2}, -2, QRing(4)), u(1, -2) * Scalar::variable(var::kV, -12));
  EXPECT_THROW(rebase_coefficient(Rational(1), SpinVector{{1, -1, 0}}, {1, 2}, 1, ring), std::invalid_argument);

  const Weight w{{Rational(1), Rational(-1), Rational(3, 2)}};
  EXPECT_EQ(degeneration_root_degree(w, s), 4);
  const MultiIndex m = mi({1, 0, 2});
  const MultiIndex n = mi({1, 1, 2});
  const QRing r4(4);
  Scalar ratio = rebase_coefficient(w[3], s, {1, 3}, 1, r4);
  EXPECT_EQ(rebase_ratio(w, s, m, n, r4), specialize(ratio, w, s, r4));
}

TEST(Degeneration, PrelimitExamples) {
  for (int l = 1; l <= 3; ++l) {
    std::vector<int> s(static_cast<std::size_t>(l + 1), 1);
    s[0] = 3;
    const Degeneration D(l, SpinVector{s});
    auto target = MultiIndex::zero(l);
    target.at({1, l + 1}) = 1;
    EXPECT_EQ(D.prelimit(LoopGenerator::e(0), MultiIndex::zero(l)), ModuleVector::basis(target, zt(3)));
    EXPECT_EQ(D.limit(LoopGenerator::h(0), MultiIndex::zero(l)), ModuleVector::basis(MultiIndex::zero(l)));
  }
  const Degeneration D(1, SpinVector{{1, 2}});
  for (int m = 1; m <= 4; ++m) {
    const Scalar pre = zt(2) * (u(1, 2) * v(2 - m) - v(m)) * bracket(m) / (v(1) - v(-1));
    EXPECT_EQ(D.prelimit(LoopGenerator::e(1), mi({m})), ModuleVector::basis(mi({m - 1}), pre));
    const Scalar post = -zt(2) * v(m) * bracket(m) / (v(1) - v(-1));
    EXPECT_EQ(D.limit(LoopGenerator::e(1), mi({m})), ModuleVector::basis(mi({m - 1}), post));
    EXPECT_EQ(D.limit_unspectral(LoopGenerator::e(1), mi({m})), ModuleVector::basis(mi({m - 1}), post / zt(2)));
  }
  EXPECT_EQ(D.prelimit(LoopGenerator::e(1), mi({0})), ModuleVector());
  EXPECT_THROW(D.prelimit(LoopGenerator::f(1), mi({0})), std::invalid_argument);
  EXPECT_THROW(Degeneration(2, SpinVector{{1, 1, -2}}), std::invalid_argument);
}

TEST(Degeneration, EZeroHasNoUDependence) {
  const Degeneration D(3, SpinVector{{1, 0, 2, -1}});
  for (const auto& m : multi_indices(3, 3)) {
    EXPECT_EQ(D.prelimit(LoopGenerator::e(0), m), D.limit(LoopGenerator::e(0), m));
    const ModuleVector img = D.prelimit(LoopGenerator::e(0), m);
    for (const auto& [n, c] : img.terms()) {
      for (int i = 1; i <= 3; ++i) EXPECT_FALSE(c.num().uses(var::u(i)));
    }
  }
}

TEST(Degeneration, LimitExistsAndBorelRelationsHold) {
  const std::vector<std::vector<int>> spins = {{1, 2}, {1, -2, 2}, {1, 2, 3, 4}};
  for (int l = 1; l <= 3; ++l) {
    const Degeneration D(l, SpinVector{spins[static_cast<std::size_t>(l - 1)]});
    const Report rep = verify_degeneration(D, 4);
    EXPECT_TRUE(rep.ok()) << rep.summary();
    EXPECT_GT(rep.size(), static_cast<std::size_t>(8 * l));
  }
}

TEST(Degeneration, PrelimitSpecializesToShiftedLoopModule) {
  const std::vector<std::vector<int>> spins = {{1, 2}, {1, -2, 2}, {2, 1, 0, 1}};
  const std::vector<std::vector<Rational>> weights = {
      {Rational(-1, 2), Rational(5, 3)},
      {Rational(2), Rational(-1, 2), Rational(3, 4)},
      {Rational(1), Rational(0), Rational(-2), Rational(1, 3)},
  };
  for (int l = 1; l <= 3; ++l) {
    const auto k = static_cast<std::size_t>(l - 1);
    const Degeneration D(l, SpinVector{spins[k]});
    const Report rep = verify_prelimit_consistency(D, Weight{weights[k]}, l == 3 ? 3 : 4);
    EXPECT_TRUE(rep.ok()) << rep.summary();
    EXPECT_EQ(rep.size(), static_cast<std::size_t>(2 * (l + 1)));
  }
}

TEST(Degeneration, UnshiftedLoopModuleDoesNotMatch) {
  const Weight w{{Rational(2), Rational(-1)}};
  const SpinVector s{{1, 1}};
  const QRing ring(degeneration_root_degree(w, s));
  const Degeneration D(1, s, ring);
  const LoopModule L(VermaModule(w, ring), s);
  const ModuleVector got = D.prelimit(LoopGenerator::h(1), mi({1}))
                               .map_coefficients([&](const Scalar& c) { return specialize(c, w, s, ring); });
  EXPECT_NE(got, L.act(LoopGenerator::h(1), mi({1})));
}
