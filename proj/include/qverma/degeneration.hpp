#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qverma/loop.hpp"

namespace qverma {

/// <xi, h_i> for i = 0 .. l.
struct ShiftElement {
  std::vector<Rational> values;

  static ShiftElement zero(int l) { return {std::vector<Rational>(static_cast<std::size_t>(l + 1))}; }
  int rank() const { return static_cast<int>(values.size()) - 1; }
  const Rational& operator[](int i) const { return values.at(static_cast<std::size_t>(i)); }
  /// <xi, c> = sum of all values
  Rational central() const;
};

/// <xi, h_0> = lambda_1 - lambda_{l+1}, <xi, h_i> = lambda_{i+1} - lambda_i.
ShiftElement weight_shift(const Weight& lambda);

/// Action of the positive Borel generators e_i, q^{nu h_i}.
template <class Index>
using BorelAction = std::function<BasicVector<Index>(const LoopGenerator&, const Index&)>;

/// phi[xi]: e_i unchanged, q^{nu h_i} multiplied by q^{nu <xi, h_i>}.
/// Throws if <xi, c> != 0.
template <class Index>
BorelAction<Index> shift_representation(BorelAction<Index> rep, ShiftElement xi, QRing ring) {
  if (xi.central() != 0) throw std::invalid_argument("shift element violates <xi, c> = 0");
  return [rep = std::move(rep), xi = std::move(xi), ring = std::move(ring)](const LoopGenerator& g, const Index& m) {
    if (g.kind == LoopGenerator::Kind::F) throw std::invalid_argument("f_i is not in the positive Borel subalgebra");
    BasicVector<Index> out = rep(g, m);
    if (g.kind == LoopGenerator::Kind::H) out *= ring.q_pow(g.nu * xi[g.i]);
    return out;
  };
}

/// Smallest root degree covering lambda and the rational exponents
/// (2 lambda_{l+1} - l) s_k / s of the rebasing.
int64_t degeneration_root_degree(const Weight& lambda, const SpinVector& spins);

/// c_{m + nu eps_{ij}} / c_m with u_k standing for q^{lambda_k - lambda_{k+1}}.
Scalar rebase_coefficient(const Rational& lambda_last, const SpinVector& spins, RootIndex target, int nu,
                          const QRing& ring);
/// c_n / c_m for the given weight, as a power of q.
Scalar rebase_ratio(const Weight& lambda, const SpinVector& spins, const MultiIndex& m, const MultiIndex& n,
                    const QRing& ring);

/// The shifted, rebased Borel module and its limit lambda_i - lambda_{i+1} -> -infinity.
/// Coefficients live in v, zeta-tilde and u_1 .. u_l.
class Degeneration {
 public:
  Degeneration(int l, SpinVector spins, QRing ring = QRing());

  int rank() const { return l_; }
  const SpinVector& spins() const { return spins_; }
  const QRing& ring() const { return ring_; }

  /// Throws ArithmeticError on a negative u-power.
  ModuleVector prelimit(const LoopGenerator& g, const MultiIndex& m) const;
  ModuleVector limit(const LoopGenerator& g, const MultiIndex& m) const;
  /// The limit with every zeta-tilde power dropped.
  ModuleVector limit_unspectral(const LoopGenerator& g, const MultiIndex& m) const;

  /// ids "e<i>", "h<i>", "h<i>-"
  BasisAction<MultiIndex> generator(const std::string& id, bool take_limit) const;
  std::vector<std::string> generator_ids() const;
  GeneratorMatrix<MultiIndex> matrix(const std::string& id, int T, bool take_limit) const;

 private:
  ModuleVector act(const LoopGenerator& g, const MultiIndex& m, bool take_limit, bool spectral) const;

  int l_;
  SpinVector spins_;
  QRing ring_;
};

/// Substitutes u_i = q^{lambda_i - lambda_{i+1}} and zeta-tilde = q^{(2 lambda_{l+1} - l)/s} zeta.
Scalar specialize(const Scalar& c, const Weight& lambda, const SpinVector& spins, const QRing& ring);

/// u-polynomiality, limit agreement and Borel relations of both modules.
Report verify_degeneration(const Degeneration& D, int T);
/// Pre-limit module against the shifted, rebased loop module at a concrete weight.
Report verify_prelimit_consistency(const Degeneration& D, const Weight& lambda, int T);

}  // namespace qverma
