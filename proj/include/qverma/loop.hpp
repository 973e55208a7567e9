#pragma once

#include <string>
#include <vector>

#include "qverma/matrix.hpp"
#include "qverma/report.hpp"
#include "qverma/rewrite.hpp"
#include "qverma/verma.hpp"

namespace qverma {

/// s_0 .. s_l of the spectral twist.
struct SpinVector {
  std::vector<int> s;

  int rank() const { return static_cast<int>(s.size()) - 1; }
  int operator[](int i) const { return s.at(static_cast<std::size_t>(i)); }
  int total() const;
};

/// e_i, f_i or q^{nu h_i}, i = 0 .. l.
struct LoopGenerator {
  enum class Kind { E, F, H };
  Kind kind = Kind::E;
  int i = 0;
  Rational nu = 1;

  static LoopGenerator e(int i) { return {Kind::E, i, 1}; }
  static LoopGenerator f(int i) { return {Kind::F, i, 1}; }
  static LoopGenerator h(int i, const Rational& nu = 1) { return {Kind::H, i, nu}; }
  /// "e0", "f2", "h1"; a trailing "-" on h means nu = -1.
  static LoopGenerator parse(const std::string& id);
  std::string id() const;
};

/// Jimbo's homomorphism into U_q(gl_{l+1}).
AlgebraElement jimbo(const PbwAlgebra& alg, const LoopGenerator& g);
/// Scalar by which Gamma_zeta rescales g: zeta^{s_i}, zeta^{-s_i} or 1.
Scalar gamma_twist(const LoopGenerator& g, const SpinVector& spins);

/// Evaluation module (pi^lambda o epsilon o Gamma_zeta) on the Verma basis.
class LoopModule {
 public:
  LoopModule(VermaModule verma, SpinVector spins);

  int rank() const { return verma_.rank(); }
  const VermaModule& verma() const { return verma_; }
  const SpinVector& spins() const { return spins_; }
  const QRing& ring() const { return verma_.ring(); }

  /// Exponent of q^{h_i} on v_m.
  Rational h_exponent(int i, const MultiIndex& m) const;
  ModuleVector act(const LoopGenerator& g, const MultiIndex& m) const;
  ModuleVector act(const LoopGenerator& g, const ModuleVector& v) const;

  BasisAction<MultiIndex> generator(const std::string& id) const;
  /// e_0..e_l, f_0..f_l, h_0..h_l
  std::vector<std::string> generator_ids() const;
  GeneratorMatrix<MultiIndex> matrix(const std::string& id, int T) const;

 private:
  VermaModule verma_;
  SpinVector spins_;
};

/// Affine defining relations, divided-power Serre relations and q^{nu c} = 1
/// on the truncation of degree <= T.
Report verify_loop_relations(const LoopModule& L, int T);
/// act(g) against Gamma_zeta-scalar times the oracle action of jimbo(g), and
/// zeta-homogeneity of every coefficient.
Report verify_loop_factorization(const LoopModule& L, const PbwAlgebra& alg, int T);

}  // namespace qverma
