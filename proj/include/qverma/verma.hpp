#pragma once

#include <string>
#include <vector>

#include "qverma/cartan.hpp"
#include "qverma/matrix.hpp"
#include "qverma/module_vector.hpp"
#include "qverma/report.hpp"
#include "qverma/rewrite.hpp"
#include "qverma/scalar.hpp"

namespace qverma {

struct VermaOptions {
  /// Perturbs one coefficient of the E_i action. Exists so that the
  /// verification pipeline can be shown to fail.
  bool inject_fault = false;
};

/// Smallest D such that every q^{lambda_i} is a Laurent monomial in v = q^{1/D}.
int64_t root_degree_for(const Weight& lambda);

/// Verma module over U_q(gl_{l+1}) with highest weight lambda, basis
/// v_m = F_12^{m_12} F_13^{m_13} ... F_{l,l+1}^{m_{l,l+1}} v_0.
class VermaModule {
 public:
  VermaModule(Weight lambda, QRing ring, VermaOptions opt = {});
  explicit VermaModule(Weight lambda) : VermaModule(lambda, QRing(root_degree_for(lambda))) {}

  int rank() const { return l_; }
  const Weight& weight() const { return lambda_; }
  const QRing& ring() const { return ring_; }

  /// Eigenvalue exponent of K_i on v_m.
  Rational k_exponent(int i, const MultiIndex& m) const;
  /// Eigenvalue exponent of H_i = K_i - K_{i+1} on v_m.
  Rational h_exponent(int i, const MultiIndex& m) const;

  ModuleVector K(int i, const Rational& nu, const MultiIndex& m) const;
  ModuleVector H(int i, const Rational& nu, const MultiIndex& m) const;
  ModuleVector F(int i, const MultiIndex& m) const;
  ModuleVector E(int i, const MultiIndex& m) const;
  ModuleVector F_top(const MultiIndex& m) const;
  ModuleVector E_top(const MultiIndex& m) const;

  ModuleVector act_K(int i, const Rational& nu, const ModuleVector& v) const;
  ModuleVector act_H(int i, const Rational& nu, const ModuleVector& v) const;
  ModuleVector act_F(int i, const ModuleVector& v) const;
  ModuleVector act_E(int i, const ModuleVector& v) const;
  ModuleVector act_F_top(const ModuleVector& v) const;
  ModuleVector act_E_top(const ModuleVector& v) const;

  /// Generator ids: "E<i>", "F<i>", "K<i>", "H<i>" (nu = 1), "Ftop", "Etop".
  BasisAction<MultiIndex> generator(const std::string& id) const;
  std::vector<std::string> generator_ids() const;
  GeneratorMatrix<MultiIndex> matrix(const std::string& id, int T) const;

 private:
  Scalar qpow(const Rational& e) const { return ring_.q_pow(e); }

  int l_;
  Weight lambda_;
  QRing ring_;
  VermaOptions opt_;
};

/// Defining relations of U_q(gl_{l+1}) on the truncated module of degree <= T.
Report verify_defining(const VermaModule& V, int T);
/// Closed-form actions against the PBW oracle on all basis vectors of degree <= T.
Report verify_against_oracle(const VermaModule& V, const PbwAlgebra& alg, int T);

}  // namespace qverma
