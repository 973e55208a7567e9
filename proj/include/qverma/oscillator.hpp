#pragma once

#include <map>
#include <string>
#include <vector>

#include "qverma/quotient.hpp"

namespace qverma {

/// One canonical monomial of Osc_q^{(x) l}: in slot i, (b^dag)^d q^{x N} for
/// d >= 0 and b^{-d} q^{x N} for d < 0. Mixed b^dag b words never occur:
/// they are rewritten into q^{N}-exponentials through [N]_q and [N+1]_q.
struct OscWord {
  std::vector<int> d;
  std::vector<Rational> x;

  static OscWord one(int l) {
    return {std::vector<int>(static_cast<std::size_t>(l)), std::vector<Rational>(static_cast<std::size_t>(l))};
  }
  int rank() const { return static_cast<int>(d.size()); }
  std::string to_string() const;

  friend bool operator==(const OscWord&, const OscWord&) = default;
  friend bool operator<(const OscWord& a, const OscWord& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.x < b.x;
  }
};

using FockVector = ReducedVector;

class OscElement {
 public:
  using Map = std::map<OscWord, Scalar>;

  OscElement() = default;
  static OscElement word(OscWord w, const Scalar& c = Scalar(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const OscWord& w, const Scalar& c);

  OscElement& operator+=(const OscElement& o);
  OscElement& operator-=(const OscElement& o);
  OscElement& operator*=(const Scalar& c);
  friend OscElement operator+(OscElement a, const OscElement& b) { return a += b; }
  friend OscElement operator-(OscElement a, const OscElement& b) { return a -= b; }
  friend OscElement operator*(const Scalar& c, OscElement a) { return a *= c; }
  friend bool operator==(const OscElement&, const OscElement&) = default;

  std::string to_string() const;

 private:
  Map terms_;
};

class OscAlgebra {
 public:
  OscAlgebra(int l, QRing ring = QRing());

  int rank() const { return l_; }
  const QRing& ring() const { return ring_; }

  OscElement one() const { return OscElement::word(OscWord::one(l_)); }
  OscElement b(int i) const;
  OscElement bdag(int i) const;
  /// q^{x N_i}
  OscElement qN(int i, const Rational& x) const;
  /// q^{sum_i x_i N_i}
  OscElement qN(const std::vector<Rational>& x) const;
  /// [N_i + c]_q
  OscElement qnum_N(int i, int c) const;

  OscElement mul(const OscElement& a, const OscElement& b) const;
  OscElement mul(std::initializer_list<OscElement> factors) const;
  OscElement pow(const OscElement& a, int n) const;

  /// b -> b^dag, b^dag -> -b, q^{x N} -> q^{-x(N+1)}, slotwise.
  OscElement exchange(const OscElement& a) const;

  FockVector chi_plus(const OscElement& a, const FockVector& v) const;
  FockVector chi_minus(const OscElement& a, const FockVector& v) const;

  /// rho on e_i and q^{nu h_i}.
  OscElement rho(const LoopGenerator& g) const;

 private:
  // product of two single-slot monomials as a list of ((d, x), coeff)
  std::vector<std::pair<std::pair<int, Rational>, Scalar>> slot_mul(int d1, const Rational& x1, int d2,
                                                                    const Rational& x2) const;
  FockVector chi(const OscElement& a, const FockVector& v, bool plus) const;

  int l_;
  QRing ring_;
};

/// Osc_q defining relations in canonical form, associativity on sample words,
/// chi^+/chi^- representation property and the exchange intertwining.
Report verify_oscillator_algebra(const OscAlgebra& A, int T);
/// Images of the U_q(b_+) relations under rho vanish in Osc_q^{(x) l}.
Report verify_rho_homomorphism(const OscAlgebra& A);
/// chi^+ o rho o Gamma_zeta against act_quotient on Fock vectors of degree <= T.
Report verify_oscillator_factorization(const OscAlgebra& A, const SpinVector& spins, int T);

}  // namespace qverma
