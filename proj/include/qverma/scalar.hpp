#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qverma {

using Rational = mpq_class;

/// Upper bound on the number of formal variables in one session.
constexpr std::size_t kMaxVars = 12;

/// Exponent vector, one slot per variable of the active VarSet.
using Exponents = std::array<int32_t, kMaxVars>;

/// Slots of the standard variable set: v (q = v^D), zeta, zeta-tilde, u1..u9.
namespace var {
constexpr std::size_t kV = 0;
constexpr std::size_t kZeta = 1;
constexpr std::size_t kZetaTilde = 2;
constexpr std::size_t u(int i) { return 2 + static_cast<std::size_t>(i); }
}  // namespace var

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered list of variable names. The order fixes the lexicographic
/// monomial order used for canonical forms.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  /// v, zeta, zt, u1, ..., u9
  static const VarSet& standard();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t slot) const { return names_.at(slot); }
  std::optional<std::size_t> slot(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Laurent polynomial with rational coefficients. Terms are kept sorted by
/// ascending lexicographic exponent order with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class LaurentPoly {
 public:
  using Term = std::pair<Exponents, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Exponents& e, const Rational& c = 1);
  static LaurentPoly variable(std::size_t slot, int32_t power = 1);
  /// Takes ownership of unsorted terms, merging duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  /// Largest term under the lex order.
  const Term& leading() const { return terms_.back(); }

  bool uses(std::size_t slot) const;
  int32_t min_exponent(std::size_t slot) const;
  int32_t max_exponent(std::size_t slot) const;
  /// Componentwise minimum exponent over all terms.
  Exponents min_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const Rational& c) const;
  /// Multiplies by the monomial x^shift.
  LaurentPoly shifted(const Exponents& shift) const;
  /// Replaces the exponent of `slot` by its negative (x -> x^-1).
  LaurentPoly invert_variable(std::size_t slot) const;

  /// Quotient if `divisor` divides this polynomial exactly in the Laurent ring.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  std::complex<double> eval(const std::array<std::complex<double>, kMaxVars>& at) const;
  std::string to_string(const VarSet& vars = VarSet::standard()) const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor in Q[x1^±1, ..., xn^±1], normalised to have
/// non-negative exponents, no monomial factor and leading coefficient 1.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact rational function num/den over Q. The pair is always normalised:
/// den is a monic polynomial (positive exponents, no monomial factor) coprime
/// to num, which makes equality structural.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static Scalar fraction(LaurentPoly num, LaurentPoly den);
  static Scalar monomial(const Exponents& e, const Rational& c = 1);
  static Scalar variable(std::size_t slot, int32_t power = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// True iff the value is c * monomial for a nonzero rational c.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;
  /// Integer power; negative powers require a nonzero value.
  Scalar pow(int64_t n) const;
  /// x -> x^-1 in one variable, applied to numerator and denominator.
  Scalar invert_variable(std::size_t slot) const;
  /// Substitutes a value for one variable. Throws ArithmeticError when a
  /// negative power of the variable meets a zero value.
  Scalar substitute(std::size_t slot, const Scalar& value) const;
  /// True iff the value is a polynomial (no negative powers, no
  /// denominator dependence) in the given variable.
  bool is_polynomial_in(std::size_t slot) const;
  /// Exponent of `slot` if every numerator term has the same exponent and
  /// the denominator is free of it.
  std::optional<int32_t> homogeneous_degree(std::size_t slot) const;

  std::complex<double> eval(const std::array<std::complex<double>, kMaxVars>& at) const;

  /// "num" or "(num)/(den)", terms written as `c*v^a*zeta^b`.
  std::string to_string(const VarSet& vars = VarSet::standard()) const;
  static Scalar parse(std::string_view text, const VarSet& vars = VarSet::standard());

 private:
  Scalar(LaurentPoly num, LaurentPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

/// Session-level deformation data: q = v^D for a fixed positive integer D,
/// chosen so that every q-power met in a computation is a Laurent monomial.
class QRing {
 public:
  explicit QRing(int64_t root_degree = 1);

  int64_t root_degree() const { return root_degree_; }
  /// v-exponent of q^e; throws if D*e is not an integer.
  int32_t v_exponent(const Rational& e) const;
  Scalar q_pow(const Rational& e) const;
  /// kappa_q = q - q^-1
  const Scalar& kappa() const { return kappa_; }
  const Scalar& kappa_inv() const { return kappa_inv_; }

  /// [nu]_q; a Laurent polynomial in q for integral nu.
  Scalar qnum(int64_t nu) const;
  /// kappa^-1 (P q^nu - P^-1 q^-nu) for an invertible monomial P,
  /// i.e. [X + nu]_q with q^X = P.
  Scalar qnum(int64_t nu, const Scalar& shift) const;
  /// [n]_q! with [0]_q! = 1.
  Scalar qfactorial(int64_t n) const;

  /// Evaluates with a per-variable assignment. The key "q" may be given
  /// instead of "v", in which case v = q^(1/D) on the principal branch.
  /// The caller is responsible for choosing q away from roots of unity.
  std::complex<double> eval_numeric(const Scalar& s,
                                    const std::map<std::string, std::complex<double>>& assignment,
                                    const VarSet& vars = VarSet::standard()) const;

 private:
  int64_t root_degree_;
  Scalar kappa_;
  Scalar kappa_inv_;
};

/// Least common multiple of the denominators of the given rationals.
int64_t denominator_lcm(const std::vector<Rational>& values);

}  // namespace qverma
