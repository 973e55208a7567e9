#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qverma/cartan.hpp"
#include "qverma/module_vector.hpp"
#include "qverma/report.hpp"
#include "qverma/scalar.hpp"

namespace qverma {

struct Letter {
  enum class Kind : std::uint8_t { F, Cartan, E };

  Kind kind = Kind::Cartan;
  RootIndex root;
  CartanExp x;

  static Letter E(RootIndex r) { return {Kind::E, r, {}}; }
  static Letter F(RootIndex r) { return {Kind::F, r, {}}; }
  static Letter cartan(CartanExp x) { return {Kind::Cartan, {}, std::move(x)}; }

  bool is_simple() const { return kind == Kind::Cartan || root.j == root.i + 1; }
  std::string to_string() const;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.kind == b.kind && (a.kind == Kind::Cartan ? a.x == b.x : a.root == b.root);
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Kind::Cartan) return a.x < b.x;
    return a.root < b.root;
  }
};

using Word = std::vector<Letter>;
std::string to_string(const Word& w);

/// Element of the free algebra on root vectors and Cartan exponentials.
class AlgebraElement {
 public:
  using Map = std::map<Word, Scalar>;

  AlgebraElement() = default;
  AlgebraElement(const Scalar& c) { add({}, c); }  // NOLINT(google-explicit-constructor)
  static AlgebraElement word(Word w, const Scalar& c = Scalar(1)) {
    AlgebraElement a;
    a.add(std::move(w), c);
    return a;
  }
  static AlgebraElement letter(Letter l) { return word({std::move(l)}); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add(Word w, const Scalar& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  AlgebraElement pow(int n) const;

  std::string to_string(const VarSet& vars = VarSet::standard()) const;

 private:
  Map terms_;
};

class RewriteError : public std::runtime_error {
 public:
  RewriteError(const std::string& what, std::string trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::string& trace() const { return trace_; }

 private:
  std::string trace_;
};

enum class Strategy { Leftmost, Rightmost };

struct RewriteOptions {
  Strategy strategy = Strategy::Leftmost;
  std::size_t step_budget = 1'000'000;
};

/// U_q(gl_{l+1}) presented by Cartan-Weyl generators, with the PBW
/// normal-ordering oracle.
class PbwAlgebra {
 public:
  PbwAlgebra(int l, QRing ring);

  int rank() const { return l_; }
  const QRing& ring() const { return ring_; }

  AlgebraElement E(int i, int j) const;
  AlgebraElement F(int i, int j) const;
  AlgebraElement E(int i) const { return E(i, i + 1); }
  AlgebraElement F(int i) const { return F(i, i + 1); }
  AlgebraElement q_pow(const CartanExp& x) const;
  AlgebraElement K(int i, const Rational& nu = 1) const { return q_pow(CartanExp::K(l_, i, nu)); }
  AlgebraElement H(int i, const Rational& nu = 1) const { return q_pow(CartanExp::H(l_, i, i + 1, nu)); }

  /// Root vectors expanded through the q-commutator recursion into simple generators.
  AlgebraElement root_vector_E(int i, int j) const;
  AlgebraElement root_vector_F(int i, int j) const;
  /// Replaces every higher root letter by its expansion.
  AlgebraElement expand(const AlgebraElement& x) const;

  /// PBW normal form using the full commutation tables.
  AlgebraElement normal_order(const AlgebraElement& x, const RewriteOptions& opt = {}) const;
  /// Normal form from the defining relations only: the triangular
  /// rewriting with [E_i, F_j] and Cartan moves, then reduction of the
  /// E- and F-words modulo the Serre ideal. Higher root letters are expanded.
  AlgebraElement bootstrap_normal_order(const AlgebraElement& x) const;

  static bool is_normal(const Word& w);

  /// Action on the highest weight vector of the Verma module.
  ModuleVector act_on_highest_weight(const AlgebraElement& x, const Weight& lambda) const;
  /// Same for an element already in normal form.
  ModuleVector evaluate_normal(const AlgebraElement& nf, const Weight& lambda) const;

  /// The monomial F_{12}^{m_12} F_{13}^{m_13} ... F_{l,l+1}^{m_{l,l+1}}.
  AlgebraElement f_monomial(const MultiIndex& m) const;

 private:
  class SerreReducer;

  int l_;
  QRing ring_;
  std::shared_ptr<SerreReducer> serre_;
};

Report verify_serre(const PbwAlgebra& alg);
Report verify_yamane_rules(const PbwAlgebra& alg);
Report verify_appendix_lemmas(const PbwAlgebra& alg, int max_power);

}  // namespace qverma
