#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qverma/degeneration.hpp"

namespace qverma {

/// p_{ij}, 1 <= i < j <= l, in colex order.
struct PTuple {
  int l = 1;
  std::vector<int> p;

  static PTuple zero(int l);
  static PTuple parse(int l, const std::string& text);

  int operator()(int i, int j) const {
    if (i <= 0 || i >= j) return 0;
    return p.at(static_cast<std::size_t>(colex_position({i, j})));
  }
  int& at(int i, int j) { return p.at(static_cast<std::size_t>(colex_position({i, j}))); }

  /// sum_{k<=i} (-1)^{i-k} p_{kj} >= 0 for all 1 <= i < j <= l
  bool admissible() const;
  /// The forced entries m_{ij} = sum_{k<=i} (-1)^{i-k} p_{kj}, j <= l.
  int alternating_sum(int i, int j) const;
  /// Total degree of the forced entries.
  int forced_degree() const;
  std::string to_string() const;

  friend bool operator==(const PTuple&, const PTuple&) = default;
};

enum class QuotientOrder {
  /// p' < p iff every entry is strictly smaller
  Strict,
  /// p' <= p entrywise and p' != p
  Componentwise,
};

bool precedes(const PTuple& a, const PTuple& b, QuotientOrder order);
/// All admissible tuples with entries <= bound.
std::vector<PTuple> admissible_tuples(int l, int bound);
std::vector<PTuple> tuples_below(const PTuple& p, QuotientOrder order);

bool in_submodule(const PTuple& p, const MultiIndex& m);
std::vector<MultiIndex> submodule_basis(const PTuple& p, int T);

/// rho'': the limit module without spectral parameter.
ModuleVector act_rho2(int l, const LoopGenerator& g, const MultiIndex& m, const QRing& ring);

/// rho' on the reduced basis. With spins, e_i picks up zeta^{s_i}.
ReducedVector act_quotient(int l, const LoopGenerator& g, const ReducedIndex& m, const QRing& ring,
                           const SpinVector* spins = nullptr);
ReducedVector act_quotient(int l, const LoopGenerator& g, const ReducedVector& v, const QRing& ring,
                           const SpinVector* spins = nullptr);
/// ids "e<i>", "h<i>", "h<i>-"
GeneratorMatrix<ReducedIndex> quotient_matrix(int l, const std::string& id, int T, const QRing& ring,
                                              const SpinVector* spins = nullptr);

ShiftElement xi_p(const PTuple& p);

/// rho''-images of submodule vectors of degree <= T-1 stay in the submodule.
Report verify_invariance(const PTuple& p, int T, const QRing& ring = QRing());
/// Borel relations of rho' on the reduced truncation.
Report verify_quotient_relations(int l, int T, const QRing& ring = QRing());
/// W''_p modulo the union of the smaller submodules against W'[xi_p].
/// Requires T above the total of the forced entries of p.
Report verify_quotient_iso(const PTuple& p, int T, QuotientOrder order = QuotientOrder::Strict,
                           const QRing& ring = QRing());

}  // namespace qverma
