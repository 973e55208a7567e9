#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qverma/cartan.hpp"
#include "qverma/scalar.hpp"

namespace qverma {

/// Exponents m_{ij} of a Verma basis vector, stored in colex position order.
/// m_{ii} and m_{0j} read as 0.
struct MultiIndex {
  std::vector<int> m;

  static MultiIndex zero(int l) { return {std::vector<int>(static_cast<std::size_t>(num_roots(l)))}; }
  static MultiIndex unit(int l, RootIndex r, int nu = 1);

  int rank() const;
  int degree() const;
  int operator()(int i, int j) const {
    if (i <= 0 || i >= j) return 0;
    return m[static_cast<std::size_t>(colex_position({i, j}))];
  }
  int& at(RootIndex r) { return m.at(static_cast<std::size_t>(colex_position(r))); }

  /// m + nu * eps_{ij}; eps_{ii} = 0. Empty if an entry would turn negative.
  std::optional<MultiIndex> shifted(int i, int j, int nu) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Graded order: total degree first, then lexicographic on the colex tuple.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.m < b.m;
  }
};

/// Occupation numbers m_1 .. m_l of the reduced (quotient / Fock) basis.
struct ReducedIndex {
  std::vector<int> m;

  static ReducedIndex zero(int l) { return {std::vector<int>(static_cast<std::size_t>(l))}; }
  int rank() const { return static_cast<int>(m.size()); }
  int degree() const;
  int operator()(int i) const { return i >= 1 && i <= rank() ? m[static_cast<std::size_t>(i - 1)] : 0; }
  std::optional<ReducedIndex> shifted(int i, int nu) const;
  std::string to_string() const;

  friend bool operator==(const ReducedIndex&, const ReducedIndex&) = default;
  friend bool operator<(const ReducedIndex& a, const ReducedIndex& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.m < b.m;
  }
};

/// Finite linear combination of basis vectors.
template <class Index>
class BasicVector {
 public:
  using Map = std::map<Index, Scalar>;

  BasicVector() = default;
  static BasicVector basis(const Index& idx, Scalar c = Scalar(1)) {
    BasicVector v;
    v.add(idx, c);
    return v;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(const Index& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicVector& operator+=(const BasicVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  BasicVector& operator-=(const BasicVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  BasicVector& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend BasicVector operator+(BasicVector a, const BasicVector& b) { return a += b; }
  friend BasicVector operator-(BasicVector a, const BasicVector& b) { return a -= b; }
  friend BasicVector operator*(const Scalar& c, BasicVector v) { return v *= c; }
  friend bool operator==(const BasicVector&, const BasicVector&) = default;

  template <class F>
  BasicVector map_coefficients(F&& f) const {
    BasicVector r;
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

  std::string to_string(const VarSet& vars = VarSet::standard()) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string(vars) + ") v" + k.to_string();
    }
    return s;
  }

 private:
  Map terms_;
};

using ModuleVector = BasicVector<MultiIndex>;
using ReducedVector = BasicVector<ReducedIndex>;

template <class Index>
using BasisAction = std::function<BasicVector<Index>(const Index&)>;

/// Linear extension of a basis action.
template <class Index>
BasicVector<Index> apply(const BasisAction<Index>& f, const BasicVector<Index>& v) {
  BasicVector<Index> out;
  for (const auto& [idx, c] : v.terms()) {
    BasicVector<Index> img = f(idx);
    if (!c.is_one()) img *= c;
    out += img;
  }
  return out;
}

/// All multi-indices of rank l with degree <= T, in graded order.
std::vector<MultiIndex> multi_indices(int l, int T);
std::vector<ReducedIndex> reduced_indices(int l, int T);

}  // namespace qverma
