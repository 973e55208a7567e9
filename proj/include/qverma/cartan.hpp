#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qverma/scalar.hpp"

namespace qverma {

void check_rank(int l);

/// (i, j) with 1 <= i < j <= l + 1, ordered colexicographically.
struct RootIndex {
  int i = 1;
  int j = 2;

  friend bool operator==(const RootIndex&, const RootIndex&) = default;
  friend std::strong_ordering operator<=>(const RootIndex& a, const RootIndex& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
  std::string to_string() const;
};

RootIndex make_root(int l, int i, int j);

/// Position of (i, j) in the colexicographic enumeration of all roots.
inline int colex_position(RootIndex r) { return (r.j - 1) * (r.j - 2) / 2 + (r.i - 1); }
inline int num_roots(int l) { return l * (l + 1) / 2; }
std::vector<RootIndex> colex_enumerate(int l);

int c_matrix(int l, int i, int j);
int a_matrix(int l, int i, int j);
int affine_a_matrix(int l, int i, int j);

enum class Branch { I, II, III, IV, V, VI };
std::string to_string(Branch b);
/// Requires p < r.
Branch classify_branch(RootIndex p, RootIndex r);

/// Highest weight components lambda_1 .. lambda_{l+1}.
struct Weight {
  std::vector<Rational> lambda;

  int rank() const { return static_cast<int>(lambda.size()) - 1; }
  const Rational& operator[](int i) const { return lambda.at(static_cast<std::size_t>(i - 1)); }
};

/// X = sum_k nu_k K_k, k = 1 .. l+1, the exponent of q^X.
struct CartanExp {
  std::vector<Rational> nu;

  static CartanExp zero(int l) { return {std::vector<Rational>(static_cast<std::size_t>(l + 1))}; }
  static CartanExp K(int l, int i, const Rational& c = 1);
  /// H_{ij} = K_i - K_j
  static CartanExp H(int l, int i, int j, const Rational& c = 1);

  bool is_zero() const;
  const Rational& operator[](int k) const { return nu.at(static_cast<std::size_t>(k - 1)); }
  Rational& operator[](int k) { return nu.at(static_cast<std::size_t>(k - 1)); }
  CartanExp& operator+=(const CartanExp& o);
  friend CartanExp operator+(CartanExp a, const CartanExp& b) { return a += b; }
  CartanExp operator-() const;
  friend CartanExp operator*(const Rational& c, CartanExp x) {
    for (auto& v : x.nu) v *= c;
    return x;
  }
  friend bool operator==(const CartanExp&, const CartanExp&) = default;
  friend bool operator<(const CartanExp& a, const CartanExp& b) { return a.nu < b.nu; }

  /// <lambda, X>
  Rational evaluate(const Weight& w) const;
  std::string to_string() const;
};

/// <alpha_{mn}, X> = nu_m - nu_n
Rational pairing(RootIndex alpha, const CartanExp& x);

/// Tuples (i_0 = 1, i_1, ..., i_k, i_{k+1} = l + 1), strictly increasing.
std::vector<std::vector<int>> lambda_enumerate(int l, int k);
/// Pairs of such tuples with j_{a-1} < i_a <= j_a for a = 1..k.
std::vector<std::pair<std::vector<int>, std::vector<int>>> psi_enumerate(int l, int k);
/// Pairs of such tuples with i_a <= j_a only; the index range of the
/// E_{1,l+1} action.
std::vector<std::pair<std::vector<int>, std::vector<int>>> ladder_enumerate(int l, int k);

}  // namespace qverma
