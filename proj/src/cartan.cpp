#include "qverma/cartan.hpp"

#include <sstream>
#include <stdexcept>

namespace qverma {

void check_rank(int l) {
  if (l < 1) throw std::invalid_argument("rank l must be at least 1");
}

std::string RootIndex::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

RootIndex make_root(int l, int i, int j) {
  if (i < 1 || i >= j || j > l + 1) {
    throw std::out_of_range("root index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside Lambda_" + std::to_string(l));
  }
  return {i, j};
}

std::vector<RootIndex> colex_enumerate(int l) {
  check_rank(l);
  std::vector<RootIndex> out;
  out.reserve(static_cast<std::size_t>(num_roots(l)));
  for (int j = 2; j <= l + 1; ++j) {
    for (int i = 1; i < j; ++i) out.push_back({i, j});
  }
  return out;
}

int c_matrix(int l, int i, int j) {
  if (i < 1 || i > l + 1 || j < 1 || j > l) throw std::out_of_range("c_matrix index");
  return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
}

int a_matrix(int l, int i, int j) {
  if (i < 1 || i > l || j < 1 || j > l) throw std::out_of_range("a_matrix index");
  return c_matrix(l, i, j) - c_matrix(l, i + 1, j);
}

int affine_a_matrix(int l, int i, int j) {
  check_rank(l);
  if (i < 0 || i > l || j < 0 || j > l) throw std::out_of_range("affine_a_matrix index");
  if (i == j) return 2;
  if (l == 1) return -2;
  const int d = (i - j + l + 1) % (l + 1);
  return (d == 1 || d == l) ? -1 : 0;
}

std::string to_string(Branch b) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(b)];
}

Branch classify_branch(RootIndex p, RootIndex r) {
  if (!(p < r)) {
    throw std::invalid_argument("classify_branch needs " + p.to_string() + " < " + r.to_string());
  }
  const int i = p.i, j = p.j, m = r.i;
  if (p.j == r.j) return Branch::III;
  if (i == m) return Branch::I;
  if (m < i) return Branch::II;
  if (m < j) return Branch::IV;
  if (m == j) return Branch::V;
  return Branch::VI;
}

CartanExp CartanExp::K(int l, int i, const Rational& c) {
  CartanExp x = zero(l);
  x[i] = c;
  return x;
}

CartanExp CartanExp::H(int l, int i, int j, const Rational& c) {
  CartanExp x = zero(l);
  x[i] += c;
  x[j] -= c;
  return x;
}

bool CartanExp::is_zero() const {
  for (const auto& v : nu) {
    if (v != 0) return false;
  }
  return true;
}

CartanExp& CartanExp::operator+=(const CartanExp& o) {
  if (nu.size() != o.nu.size()) throw std::invalid_argument("CartanExp rank mismatch");
  for (std::size_t k = 0; k < nu.size(); ++k) nu[k] += o.nu[k];
  return *this;
}

CartanExp CartanExp::operator-() const {
  CartanExp r = *this;
  for (auto& v : r.nu) v = -v;
  return r;
}

Rational CartanExp::evaluate(const Weight& w) const {
  if (w.lambda.size() != nu.size()) throw std::invalid_argument("weight rank mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < nu.size(); ++k) s += nu[k] * w.lambda[k];
  return s;
}

std::string CartanExp::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (nu[k] == 0) continue;
    if (!first) os << (nu[k] > 0 ? "+" : "");
    if (nu[k] == -1) {
      os << "-";
    } else if (nu[k] != 1) {
      os << nu[k].get_str();
    }
    os << "K" << k + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

Rational pairing(RootIndex alpha, const CartanExp& x) { return x[alpha.i] - x[alpha.j]; }

namespace {

void extend(int l, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    cur.push_back(l + 1);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = cur.back() + 1; x <= l + 1 - remaining; ++x) {
    cur.push_back(x);
    extend(l, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> lambda_enumerate(int l, int k) {
  check_rank(l);
  if (k < 0 || k > l - 1) throw std::out_of_range("k must satisfy 0 <= k <= l - 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur{1};
  extend(l, k, cur, out);
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> psi_enumerate(int l, int k) {
  const auto tuples = lambda_enumerate(l, k);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& i : tuples) {
    for (const auto& j : tuples) {
      bool ok = true;
      for (int a = 1; a <= k && ok; ++a) ok = j[a - 1] < i[a] && i[a] <= j[a];
      if (ok) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> ladder_enumerate(int l, int k) {
  const auto tuples = lambda_enumerate(l, k);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& i : tuples) {
    for (const auto& j : tuples) {
      bool ok = true;
      for (int a = 1; a <= k && ok; ++a) ok = i[a] <= j[a];
      if (ok) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace qverma
