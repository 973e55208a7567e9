#include "qverma/module_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qverma {

MultiIndex MultiIndex::unit(int l, RootIndex r, int nu) {
  MultiIndex x = zero(l);
  x.at(r) = nu;
  return x;
}

int MultiIndex::rank() const {
  int l = 0;
  while (num_roots(l) < static_cast<int>(m.size())) ++l;
  return l;
}

int MultiIndex::degree() const { return std::accumulate(m.begin(), m.end(), 0); }

std::optional<MultiIndex> MultiIndex::shifted(int i, int j, int nu) const {
  if (i == j || nu == 0) return *this;
  if (i <= 0 || i > j) throw std::out_of_range("MultiIndex::shifted: bad root");
  MultiIndex r = *this;
  int& e = r.at({i, j});
  e += nu;
  if (e < 0) return std::nullopt;
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(m[k]);
  }
  return s + ")";
}

int ReducedIndex::degree() const { return std::accumulate(m.begin(), m.end(), 0); }

std::optional<ReducedIndex> ReducedIndex::shifted(int i, int nu) const {
  if (i < 1 || i > rank()) throw std::out_of_range("ReducedIndex::shifted: bad slot");
  ReducedIndex r = *this;
  int& e = r.m[static_cast<std::size_t>(i - 1)];
  e += nu;
  if (e < 0) return std::nullopt;
  return r;
}

std::string ReducedIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(m[k]);
  }
  return s + ")";
}

namespace {

void compositions(std::size_t slots, int max_total, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (cur.size() == slots) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= max_total; ++x) {
    cur.push_back(x);
    compositions(slots, max_total - x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices(int l, int T) {
  check_rank(l);
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  compositions(static_cast<std::size_t>(num_roots(l)), T, cur, raw);
  std::vector<MultiIndex> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back({std::move(r)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReducedIndex> reduced_indices(int l, int T) {
  check_rank(l);
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  compositions(static_cast<std::size_t>(l), T, cur, raw);
  std::vector<ReducedIndex> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back({std::move(r)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qverma
