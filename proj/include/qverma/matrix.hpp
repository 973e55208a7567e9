#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qverma/module_vector.hpp"
#include "qverma/parallel.hpp"

namespace qverma {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExportOptions {
  const VarSet* vars = &VarSet::standard();
  /// Adds the zeta degree of each entry as a fourth element.
  bool zeta_degree = false;
  /// When set, entries are written as [re, im] using this assignment.
  std::optional<std::map<std::string, std::complex<double>>> numeric;
  const QRing* ring = nullptr;
};

/// Sparse matrix of a basis action on the truncation {degree <= T}.
/// Columns whose image leaves the truncation are flagged in overflow();
/// their in-range entries are kept.
template <class Index>
class GeneratorMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, Scalar>>;

  GeneratorMatrix(std::string name, std::vector<Index> basis, int max_degree, const BasisAction<Index>& action)
      : name_(std::move(name)), basis_(std::move(basis)), max_degree_(max_degree) {
    for (std::size_t k = 0; k < basis_.size(); ++k) position_.emplace(basis_[k], k);
    columns_.resize(basis_.size());
    std::vector<char> overflow(basis_.size(), 0);
    parallel_for(basis_.size(), [&](std::size_t c) {
      const BasicVector<Index> img = action(basis_[c]);
      for (const auto& [idx, coeff] : img.terms()) {
        auto it = position_.find(idx);
        if (it == position_.end()) {
          overflow[c] = 1;
          continue;
        }
        columns_[c].emplace_back(it->second, coeff);
      }
      std::sort(columns_[c].begin(), columns_[c].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    });
    for (std::size_t c = 0; c < basis_.size(); ++c) {
      if (overflow[c]) overflow_.push_back(c);
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<Index>& basis() const { return basis_; }
  int max_degree() const { return max_degree_; }
  const Column& column(std::size_t c) const { return columns_.at(c); }
  const std::vector<std::size_t>& overflow() const { return overflow_; }
  bool overflows(std::size_t c) const { return std::binary_search(overflow_.begin(), overflow_.end(), c); }
  std::optional<std::size_t> position(const Index& idx) const {
    auto it = position_.find(idx);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }
  Scalar entry(std::size_t row, std::size_t col) const {
    for (const auto& [r, v] : columns_.at(col)) {
      if (r == row) return v;
    }
    return Scalar();
  }

  /// Matrix-vector product; throws TruncationError if the input touches an
  /// overflowing column or lies outside the truncation.
  BasicVector<Index> apply(const BasicVector<Index>& v) const {
    BasicVector<Index> out;
    for (const auto& [idx, coeff] : v.terms()) {
      auto p = position(idx);
      if (!p) throw TruncationError(name_ + ": vector " + idx.to_string() + " outside truncation");
      if (overflows(*p)) throw TruncationError(name_ + ": image of " + idx.to_string() + " overflows");
      for (const auto& [r, val] : columns_[*p]) out.add(basis_[r], val * coeff);
    }
    return out;
  }

  nlohmann::json to_json(const ExportOptions& opt = {}) const {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : basis_) basis.push_back(b.m);
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      for (const auto& [r, v] : columns_[c]) {
        nlohmann::json e = nlohmann::json::array({r, c});
        if (opt.numeric) {
          const QRing ring;
          const auto z = (opt.ring ? *opt.ring : ring).eval_numeric(v, *opt.numeric, *opt.vars);
          e.push_back(nlohmann::json::array({z.real(), z.imag()}));
        } else {
          e.push_back(v.to_string(*opt.vars));
        }
        if (opt.zeta_degree) {
          auto d = v.homogeneous_degree(var::kZeta);
          e.push_back(d ? nlohmann::json(*d) : nlohmann::json(nullptr));
        }
        entries.push_back(std::move(e));
      }
    }
    return {{"generator", name_}, {"max_degree", max_degree_}, {"basis", std::move(basis)},
            {"entries", std::move(entries)}, {"overflow", overflow_}};
  }

 private:
  std::string name_;
  std::vector<Index> basis_;
  int max_degree_;
  std::map<Index, std::size_t> position_;
  std::vector<Column> columns_;
  std::vector<std::size_t> overflow_;
};

template <class Index>
using LinearOp = std::function<BasicVector<Index>(const BasicVector<Index>&)>;

template <class Index>
LinearOp<Index> as_op(const GeneratorMatrix<Index>& m) {
  return [&m](const BasicVector<Index>& v) { return m.apply(v); };
}

template <class Index>
LinearOp<Index> as_op(BasisAction<Index> f) {
  return [f = std::move(f)](const BasicVector<Index>& v) { return qverma::apply(f, v); };
}

/// coeff * A_1 A_2 ... A_n, the rightmost factor acting first.
template <class Index>
struct RelationTerm {
  Scalar coeff;
  std::vector<LinearOp<Index>> factors;
};

template <class Index>
using Relation = std::vector<RelationTerm<Index>>;

template <class Index>
BasicVector<Index> evaluate_relation(const Relation<Index>& rel, const Index& idx) {
  BasicVector<Index> total;
  for (const auto& term : rel) {
    BasicVector<Index> v = BasicVector<Index>::basis(idx);
    for (auto it = term.factors.rbegin(); it != term.factors.rend() && !v.is_zero(); ++it) v = (*it)(v);
    v *= term.coeff;
    total += v;
  }
  return total;
}

/// Checks rel(v) == 0 for every basis vector of degree <= window. Returns
/// a description of the first failure, if any.
template <class Index>
std::optional<std::string> check_relation(const Relation<Index>& rel, const std::vector<Index>& basis,
                                          int window) {
  std::vector<std::optional<std::string>> failures(basis.size());
  parallel_for(basis.size(), [&](std::size_t k) {
    if (basis[k].degree() > window) return;
    try {
      auto r = evaluate_relation(rel, basis[k]);
      if (!r.is_zero()) failures[k] = "residue on v" + basis[k].to_string() + ": " + r.to_string();
    } catch (const TruncationError& e) {
      failures[k] = std::string("truncation: ") + e.what();
    }
  });
  for (auto& f : failures) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace qverma
