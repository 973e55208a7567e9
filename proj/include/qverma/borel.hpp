#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qverma/cartan.hpp"
#include "qverma/matrix.hpp"
#include "qverma/report.hpp"

namespace qverma {

/// Checks the defining relations of U_q(b_+) (q^x conjugation, q^{nu c} = 1
/// and both divided-power e-Serre families) for an action given by generator
/// id ("e<i>", "h<i>", "h<i>-"). Only e_0 may raise the degree.
template <class Index>
Report verify_borel_relations(const std::string& prefix, int l, const QRing& r, const std::vector<Index>& basis,
                              int T, const std::function<BasisAction<Index>(const std::string&)>& action) {
  std::map<std::string, GeneratorMatrix<Index>> mats;
  auto mat = [&](const std::string& id) -> const GeneratorMatrix<Index>& {
    auto it = mats.find(id);
    if (it == mats.end()) it = mats.emplace(id, GeneratorMatrix<Index>(id, basis, T, action(id))).first;
    return it->second;
  };
  struct Term {
    Scalar coeff;
    std::vector<std::string> ids;
  };
  Report rep;
  auto check = [&](const std::string& name, const std::vector<Term>& terms) {
    Relation<Index> rel;
    int up = 0;
    for (const auto& t : terms) {
      RelationTerm<Index> rt{t.coeff, {}};
      int u = 0;
      for (const auto& id : t.ids) {
        rt.factors.push_back(as_op(mat(id)));
        u += id == "e0";
      }
      up = std::max(up, u);
      rel.push_back(std::move(rt));
    }
    if (auto fail = check_relation(rel, basis, T - up)) {
      rep.fail(prefix + name, *fail);
    } else {
      rep.pass(prefix + name);
    }
  };
  const Scalar one(1);
  auto s = [](int i) { return std::to_string(i); };
  std::vector<std::string> all_h;
  for (int i = 0; i <= l; ++i) {
    all_h.push_back("h" + s(i));
    check("h-inverse/" + s(i), {{one, {"h" + s(i), "h" + s(i) + "-"}}, {-one, {}}});
    for (int j = 0; j <= l; ++j) {
      const std::string id = s(i) + "," + s(j);
      if (i < j) check("h-commute/" + id, {{one, {"h" + s(i), "h" + s(j)}}, {-one, {"h" + s(j), "h" + s(i)}}});
      check("h-e/" + id, {{one, {"h" + s(i), "e" + s(j), "h" + s(i) + "-"}},
                          {-r.q_pow(affine_a_matrix(l, i, j)), {"e" + s(j)}}});
      if (i == j) continue;
      const int n = 1 - affine_a_matrix(l, i, j);
      std::vector<Term> serre;
      for (int k = 0; k <= n; ++k) {
        std::vector<std::string> ids(static_cast<std::size_t>(n - k), "e" + s(i));
        ids.push_back("e" + s(j));
        ids.insert(ids.end(), static_cast<std::size_t>(k), "e" + s(i));
        Scalar c = (r.qfactorial(n - k) * r.qfactorial(k)).inv();
        if (k % 2) c = -c;
        serre.push_back({c, ids});
      }
      check("serre-e/" + id, serre);
    }
  }
  check("central", {{one, all_h}, {-one, {}}});
  return rep;
}

}  // namespace qverma
