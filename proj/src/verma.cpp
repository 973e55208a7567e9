#include "qverma/verma.hpp"

#include <numeric>

namespace qverma {

int64_t root_degree_for(const Weight& lambda) { return denominator_lcm(lambda.lambda); }

VermaModule::VermaModule(Weight lambda, QRing ring, VermaOptions opt)
    : l_(lambda.rank()), lambda_(std::move(lambda)), ring_(std::move(ring)), opt_(opt) {
  check_rank(l_);
  for (const auto& x : lambda_.lambda) ring_.v_exponent(x);
}

Rational VermaModule::k_exponent(int i, const MultiIndex& m) const {
  if (i < 1 || i > l_ + 1) throw std::out_of_range("K index out of range");
  Rational e = lambda_[i];
  for (int k = 1; k < i; ++k) e += m(k, i);
  for (int k = i + 1; k <= l_ + 1; ++k) e -= m(i, k);
  return e;
}

Rational VermaModule::h_exponent(int i, const MultiIndex& m) const {
  if (i < 1 || i > l_) throw std::out_of_range("H index out of range");
  Rational e = lambda_[i] - lambda_[i + 1] - 2 * m(i, i + 1);
  for (int k = 1; k < i; ++k) e += m(k, i) - m(k, i + 1);
  for (int k = i + 2; k <= l_ + 1; ++k) e -= m(i, k) - m(i + 1, k);
  return e;
}

ModuleVector VermaModule::K(int i, const Rational& nu, const MultiIndex& m) const {
  return ModuleVector::basis(m, qpow(nu * k_exponent(i, m)));
}

ModuleVector VermaModule::H(int i, const Rational& nu, const MultiIndex& m) const {
  return ModuleVector::basis(m, qpow(nu * h_exponent(i, m)));
}

ModuleVector VermaModule::F(int i, const MultiIndex& m) const {
  if (i < 1 || i > l_) throw std::out_of_range("F index out of range");
  ModuleVector out;
  int s = 0;
  for (int k = 1; k < i; ++k) s += m(k, i) - m(k, i + 1);
  out.add(*m.shifted(i, i + 1, 1), qpow(-s));
  int partial = 0;
  for (int j = 1; j < i; ++j) {
    if (const int mji = m(j, i); mji > 0) {
      out.add(*m.shifted(j, i, -1)->shifted(j, i + 1, 1), qpow(-partial) * ring_.qnum(mji));
    }
    partial += m(j, i) - m(j, i + 1);
  }
  return out;
}

ModuleVector VermaModule::E(int i, const MultiIndex& m) const {
  if (i < 1 || i > l_) throw std::out_of_range("E index out of range");
  ModuleVector out;
  const Rational a = lambda_[i] - lambda_[i + 1];
  const Scalar qa = qpow(a);
  int s = 0;
  for (int j = i + 2; j <= l_ + 1; ++j) s += m(i, j) - m(i + 1, j);
  const int mi = m(i, i + 1);
  if (mi > 0) {
    const int shift = opt_.inject_fault ? 2 : 1;
    out.add(*m.shifted(i, i + 1, -1), ring_.qnum(-s - mi + shift, qa) * ring_.qnum(mi));
  }
  const Scalar pre = qpow(a - 2 * mi - s);
  for (int j = 1; j < i; ++j) {
    const int mj = m(j, i + 1);
    if (mj == 0) continue;
    int e = 0;
    for (int k = j + 1; k < i; ++k) e += m(k, i) - m(k, i + 1);
    out.add(*m.shifted(j, i + 1, -1)->shifted(j, i, 1), pre * qpow(e) * ring_.qnum(mj));
  }
  for (int j = i + 2; j <= l_ + 1; ++j) {
    const int mij = m(i, j);
    if (mij == 0) continue;
    int e = 0;
    for (int k = j; k <= l_ + 1; ++k) e += m(i, k) - m(i + 1, k);
    out.add(*m.shifted(i, j, -1)->shifted(i + 1, j, 1), -(qpow(-a - 2 + e) * ring_.qnum(mij)));
  }
  return out;
}

ModuleVector VermaModule::F_top(const MultiIndex& m) const {
  int e = 0;
  for (int i = 2; i <= l_; ++i) e += m(1, i);
  return ModuleVector::basis(*m.shifted(1, l_ + 1, 1), qpow(e));
}

ModuleVector VermaModule::E_top(const MultiIndex& m) const {
  ModuleVector out;
  const int n1 = l_ + 1;
  int row1 = 0;
  for (int j = 2; j <= n1; ++j) row1 += m(1, j);
  for (int k = 0; k < l_; ++k) {
    for (const auto& [I, J] : ladder_enumerate(l_, k)) {
      const bool a_term = I[k] == J[k];
      if (!a_term && k == 0) continue;
      Scalar prod(1);
      std::optional<MultiIndex> target = m;
      for (int a = 1; a <= k + 1 && target; ++a) {
        const int x = m(I[a - 1], J[a]);
        if (x == 0) {
          target.reset();
          break;
        }
        prod *= ring_.qnum(x);
        target = target->shifted(I[a - 1], J[a], -1);
      }
      if (!target) continue;
      for (int a = 1; a <= k && target; ++a) target = target->shifted(I[a], J[a], 1);
      if (!target) continue;
      int gamma = 0, delta = 0;
      for (int a = 1; a <= k; ++a) {
        if (I[a] != J[a]) ++gamma;
        for (int j = J[a - 1] + 1; j < J[a]; ++j) delta += m(I[a - 1], j);
        for (int i = I[a - 1] + 1; i <= I[a]; ++i) delta += m(i, J[a]);
      }
      const Scalar sign = k % 2 ? Scalar(-1) : Scalar(1);
      Scalar c;
      if (a_term) {
        const int jk = J[k], ik = I[k];
        int br = 0;
        for (int j = jk + 1; j <= l_; ++j) br += m(ik, j);
        for (int i = ik; i <= l_; ++i) br += m(i, n1);
        c = sign * ring_.kappa().pow(gamma) *
            qpow(lambda_[1] - lambda_[jk] - row1 + m(jk, n1) - delta + k - gamma) *
            ring_.qnum(-br + 1, qpow(lambda_[jk] - lambda_[n1]));
      } else {
        int br = 0;
        for (int j = J[k] + 1; j <= l_; ++j) br += m(I[k], j);
        for (int i = I[k] + 1; i <= l_; ++i) br += m(i, n1);
        c = sign * ring_.kappa().pow(gamma - 1) *
            qpow(lambda_[1] - lambda_[n1] - row1 - delta + k - gamma + 1 - br);
      }
      out.add(*target, c * prod);
    }
  }
  return out;
}

namespace {

ModuleVector extend(const ModuleVector& v, const std::function<ModuleVector(const MultiIndex&)>& f) {
  return qverma::apply(BasisAction<MultiIndex>(f), v);
}

}  // namespace

ModuleVector VermaModule::act_K(int i, const Rational& nu, const ModuleVector& v) const {
  return extend(v, [&](const MultiIndex& m) { return K(i, nu, m); });
}
ModuleVector VermaModule::act_H(int i, const Rational& nu, const ModuleVector& v) const {
  return extend(v, [&](const MultiIndex& m) { return H(i, nu, m); });
}
ModuleVector VermaModule::act_F(int i, const ModuleVector& v) const {
  return extend(v, [&](const MultiIndex& m) { return F(i, m); });
}
ModuleVector VermaModule::act_E(int i, const ModuleVector& v) const {
  return extend(v, [&](const MultiIndex& m) { return E(i, m); });
}
ModuleVector VermaModule::act_F_top(const ModuleVector& v) const {
  return extend(v, [&](const MultiIndex& m) { return F_top(m); });
}
ModuleVector VermaModule::act_E_top(const ModuleVector& v) const {
  return extend(v, [&](const MultiIndex& m) { return E_top(m); });
}

}  // namespace qverma

namespace qverma {

std::vector<std::string> VermaModule::generator_ids() const {
  std::vector<std::string> ids;
  for (int i = 1; i <= l_; ++i) ids.push_back("E" + std::to_string(i));
  for (int i = 1; i <= l_; ++i) ids.push_back("F" + std::to_string(i));
  for (int i = 1; i <= l_ + 1; ++i) ids.push_back("K" + std::to_string(i));
  for (int i = 1; i <= l_; ++i) ids.push_back("H" + std::to_string(i));
  ids.push_back("Ftop");
  if (l_ > 1) ids.push_back("Etop");
  return ids;
}

BasisAction<MultiIndex> VermaModule::generator(const std::string& id) const {
  if (id == "Ftop") return [this](const MultiIndex& m) { return F_top(m); };
  if (id == "Etop") return [this](const MultiIndex& m) { return E_top(m); };
  if (id.size() >= 2) {
    const char kind = id[0];
    int i = 0;
    bool inverse = false;
    std::string rest = id.substr(1);
    if (!rest.empty() && rest.back() == '-') {
      inverse = true;
      rest.pop_back();
    }
    try {
      std::size_t used = 0;
      i = std::stoi(rest, &used);
      if (used != rest.size()) i = 0;
    } catch (const std::exception&) {
      i = 0;
    }
    const Rational nu = inverse ? -1 : 1;
    if (kind == 'E' && !inverse && i >= 1 && i <= l_) return [this, i](const MultiIndex& m) { return E(i, m); };
    if (kind == 'F' && !inverse && i >= 1 && i <= l_) return [this, i](const MultiIndex& m) { return F(i, m); };
    if (kind == 'K' && i >= 1 && i <= l_ + 1) return [this, i, nu](const MultiIndex& m) { return K(i, nu, m); };
    if (kind == 'H' && i >= 1 && i <= l_) return [this, i, nu](const MultiIndex& m) { return H(i, nu, m); };
  }
  throw std::invalid_argument("unknown generator id: " + id);
}

GeneratorMatrix<MultiIndex> VermaModule::matrix(const std::string& id, int T) const {
  return GeneratorMatrix<MultiIndex>(id, multi_indices(l_, T), T, generator(id));
}

namespace {

using Rel = Relation<MultiIndex>;
using Op = LinearOp<MultiIndex>;

struct RelationCheck {
  std::string id;
  Rel rel;
  int window;
};

}  // namespace

Report verify_defining(const VermaModule& V, int T) {
  const int l = V.rank();
  const QRing& r = V.ring();
  std::map<std::string, GeneratorMatrix<MultiIndex>> mats;
  std::vector<std::string> ids;
  for (int i = 1; i <= l; ++i) {
    const std::string n = std::to_string(i);
    ids.insert(ids.end(), {"E" + n, "F" + n, "H" + n, "H" + n + "-"});
  }
  for (int i = 1; i <= l + 1; ++i) {
    ids.push_back("K" + std::to_string(i));
    ids.push_back("K" + std::to_string(i) + "-");
  }
  for (const auto& id : ids) mats.emplace(id, V.matrix(id, T));
  auto op = [&](const std::string& id) -> Op { return as_op(mats.at(id)); };
  auto E = [&](int i) { return op("E" + std::to_string(i)); };
  auto F = [&](int i) { return op("F" + std::to_string(i)); };
  auto K = [&](int i, bool inv = false) { return op("K" + std::to_string(i) + (inv ? "-" : "")); };
  auto H = [&](int i, bool inv = false) { return op("H" + std::to_string(i) + (inv ? "-" : "")); };
  const Scalar one(1);
  std::vector<RelationCheck> checks;
  for (int i = 1; i <= l + 1; ++i) {
    checks.push_back({"defining/K-inverse/" + std::to_string(i), {{one, {K(i), K(i, true)}}, {-one, {}}}, T});
    for (int j = i + 1; j <= l + 1; ++j) {
      checks.push_back({"defining/K-commute/" + std::to_string(i) + "," + std::to_string(j),
                        {{one, {K(i), K(j)}}, {-one, {K(j), K(i)}}}, T});
    }
    for (int j = 1; j <= l; ++j) {
      const std::string id = std::to_string(i) + "," + std::to_string(j);
      const int c = c_matrix(l, i, j);
      checks.push_back({"defining/K-E/" + id, {{one, {K(i), E(j), K(i, true)}}, {-r.q_pow(c), {E(j)}}}, T});
      checks.push_back({"defining/K-F/" + id, {{one, {K(i), F(j), K(i, true)}}, {-r.q_pow(-c), {F(j)}}}, T - 1});
    }
  }
  for (int i = 1; i <= l; ++i) {
    checks.push_back({"defining/H-from-K/" + std::to_string(i), {{one, {H(i)}}, {-one, {K(i), K(i + 1, true)}}}, T});
    for (int j = 1; j <= l; ++j) {
      const std::string id = std::to_string(i) + "," + std::to_string(j);
      Rel rel{{one, {E(i), F(j)}}, {-one, {F(j), E(i)}}};
      if (i == j) {
        rel.push_back({-r.kappa_inv(), {H(i)}});
        rel.push_back({r.kappa_inv(), {H(i, true)}});
      }
      checks.push_back({"defining/EF/" + id, rel, T - 1});
      if (i == j) continue;
      if (std::abs(i - j) >= 2) {
        checks.push_back({"serre/E-commute/" + id, {{one, {E(i), E(j)}}, {-one, {E(j), E(i)}}}, T});
        checks.push_back({"serre/F-commute/" + id, {{one, {F(i), F(j)}}, {-one, {F(j), F(i)}}}, T - 2});
      } else {
        const Scalar q2 = r.qnum(2);
        checks.push_back({"serre/E/" + id,
                          {{one, {E(i), E(i), E(j)}}, {-q2, {E(i), E(j), E(i)}}, {one, {E(j), E(i), E(i)}}}, T});
        checks.push_back({"serre/F/" + id,
                          {{one, {F(i), F(i), F(j)}}, {-q2, {F(i), F(j), F(i)}}, {one, {F(j), F(i), F(i)}}}, T - 3});
      }
    }
  }
  const auto basis = multi_indices(l, T);
  Report rep;
  for (const auto& c : checks) {
    if (auto fail = check_relation(c.rel, basis, c.window)) {
      rep.fail(c.id, *fail);
    } else {
      rep.pass(c.id);
    }
  }
  return rep;
}

Report verify_against_oracle(const VermaModule& V, const PbwAlgebra& alg, int T) {
  const int l = V.rank();
  if (alg.rank() != l || alg.ring().root_degree() != V.ring().root_degree()) {
    throw std::invalid_argument("oracle algebra does not match the module");
  }
  struct Case {
    std::string name;
    AlgebraElement letter;
    BasisAction<MultiIndex> action;
  };
  std::vector<Case> cases;
  for (int i = 1; i <= l; ++i) {
    cases.push_back({"E" + std::to_string(i), alg.E(i), V.generator("E" + std::to_string(i))});
    cases.push_back({"F" + std::to_string(i), alg.F(i), V.generator("F" + std::to_string(i))});
  }
  cases.push_back({"Ftop", alg.F(1, l + 1), V.generator("Ftop")});
  cases.push_back({"Etop", alg.E(1, l + 1), [&V](const MultiIndex& m) { return V.E_top(m); }});
  for (int i = 1; i <= l + 1; ++i) cases.push_back({"K" + std::to_string(i), alg.K(i), V.generator("K" + std::to_string(i))});
  const auto basis = multi_indices(l, T);
  std::vector<std::optional<std::string>> failures(cases.size() * basis.size());
  parallel_for(failures.size(), [&](std::size_t n) {
    const auto& c = cases[n / basis.size()];
    const auto& m = basis[n % basis.size()];
    const ModuleVector expected = alg.act_on_highest_weight(c.letter * alg.f_monomial(m), V.weight());
    const ModuleVector got = c.action(m);
    if (!(expected == got)) {
      failures[n] = "on v" + m.to_string() + ": closed form " + got.to_string() + ", oracle " + expected.to_string();
    }
  });
  Report rep;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    std::optional<std::string> first;
    for (std::size_t b = 0; b < basis.size() && !first; ++b) first = failures[k * basis.size() + b];
    const std::string id = "oracle/" + cases[k].name;
    if (first) {
      rep.fail(id, *first);
    } else {
      rep.add(id, true, std::to_string(basis.size()) + " basis vectors");
    }
  }
  return rep;
}

}  // namespace qverma
