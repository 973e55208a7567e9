#include "qverma/loop.hpp"

#include <numeric>

namespace qverma {

int SpinVector::total() const { return std::accumulate(s.begin(), s.end(), 0); }

LoopGenerator LoopGenerator::parse(const std::string& id) {
  if (id.size() < 2) throw std::invalid_argument("bad loop generator id: " + id);
  LoopGenerator g;
  std::string rest = id.substr(1);
  switch (id[0]) {
    case 'e': g.kind = Kind::E; break;
    case 'f': g.kind = Kind::F; break;
    case 'h': g.kind = Kind::H; break;
    default: throw std::invalid_argument("bad loop generator id: " + id);
  }
  if (g.kind == Kind::H && rest.back() == '-') {
    g.nu = -1;
    rest.pop_back();
  }
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad loop generator id: " + id);
  }
  g.i = std::stoi(rest);
  return g;
}

std::string LoopGenerator::id() const {
  const char* p = kind == Kind::E ? "e" : kind == Kind::F ? "f" : "h";
  std::string s = p + std::to_string(i);
  if (kind == Kind::H && nu != 1) s += nu == -1 ? "-" : "^" + nu.get_str();
  return s;
}

AlgebraElement jimbo(const PbwAlgebra& alg, const LoopGenerator& g) {
  const int l = alg.rank();
  if (g.i < 0 || g.i > l) throw std::out_of_range("loop generator index out of range");
  const int n1 = l + 1;
  switch (g.kind) {
    case LoopGenerator::Kind::H:
      if (g.i == 0) return alg.q_pow(CartanExp::H(l, n1, 1, g.nu));
      return alg.q_pow(CartanExp::H(l, g.i, g.i + 1, g.nu));
    case LoopGenerator::Kind::E:
      if (g.i == 0) return alg.F(1, n1) * alg.q_pow(CartanExp::K(l, 1) + CartanExp::K(l, n1));
      return alg.E(g.i);
    case LoopGenerator::Kind::F:
      if (g.i == 0) return alg.E(1, n1) * alg.q_pow(CartanExp::K(l, 1, -1) + CartanExp::K(l, n1, -1));
      return alg.F(g.i);
  }
  return {};
}

Scalar gamma_twist(const LoopGenerator& g, const SpinVector& spins) {
  switch (g.kind) {
    case LoopGenerator::Kind::E: return Scalar::variable(var::kZeta, spins[g.i]);
    case LoopGenerator::Kind::F: return Scalar::variable(var::kZeta, -spins[g.i]);
    case LoopGenerator::Kind::H: return Scalar(1);
  }
  return Scalar(1);
}

LoopModule::LoopModule(VermaModule verma, SpinVector spins) : verma_(std::move(verma)), spins_(std::move(spins)) {
  if (spins_.rank() != verma_.rank()) throw std::invalid_argument("need l + 1 spins");
}

Rational LoopModule::h_exponent(int i, const MultiIndex& m) const {
  const int l = rank();
  if (i < 0 || i > l) throw std::out_of_range("h index out of range");
  if (i > 0) return verma_.h_exponent(i, m);
  const Weight& w = verma_.weight();
  Rational e = w[l + 1] - w[1] + 2 * m(1, l + 1);
  for (int k = 2; k <= l; ++k) e += m(1, k) + m(k, l + 1);
  return e;
}

ModuleVector LoopModule::act(const LoopGenerator& g, const MultiIndex& m) const {
  const int l = rank();
  if (g.i < 0 || g.i > l) throw std::out_of_range("loop generator index out of range");
  const QRing& r = ring();
  const Scalar tw = gamma_twist(g, spins_);
  ModuleVector out;
  switch (g.kind) {
    case LoopGenerator::Kind::H:
      return ModuleVector::basis(m, r.q_pow(g.nu * h_exponent(g.i, m)));
    case LoopGenerator::Kind::E:
      if (g.i == 0) {
        const Weight& w = verma_.weight();
        Rational e = w[1] + w[l + 1];
        for (int k = 2; k <= l; ++k) e += m(k, l + 1);
        return ModuleVector::basis(*m.shifted(1, l + 1, 1), tw * r.q_pow(e));
      }
      out = verma_.E(g.i, m);
      break;
    case LoopGenerator::Kind::F:
      if (g.i == 0) {
        const Rational e = -(verma_.k_exponent(1, m) + verma_.k_exponent(l + 1, m));
        out = verma_.E_top(m);
        out *= r.q_pow(e);
      } else {
        out = verma_.F(g.i, m);
      }
      break;
  }
  out *= tw;
  return out;
}

ModuleVector LoopModule::act(const LoopGenerator& g, const ModuleVector& v) const {
  return qverma::apply(BasisAction<MultiIndex>([&](const MultiIndex& m) { return act(g, m); }), v);
}

BasisAction<MultiIndex> LoopModule::generator(const std::string& id) const {
  const LoopGenerator g = LoopGenerator::parse(id);
  if (g.i > rank()) throw std::invalid_argument("unknown generator id: " + id);
  return [this, g](const MultiIndex& m) { return act(g, m); };
}

std::vector<std::string> LoopModule::generator_ids() const {
  std::vector<std::string> ids;
  for (const char* p : {"e", "f", "h"}) {
    for (int i = 0; i <= rank(); ++i) ids.push_back(p + std::to_string(i));
  }
  return ids;
}

GeneratorMatrix<MultiIndex> LoopModule::matrix(const std::string& id, int T) const {
  return GeneratorMatrix<MultiIndex>(id, multi_indices(rank(), T), T, generator(id));
}

namespace {

using Op = LinearOp<MultiIndex>;

// A relation term with a count of degree-raising factors.
struct Term {
  Scalar coeff;
  std::vector<std::string> ids;
};

}  // namespace

Report verify_loop_relations(const LoopModule& L, int T) {
  const int l = L.rank();
  const QRing& r = L.ring();
  std::map<std::string, GeneratorMatrix<MultiIndex>> mats;
  for (int i = 0; i <= l; ++i) {
    for (const std::string p : {"e", "f", "h", "h"}) {
      std::string id = p + std::to_string(i);
      if (mats.count(id)) id += "-";
      mats.emplace(id, L.matrix(id, T));
    }
  }
  auto raising = [](const std::string& id) { return id == "e0" || (id[0] == 'f' && id != "f0"); };
  const auto basis = multi_indices(l, T);
  Report rep;
  auto check = [&](const std::string& name, const std::vector<Term>& terms) {
    Relation<MultiIndex> rel;
    int up = 0;
    for (const auto& t : terms) {
      RelationTerm<MultiIndex> rt{t.coeff, {}};
      int u = 0;
      for (const auto& id : t.ids) {
        rt.factors.push_back(as_op(mats.at(id)));
        u += raising(id);
      }
      up = std::max(up, u);
      rel.push_back(std::move(rt));
    }
    if (auto fail = check_relation(rel, basis, T - up)) {
      rep.fail(name, *fail);
    } else {
      rep.pass(name);
    }
  };
  const Scalar one(1);
  auto s = [](int i) { return std::to_string(i); };
  std::vector<std::string> all_h, all_h_inv;
  for (int i = 0; i <= l; ++i) {
    all_h.push_back("h" + s(i));
    check("loop/h-inverse/" + s(i), {{one, {"h" + s(i), "h" + s(i) + "-"}}, {-one, {}}});
    for (int j = 0; j <= l; ++j) {
      const std::string id = s(i) + "," + s(j);
      if (i < j) check("loop/h-commute/" + id, {{one, {"h" + s(i), "h" + s(j)}}, {-one, {"h" + s(j), "h" + s(i)}}});
      const int a = affine_a_matrix(l, i, j);
      check("loop/h-e/" + id, {{one, {"h" + s(i), "e" + s(j), "h" + s(i) + "-"}}, {-r.q_pow(a), {"e" + s(j)}}});
      check("loop/h-f/" + id, {{one, {"h" + s(i), "f" + s(j), "h" + s(i) + "-"}}, {-r.q_pow(-a), {"f" + s(j)}}});
      std::vector<Term> ef{{one, {"e" + s(i), "f" + s(j)}}, {-one, {"f" + s(j), "e" + s(i)}}};
      if (i == j) {
        ef.push_back({-r.kappa_inv(), {"h" + s(i)}});
        ef.push_back({r.kappa_inv(), {"h" + s(i) + "-"}});
      }
      check("loop/e-f/" + id, ef);
      if (i == j) continue;
      const int n = 1 - affine_a_matrix(l, i, j);
      for (const char* kind : {"e", "f"}) {
        std::vector<Term> serre;
        for (int k = 0; k <= n; ++k) {
          std::vector<std::string> ids(static_cast<std::size_t>(n - k), kind + s(i));
          ids.push_back(kind + s(j));
          ids.insert(ids.end(), static_cast<std::size_t>(k), kind + s(i));
          Scalar c = (r.qfactorial(n - k) * r.qfactorial(k)).inv();
          if (k % 2) c = -c;
          serre.push_back({c, ids});
        }
        check(std::string("loop/serre-") + kind + "/" + id, serre);
      }
    }
  }
  check("loop/central", {{one, all_h}, {-one, {}}});
  return rep;
}

Report verify_loop_factorization(const LoopModule& L, const PbwAlgebra& alg, int T) {
  const int l = L.rank();
  std::vector<LoopGenerator> gens;
  for (const auto& id : L.generator_ids()) gens.push_back(LoopGenerator::parse(id));
  gens.push_back(LoopGenerator::h(0, Rational(-1, 1)));
  const auto basis = multi_indices(l, T);
  std::vector<std::optional<std::string>> failures(gens.size() * basis.size());
  std::vector<char> graded(gens.size() * basis.size(), 1);
  const Weight& w = L.verma().weight();
  parallel_for(failures.size(), [&](std::size_t n) {
    const auto& g = gens[n / basis.size()];
    const auto& m = basis[n % basis.size()];
    const ModuleVector got = L.act(g, m);
    ModuleVector expected = alg.act_on_highest_weight(jimbo(alg, g) * alg.f_monomial(m), w);
    expected *= gamma_twist(g, L.spins());
    if (!(got == expected)) {
      failures[n] = "on v" + m.to_string() + ": closed form " + got.to_string() + ", oracle " + expected.to_string();
    }
    const int deg = g.kind == LoopGenerator::Kind::E ? L.spins()[g.i]
                    : g.kind == LoopGenerator::Kind::F ? -L.spins()[g.i]
                                                      : 0;
    for (const auto& [k, c] : got.terms()) {
      if (c.homogeneous_degree(var::kZeta) != deg) graded[n] = 0;
    }
  });
  Report rep;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::optional<std::string> first;
    bool homogeneous = true;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (!first) first = failures[k * basis.size() + b];
      homogeneous = homogeneous && graded[k * basis.size() + b];
    }
    const std::string id = gens[k].id();
    if (first) {
      rep.fail("loop/jimbo/" + id, *first);
    } else {
      rep.pass("loop/jimbo/" + id);
    }
    if (homogeneous) {
      rep.pass("loop/zeta-degree/" + id);
    } else {
      rep.fail("loop/zeta-degree/" + id, "coefficient not homogeneous in zeta");
    }
  }
  return rep;
}

}  // namespace qverma
