#include "qverma/quotient.hpp"

#include <set>
#include <sstream>

#include "qverma/borel.hpp"

namespace qverma {

namespace {

int tuple_size(int l) { return l * (l - 1) / 2; }

// Odometer over all tuples with 0 <= a_k <= bound_k.
template <class F>
void for_each_box(const std::vector<int>& bound, F&& f) {
  std::vector<int> cur(bound.size(), 0);
  while (true) {
    f(cur);
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == bound[k]) cur[k++] = 0;
    if (k == cur.size()) return;
    ++cur[k];
  }
}

}  // namespace

PTuple PTuple::zero(int l) {
  check_rank(l);
  return {l, std::vector<int>(static_cast<std::size_t>(tuple_size(l)))};
}

PTuple PTuple::parse(int l, const std::string& text) {
  PTuple t = zero(l);
  t.p.clear();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos) {
      throw std::invalid_argument("bad p-tuple entry: '" + item + "'");
    }
    t.p.push_back(std::stoi(item));
  }
  if (static_cast<int>(t.p.size()) != tuple_size(l)) {
    throw std::invalid_argument("p-tuple for l = " + std::to_string(l) + " needs " + std::to_string(tuple_size(l)) +
                                " entries");
  }
  return t;
}

int PTuple::forced_degree() const {
  int d = 0;
  for (int j = 2; j <= l; ++j) {
    for (int i = 1; i < j; ++i) d += alternating_sum(i, j);
  }
  return d;
}

int PTuple::alternating_sum(int i, int j) const {
  int s = 0;
  for (int k = 1; k <= i; ++k) s += ((i - k) % 2 ? -1 : 1) * (*this)(k, j);
  return s;
}

bool PTuple::admissible() const {
  for (int j = 2; j <= l; ++j) {
    for (int i = 1; i < j; ++i) {
      if ((*this)(i, j) < 0 || alternating_sum(i, j) < 0) return false;
    }
  }
  return true;
}

std::string PTuple::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + ")";
}

bool precedes(const PTuple& a, const PTuple& b, QuotientOrder order) {
  if (a.l != b.l) throw std::invalid_argument("p-tuples of different rank");
  if (a == b) return false;
  for (std::size_t k = 0; k < a.p.size(); ++k) {
    if (order == QuotientOrder::Strict ? a.p[k] >= b.p[k] : a.p[k] > b.p[k]) return false;
  }
  return true;
}

std::vector<PTuple> admissible_tuples(int l, int bound) {
  PTuple t = PTuple::zero(l);
  std::vector<PTuple> out;
  for_each_box(std::vector<int>(t.p.size(), bound), [&](const std::vector<int>& c) {
    t.p = c;
    if (t.admissible()) out.push_back(t);
  });
  return out;
}

std::vector<PTuple> tuples_below(const PTuple& p, QuotientOrder order) {
  PTuple t = PTuple::zero(p.l);
  std::vector<PTuple> out;
  for_each_box(p.p, [&](const std::vector<int>& c) {
    t.p = c;
    if (t.admissible() && precedes(t, p, order)) out.push_back(t);
  });
  return out;
}

bool in_submodule(const PTuple& p, const MultiIndex& m) {
  for (int j = 2; j <= p.l; ++j) {
    for (int i = 1; i < j; ++i) {
      if (m(i - 1, j) + m(i, j) > p(i, j)) return false;
    }
  }
  return true;
}

std::vector<MultiIndex> submodule_basis(const PTuple& p, int T) {
  if (!p.admissible()) throw std::invalid_argument("p-tuple " + p.to_string() + " is not admissible");
  std::vector<MultiIndex> out;
  for (auto& m : multi_indices(p.l, T)) {
    if (in_submodule(p, m)) out.push_back(std::move(m));
  }
  return out;
}

ModuleVector act_rho2(int l, const LoopGenerator& g, const MultiIndex& m, const QRing& ring) {
  const Degeneration D(l, SpinVector{std::vector<int>(static_cast<std::size_t>(l + 1), 1)}, ring);
  return D.limit_unspectral(g, m);
}

ReducedVector act_quotient(int l, const LoopGenerator& g, const ReducedIndex& m, const QRing& ring,
                           const SpinVector* spins) {
  if (g.i < 0 || g.i > l) throw std::out_of_range("generator index out of range");
  auto q = [&](const Rational& e) { return ring.q_pow(e); };
  switch (g.kind) {
    case LoopGenerator::Kind::F:
      throw std::invalid_argument("f_i is not in the positive Borel subalgebra");
    case LoopGenerator::Kind::H: {
      int e = 0;
      if (g.i == 0) {
        e = 2 * m(1);
        for (int j = 2; j <= l; ++j) e += m(j);
      } else if (g.i < l) {
        e = m(g.i + 1) - m(g.i);
      } else {
        e = -2 * m(l);
        for (int i = 1; i < l; ++i) e -= m(i);
      }
      return ReducedVector::basis(m, q(g.nu * e));
    }
    case LoopGenerator::Kind::E:
      break;
  }
  const Scalar tw = spins ? Scalar::variable(var::kZeta, (*spins)[g.i]) : Scalar(1);
  const int i = g.i;
  if (i == 0) {
    int e = 0;
    for (int j = 2; j <= l; ++j) e += m(j);
    return ReducedVector::basis(*m.shifted(1, 1), tw * q(e));
  }
  auto n = m.shifted(i, -1);
  if (!n) return {};
  if (i < l) return ReducedVector::basis(*n->shifted(i + 1, 1), -tw * q(m(i) - m(i + 1) - 1) * ring.qnum(m(i)));
  return ReducedVector::basis(*n, -tw * ring.kappa_inv() * q(m(l)) * ring.qnum(m(l)));
}

ReducedVector act_quotient(int l, const LoopGenerator& g, const ReducedVector& v, const QRing& ring,
                           const SpinVector* spins) {
  ReducedVector out;
  for (const auto& [m, c] : v.terms()) {
    ReducedVector img = act_quotient(l, g, m, ring, spins);
    img *= c;
    out += img;
  }
  return out;
}

GeneratorMatrix<ReducedIndex> quotient_matrix(int l, const std::string& id, int T, const QRing& ring,
                                              const SpinVector* spins) {
  const LoopGenerator g = LoopGenerator::parse(id);
  if (g.kind == LoopGenerator::Kind::F || g.i > l) throw std::invalid_argument("unknown generator id: " + id);
  return GeneratorMatrix<ReducedIndex>(id, reduced_indices(l, T), T, [=](const ReducedIndex& m) {
    return act_quotient(l, g, m, ring, spins);
  });
}

ShiftElement xi_p(const PTuple& p) {
  const int l = p.l;
  auto M = [&](int i, int j) { return p.alternating_sum(i, j); };
  ShiftElement xi = ShiftElement::zero(l);
  for (int j = 2; j <= l; ++j) xi.values[0] += p(1, j);
  for (int i = 1; i < l; ++i) {
    int e = 0;
    for (int k = 1; k < i; ++k) e += M(k, i) - M(k, i + 1);
    e -= 2 * M(i, i + 1);
    for (int k = i + 2; k <= l; ++k) e += -2 * M(i, k) + p(i + 1, k);
    xi.values[static_cast<std::size_t>(i)] = e;
  }
  for (int j = 1; j < l; ++j) xi.values[static_cast<std::size_t>(l)] += M(j, l);
  return xi;
}

namespace {

std::vector<LoopGenerator> borel_generators(int l) {
  std::vector<LoopGenerator> gens;
  for (int i = 0; i <= l; ++i) gens.push_back(LoopGenerator::e(i));
  for (int i = 0; i <= l; ++i) {
    gens.push_back(LoopGenerator::h(i));
    gens.push_back(LoopGenerator::h(i, -1));
  }
  return gens;
}

ReducedIndex survivors(const MultiIndex& m, int l) {
  ReducedIndex r = ReducedIndex::zero(l);
  for (int i = 1; i <= l; ++i) r.m[static_cast<std::size_t>(i - 1)] = m(i, l + 1);
  return r;
}

}  // namespace

Report verify_invariance(const PTuple& p, int T, const QRing& ring) {
  const int l = p.l;
  const auto basis = submodule_basis(p, T);
  Report rep;
  for (const auto& g : borel_generators(l)) {
    std::optional<std::string> fail;
    for (const auto& m : basis) {
      if (m.degree() > T - 1) continue;
      const ModuleVector img = act_rho2(l, g, m, ring);
      for (const auto& [n, c] : img.terms()) {
        if (!in_submodule(p, n)) {
          fail = g.id() + " v" + m.to_string() + " has component on v" + n.to_string() + " outside W''" + p.to_string();
          break;
        }
      }
      if (fail) break;
    }
    const std::string id = "quotient/invariance/" + p.to_string() + "/" + g.id();
    if (fail) {
      rep.fail(id, *fail);
    } else {
      rep.pass(id);
    }
  }
  return rep;
}

Report verify_quotient_relations(int l, int T, const QRing& ring) {
  return verify_borel_relations<ReducedIndex>("quotient/relations/", l, ring, reduced_indices(l, T), T,
                                              [&](const std::string& id) -> BasisAction<ReducedIndex> {
                                                const LoopGenerator g = LoopGenerator::parse(id);
                                                return [=](const ReducedIndex& m) {
                                                  return act_quotient(l, g, m, ring);
                                                };
                                              });
}

Report verify_quotient_iso(const PTuple& p, int T, QuotientOrder order, const QRing& ring) {
  const int l = p.l;
  const std::string tag = "quotient/iso/" + p.to_string();
  const int forced = p.forced_degree();
  if (forced >= T) {
    throw std::invalid_argument("T = " + std::to_string(T) + " leaves no room above the forced degree " +
                                std::to_string(forced) + " of " + p.to_string());
  }
  Report rep;
  rep.merge(verify_invariance(p, T, ring));
  const auto below = tuples_below(p, order);
  auto in_union = [&](const MultiIndex& m) {
    for (const auto& b : below) {
      if (in_submodule(b, m)) return true;
    }
    return false;
  };

  // Well-definedness: the union of the smaller submodules is itself invariant.
  std::optional<std::string> leak;
  for (const auto& m : multi_indices(l, T - 1)) {
    if (leak) break;
    if (!in_submodule(p, m) || !in_union(m)) continue;
    for (const auto& g : borel_generators(l)) {
      const ModuleVector img = act_rho2(l, g, m, ring);
      for (const auto& [n, c] : img.terms()) {
        if (!in_union(n)) {
          leak = g.id() + " v" + m.to_string() + " has component on v" + n.to_string() + " outside the union";
          break;
        }
      }
      if (leak) break;
    }
  }
  if (leak) {
    rep.fail(tag + "/well-defined", *leak);
  } else {
    rep.pass(tag + "/well-defined");
  }

  std::vector<MultiIndex> reps;
  for (const auto& m : submodule_basis(p, T)) {
    if (!in_union(m)) reps.push_back(m);
  }
  // Representatives must be v_{M + survivors} for one fixed M on the columns j <= l.
  std::optional<std::string> ident;
  std::map<ReducedIndex, MultiIndex> lift;
  int fixed_degree = 0;
  if (reps.empty()) {
    ident = "no coset representatives";
  } else {
    fixed_degree = reps.front().degree() - survivors(reps.front(), l).degree();
    for (const auto& m : reps) {
      const ReducedIndex r = survivors(m, l);
      if (m.degree() - r.degree() != fixed_degree || !lift.emplace(r, m).second) {
        ident = "representatives v" + m.to_string() + " and v" + lift.begin()->second.to_string() +
                " do not differ in the m_{i,l+1} only";
        break;
      }
    }
    if (!ident) {
      for (const auto& m : reps) {
        bool same = true;
        for (int j = 2; j <= l; ++j) {
          for (int i = 1; i < j; ++i) same = same && m(i, j) == reps.front()(i, j);
        }
        if (!same) {
          ident = "representatives v" + m.to_string() + " and v" + reps.front().to_string() +
                  " differ on the columns j <= l";
          break;
        }
      }
    }
    if (!ident && lift.size() != reduced_indices(l, T - fixed_degree).size()) {
      ident = "representatives cover " + std::to_string(lift.size()) + " of " +
              std::to_string(reduced_indices(l, T - fixed_degree).size()) + " reduced indices";
    }
  }
  if (ident) {
    rep.fail(tag + "/identification", *ident);
    return rep;
  }
  rep.pass(tag + "/identification");

  const BorelAction<ReducedIndex> target = shift_representation<ReducedIndex>(
      [&](const LoopGenerator& g, const ReducedIndex& r) { return act_quotient(l, g, r, ring); }, xi_p(p), ring);
  for (const auto& g : borel_generators(l)) {
    std::optional<std::string> fail;
    for (const auto& [r, m] : lift) {
      if (m.degree() > T - 1) continue;
      ReducedVector got;
      const ModuleVector img = act_rho2(l, g, m, ring);
      for (const auto& [n, c] : img.terms()) {
        if (in_union(n)) continue;
        if (!in_submodule(p, n)) {
          fail = "image of v" + m.to_string() + " leaves W''" + p.to_string();
          break;
        }
        got.add(survivors(n, l), c);
      }
      if (fail) break;
      const ReducedVector want = target(g, r);
      if (!(got == want)) {
        fail = "on v" + r.to_string() + ": quotient " + got.to_string() + ", shifted W' " + want.to_string();
        break;
      }
    }
    if (fail) {
      rep.fail(tag + "/" + g.id(), *fail);
    } else {
      rep.pass(tag + "/" + g.id());
    }
  }
  return rep;
}

}  // namespace qverma
