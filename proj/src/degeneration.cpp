#include "qverma/degeneration.hpp"

#include <numeric>

#include "qverma/borel.hpp"

namespace qverma {

Rational ShiftElement::central() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

ShiftElement weight_shift(const Weight& lambda) {
  const int l = lambda.rank();
  ShiftElement xi = ShiftElement::zero(l);
  xi.values[0] = lambda[1] - lambda[l + 1];
  for (int i = 1; i <= l; ++i) xi.values[static_cast<std::size_t>(i)] = lambda[i + 1] - lambda[i];
  return xi;
}

namespace {

int nonzero_total(const SpinVector& spins) {
  const int s = spins.total();
  if (s == 0) throw std::invalid_argument("degeneration needs s_0 + ... + s_l != 0");
  return s;
}

// (2 lambda_{l+1} - l) s_k / s
Rational spectral_exponent(const Rational& lambda_last, const SpinVector& spins, int k) {
  const int l = spins.rank();
  Rational r = (2 * lambda_last - l) * spins[k];
  r /= nonzero_total(spins);
  return r;
}

Rational rebase_exponent(const Weight& lambda, const SpinVector& spins, int k) {
  return lambda[k] - lambda[k + 1] + 1 + spectral_exponent(lambda[lambda.rank() + 1], spins, k);
}

}  // namespace

int64_t degeneration_root_degree(const Weight& lambda, const SpinVector& spins) {
  const int l = lambda.rank();
  std::vector<Rational> vals = lambda.lambda;
  for (int k = 0; k <= l; ++k) vals.push_back(spectral_exponent(lambda[l + 1], spins, k));
  vals.push_back(Rational(2 * lambda[l + 1] - l) / nonzero_total(spins));
  return denominator_lcm(vals);
}

Scalar rebase_coefficient(const Rational& lambda_last, const SpinVector& spins, RootIndex target, int nu,
                          const QRing& ring) {
  Scalar c(1);
  for (int k = target.i; k < target.j; ++k) {
    c *= Scalar::variable(var::u(k), nu) * ring.q_pow(nu * (1 + spectral_exponent(lambda_last, spins, k)));
  }
  return c;
}

Scalar rebase_ratio(const Weight& lambda, const SpinVector& spins, const MultiIndex& m, const MultiIndex& n,
                    const QRing& ring) {
  const int l = lambda.rank();
  Rational e = 0;
  for (int i = 1; i <= l; ++i) {
    int d = 0;
    for (int j = 1; j <= i; ++j) {
      for (int k = i + 1; k <= l + 1; ++k) d += n(j, k) - m(j, k);
    }
    e += d * rebase_exponent(lambda, spins, i);
  }
  return ring.q_pow(e);
}

Scalar specialize(const Scalar& c, const Weight& lambda, const SpinVector& spins, const QRing& ring) {
  const int l = lambda.rank();
  Scalar r = c;
  for (int i = 1; i <= l; ++i) r = r.substitute(var::u(i), ring.q_pow(lambda[i] - lambda[i + 1]));
  const Rational zt = Rational(2 * lambda[l + 1] - l) / nonzero_total(spins);
  return r.substitute(var::kZetaTilde, ring.q_pow(zt) * Scalar::variable(var::kZeta));
}

Degeneration::Degeneration(int l, SpinVector spins, QRing ring)
    : l_(l), spins_(std::move(spins)), ring_(std::move(ring)) {
  check_rank(l);
  if (spins_.rank() != l) throw std::invalid_argument("need l + 1 spins");
  nonzero_total(spins_);
}

ModuleVector Degeneration::prelimit(const LoopGenerator& g, const MultiIndex& m) const {
  ModuleVector out = act(g, m, false, true);
  for (const auto& [n, c] : out.terms()) {
    for (int i = 1; i <= l_; ++i) {
      if (!c.is_polynomial_in(var::u(i))) {
        throw ArithmeticError("negative power of u" + std::to_string(i) + " in " + g.id() + " v" + m.to_string());
      }
    }
  }
  return out;
}

ModuleVector Degeneration::limit(const LoopGenerator& g, const MultiIndex& m) const { return act(g, m, true, true); }

ModuleVector Degeneration::limit_unspectral(const LoopGenerator& g, const MultiIndex& m) const {
  return act(g, m, true, false);
}

ModuleVector Degeneration::act(const LoopGenerator& g, const MultiIndex& m, bool take_limit, bool spectral) const {
  const int l = l_;
  if (g.i < 0 || g.i > l) throw std::out_of_range("generator index out of range");
  const QRing& r = ring_;
  auto q = [&](const Rational& e) { return r.q_pow(e); };
  switch (g.kind) {
    case LoopGenerator::Kind::F:
      throw std::invalid_argument("f_i is not in the positive Borel subalgebra");
    case LoopGenerator::Kind::H: {
      int e = 0;
      if (g.i == 0) {
        e = 2 * m(1, l + 1);
        for (int k = 2; k <= l; ++k) e += m(1, k) + m(k, l + 1);
      } else {
        const int i = g.i;
        for (int j = 1; j <= l; ++j) {
          for (int k = j + 1; k <= l + 1; ++k) {
            e -= m(j, k) * ((j == i) - (k == i) - (j == i + 1) + (k == i + 1));
          }
        }
      }
      return ModuleVector::basis(m, q(g.nu * e));
    }
    case LoopGenerator::Kind::E:
      break;
  }
  const Scalar zt = spectral ? Scalar::variable(var::kZetaTilde, spins_[g.i]) : Scalar(1);
  if (g.i == 0) {
    int e = 0;
    for (int i = 2; i <= l; ++i) e += m(i, l + 1);
    return ModuleVector::basis(*m.shifted(1, l + 1, 1), zt * q(e));
  }
  const int i = g.i;
  const Scalar u2 = Scalar::variable(var::u(i), 2);
  const int mii = m(i, i + 1);
  int S = 0;
  for (int j = i + 2; j <= l + 1; ++j) S += m(i, j) - m(i + 1, j);
  ModuleVector out;
  if (auto n = m.shifted(i, i + 1, -1)) {
    Scalar c = -q(S + mii);
    if (!take_limit) c += u2 * q(2 - S - mii);
    out.add(*n, zt * r.kappa_inv() * c * r.qnum(mii));
  }
  if (!take_limit) {
    for (int j = 1; j < i; ++j) {
      auto n = m.shifted(j, i + 1, -1);
      if (!n) continue;
      n = n->shifted(j, i, 1);
      int e = 0;
      for (int k = j + 1; k <= i - 1; ++k) e += m(k, i) - m(k, i + 1);
      out.add(*n, zt * u2 * q(1 - 2 * mii - S + e) * r.qnum(m(j, i + 1)));
    }
  }
  for (int j = i + 2; j <= l + 1; ++j) {
    auto n = m.shifted(i, j, -1);
    if (!n) continue;
    n = n->shifted(i + 1, j, 1);
    int e = -1;
    for (int k = j; k <= l + 1; ++k) e += m(i, k) - m(i + 1, k);
    out.add(*n, -zt * q(e) * r.qnum(m(i, j)));
  }
  return out;
}

BasisAction<MultiIndex> Degeneration::generator(const std::string& id, bool take_limit) const {
  const LoopGenerator g = LoopGenerator::parse(id);
  if (g.kind == LoopGenerator::Kind::F || g.i > l_) throw std::invalid_argument("unknown generator id: " + id);
  return [this, g, take_limit](const MultiIndex& m) { return act(g, m, take_limit, true); };
}

std::vector<std::string> Degeneration::generator_ids() const {
  std::vector<std::string> ids;
  for (const char* p : {"e", "h"}) {
    for (int i = 0; i <= l_; ++i) ids.push_back(p + std::to_string(i));
  }
  return ids;
}

GeneratorMatrix<MultiIndex> Degeneration::matrix(const std::string& id, int T, bool take_limit) const {
  return GeneratorMatrix<MultiIndex>(id, multi_indices(l_, T), T, generator(id, take_limit));
}

Report verify_degeneration(const Degeneration& D, int T) {
  const int l = D.rank();
  const auto basis = multi_indices(l, T);
  Report rep;
  for (const auto& id : D.generator_ids()) {
    const LoopGenerator g = LoopGenerator::parse(id);
    std::optional<std::string> poly_fail, limit_fail;
    for (const auto& m : basis) {
      ModuleVector pre;
      try {
        pre = D.prelimit(g, m);
      } catch (const ArithmeticError& e) {
        if (!poly_fail) poly_fail = e.what();
        continue;
      }
      ModuleVector at_zero;
      for (const auto& [n, c] : pre.terms()) {
        for (int i = 1; i <= l && !poly_fail; ++i) {
          if (!c.is_polynomial_in(var::u(i))) {
            poly_fail = "coefficient " + c.to_string() + " of v" + n.to_string() + " in e v" + m.to_string();
          }
        }
        Scalar z = c;
        for (int i = 1; i <= l; ++i) z = z.substitute(var::u(i), Scalar());
        at_zero.add(n, z);
      }
      const ModuleVector lim = D.limit(g, m);
      if (!limit_fail && !(at_zero == lim)) {
        limit_fail = "on v" + m.to_string() + ": u = 0 gives " + at_zero.to_string() + ", limit " + lim.to_string();
      }
    }
    if (poly_fail) {
      rep.fail("limit/u-polynomial/" + id, *poly_fail);
    } else {
      rep.pass("limit/u-polynomial/" + id);
    }
    if (limit_fail) {
      rep.fail("limit/agreement/" + id, *limit_fail);
    } else {
      rep.pass("limit/agreement/" + id);
    }
  }
  for (const bool lim : {false, true}) {
    rep.merge(verify_borel_relations<MultiIndex>(lim ? "limit/post/" : "limit/pre/", l, D.ring(), basis, T,
                                                 [&](const std::string& id) { return D.generator(id, lim); }));
  }
  return rep;
}

Report verify_prelimit_consistency(const Degeneration& D0, const Weight& lambda, int T) {
  const int l = D0.rank();
  if (lambda.rank() != l) throw std::invalid_argument("weight rank mismatch");
  const SpinVector& spins = D0.spins();
  const QRing ring(degeneration_root_degree(lambda, spins));
  const Degeneration D(l, spins, ring);
  const LoopModule L(VermaModule(lambda, ring), spins);
  const BorelAction<MultiIndex> shifted =
      shift_representation<MultiIndex>([&](const LoopGenerator& g, const MultiIndex& m) { return L.act(g, m); },
                                       weight_shift(lambda), ring);
  const auto basis = multi_indices(l, T);
  Report rep;
  for (const auto& id : D.generator_ids()) {
    const LoopGenerator g = LoopGenerator::parse(id);
    std::vector<std::optional<std::string>> fails(basis.size());
    parallel_for(basis.size(), [&](std::size_t k) {
      const MultiIndex& m = basis[k];
      ModuleVector expected;
      const ModuleVector image = shifted(g, m);
      for (const auto& [n, c] : image.terms()) {
        expected.add(n, c * rebase_ratio(lambda, spins, n, m, ring));
      }
      const ModuleVector got = D.prelimit(g, m).map_coefficients(
          [&](const Scalar& c) { return specialize(c, lambda, spins, ring); });
      if (!(got == expected)) {
        fails[k] = "on w" + m.to_string() + ": specialised " + got.to_string() + ", rebased " + expected.to_string();
      }
    });
    std::optional<std::string> first;
    for (auto& f : fails) {
      if (!first) first = f;
    }
    if (first) {
      rep.fail("limit/specialization/" + id, *first);
    } else {
      rep.pass("limit/specialization/" + id);
    }
  }
  return rep;
}

}  // namespace qverma
