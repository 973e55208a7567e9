#include "qverma/oscillator.hpp"

namespace qverma {

std::string OscWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string k = std::to_string(i + 1);
    if (d[i] > 0) s += "bdag" + k + (d[i] > 1 ? "^" + std::to_string(d[i]) : "") + " ";
    if (d[i] < 0) s += "b" + k + (d[i] < -1 ? "^" + std::to_string(-d[i]) : "") + " ";
    if (x[i] != 0) s += "q^(" + x[i].get_str() + "N" + k + ") ";
  }
  if (s.empty()) return "1";
  s.pop_back();
  return s;
}

OscElement OscElement::word(OscWord w, const Scalar& c) {
  OscElement e;
  e.add(w, c);
  return e;
}

void OscElement::add(const OscWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OscElement& OscElement::operator+=(const OscElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

OscElement& OscElement::operator-=(const OscElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

OscElement& OscElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string OscElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ") " + w.to_string();
  }
  return s;
}

OscAlgebra::OscAlgebra(int l, QRing ring) : l_(l), ring_(std::move(ring)) { check_rank(l); }

namespace {

void check_slot(int i, int l) {
  if (i < 1 || i > l) throw std::out_of_range("oscillator slot out of range");
}

}  // namespace

OscElement OscAlgebra::b(int i) const {
  check_slot(i, l_);
  OscWord w = OscWord::one(l_);
  w.d[static_cast<std::size_t>(i - 1)] = -1;
  return OscElement::word(w);
}

OscElement OscAlgebra::bdag(int i) const {
  check_slot(i, l_);
  OscWord w = OscWord::one(l_);
  w.d[static_cast<std::size_t>(i - 1)] = 1;
  return OscElement::word(w);
}

OscElement OscAlgebra::qN(int i, const Rational& x) const {
  check_slot(i, l_);
  OscWord w = OscWord::one(l_);
  w.x[static_cast<std::size_t>(i - 1)] = x;
  return OscElement::word(w);
}

OscElement OscAlgebra::qN(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != l_) throw std::invalid_argument("need one exponent per slot");
  OscWord w = OscWord::one(l_);
  w.x = x;
  return OscElement::word(w);
}

OscElement OscAlgebra::qnum_N(int i, int c) const {
  OscElement e = qN(i, 1);
  e *= ring_.q_pow(c);
  OscElement f = qN(i, -1);
  f *= ring_.q_pow(-c);
  e -= f;
  e *= ring_.kappa_inv();
  return e;
}

std::vector<std::pair<std::pair<int, Rational>, Scalar>> OscAlgebra::slot_mul(int d1, const Rational& x1, int d2,
                                                                              const Rational& x2) const {
  using Terms = std::vector<std::pair<std::pair<int, Rational>, Scalar>>;
  // X_{d1} X_{d2} with X_d = bdag^d or b^{-d}
  std::function<Terms(int, int)> raw = [&](int a, int c) -> Terms {
    if ((a >= 0 && c >= 0) || (a <= 0 && c <= 0)) return {{{a + c, Rational(0)}, Scalar(1)}};
    // bdag b = [N], b bdag = [N+1]; [N + k] X_d = X_d [N + k + d]
    const Terms inner = a > 0 ? raw(a - 1, c + 1) : raw(a + 1, c - 1);
    const int k = a > 0 ? c + 1 : c;
    Terms out;
    for (const auto& [dx, coeff] : inner) {
      out.push_back({{dx.first, dx.second + 1}, coeff * ring_.kappa_inv() * ring_.q_pow(k)});
      out.push_back({{dx.first, dx.second - 1}, -coeff * ring_.kappa_inv() * ring_.q_pow(-k)});
    }
    return out;
  };
  // q^{x1 N} X_{d2} = q^{x1 d2} X_{d2} q^{x1 N}
  const Scalar pre = ring_.q_pow(x1 * d2);
  Terms out = raw(d1, d2);
  for (auto& [dx, coeff] : out) {
    dx.second += x1 + x2;
    coeff *= pre;
  }
  return out;
}

OscElement OscAlgebra::mul(const OscElement& a, const OscElement& b) const {
  OscElement out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      std::vector<std::pair<OscWord, Scalar>> partial{{OscWord::one(l_), ca * cb}};
      for (int i = 0; i < l_; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const auto slot = slot_mul(wa.d[k], wa.x[k], wb.d[k], wb.x[k]);
        std::vector<std::pair<OscWord, Scalar>> next;
        for (const auto& [w, c] : partial) {
          for (const auto& [dx, s] : slot) {
            OscWord nw = w;
            nw.d[k] = dx.first;
            nw.x[k] = dx.second;
            next.emplace_back(std::move(nw), c * s);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [w, c] : partial) out.add(w, c);
    }
  }
  return out;
}

OscElement OscAlgebra::mul(std::initializer_list<OscElement> factors) const {
  OscElement r = one();
  for (const auto& f : factors) r = mul(r, f);
  return r;
}

OscElement OscAlgebra::pow(const OscElement& a, int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  OscElement r = one();
  for (int k = 0; k < n; ++k) r = mul(r, a);
  return r;
}

OscElement OscAlgebra::exchange(const OscElement& a) const {
  OscElement out;
  for (const auto& [w, c] : a.terms()) {
    // X_d -> (-1)^d X_{-d} for d > 0, X_d -> X_{-d} for d < 0; q^{xN} -> q^{-x} q^{-xN}
    OscElement img = OscElement::word(OscWord::one(l_), c);
    for (int i = 0; i < l_; ++i) {
      const auto k = static_cast<std::size_t>(i);
      OscElement x = qN(i + 1, -w.x[k]);
      x *= ring_.q_pow(-w.x[k]);
      OscElement y = one();
      for (int n = 0; n < std::abs(w.d[k]); ++n) {
        y = mul(y, w.d[k] > 0 ? Scalar(-1) * b(i + 1) : bdag(i + 1));
      }
      img = mul({img, y, x});
    }
    out += img;
  }
  return out;
}

FockVector OscAlgebra::chi(const OscElement& a, const FockVector& v, bool plus) const {
  FockVector out;
  for (const auto& [m, cv] : v.terms()) {
    if (m.rank() != l_) throw std::invalid_argument("Fock vector rank mismatch");
    for (const auto& [w, cw] : a.terms()) {
      Scalar c = cv * cw;
      ReducedIndex n = m;
      bool zero = false;
      for (int i = 0; i < l_ && !zero; ++i) {
        const auto k = static_cast<std::size_t>(i);
        int& occ = n.m[k];
        c *= ring_.q_pow(plus ? Rational(w.x[k] * occ) : Rational(-w.x[k] * (occ + 1)));
        const int d = w.d[k];
        // creation direction: bdag on W+, b on W-
        const bool up = plus ? d > 0 : d < 0;
        if (up) {
          occ += std::abs(d);
          continue;
        }
        for (int t = 0; t < std::abs(d); ++t) {
          if (occ == 0) {
            zero = true;
            break;
          }
          c *= plus ? ring_.qnum(occ) : -ring_.qnum(occ);
          --occ;
        }
      }
      if (!zero) out.add(n, c);
    }
  }
  return out;
}

FockVector OscAlgebra::chi_plus(const OscElement& a, const FockVector& v) const { return chi(a, v, true); }

FockVector OscAlgebra::chi_minus(const OscElement& a, const FockVector& v) const { return chi(a, v, false); }

OscElement OscAlgebra::rho(const LoopGenerator& g) const {
  const int l = l_;
  if (g.i < 0 || g.i > l) throw std::out_of_range("generator index out of range");
  std::vector<Rational> x(static_cast<std::size_t>(l));
  auto X = [&](int i) -> Rational& { return x[static_cast<std::size_t>(i - 1)]; };
  switch (g.kind) {
    case LoopGenerator::Kind::F:
      throw std::invalid_argument("f_i is not in the positive Borel subalgebra");
    case LoopGenerator::Kind::H:
      if (g.i == 0) {
        for (int j = 2; j <= l; ++j) X(j) = g.nu;
        X(1) += 2 * g.nu;
      } else if (g.i < l) {
        X(g.i + 1) = g.nu;
        X(g.i) = -g.nu;
      } else {
        for (int j = 1; j < l; ++j) X(j) = -g.nu;
        X(l) -= 2 * g.nu;
      }
      return qN(x);
    case LoopGenerator::Kind::E:
      break;
  }
  if (g.i == 0) {
    for (int j = 2; j <= l; ++j) X(j) = 1;
    return mul(bdag(1), qN(x));
  }
  if (g.i < l) {
    X(g.i) = 1;
    X(g.i + 1) = -1;
    OscElement r = mul({b(g.i), bdag(g.i + 1), qN(x)});
    r *= -ring_.q_pow(-1);
    return r;
  }
  X(l) = 1;
  OscElement r = mul(b(l), qN(x));
  r *= -ring_.kappa_inv();
  return r;
}

namespace {

void record(Report& rep, const std::string& id, const OscElement& residue) {
  if (residue.is_zero()) {
    rep.pass(id);
  } else {
    rep.fail(id, "residue " + residue.to_string());
  }
}

void record(Report& rep, const std::string& id, const std::optional<std::string>& fail) {
  if (fail) {
    rep.fail(id, *fail);
  } else {
    rep.pass(id);
  }
}

}  // namespace

Report verify_oscillator_algebra(const OscAlgebra& A, int T) {
  const int l = A.rank();
  const QRing& r = A.ring();
  Report rep;
  std::vector<std::pair<std::string, OscElement>> gens;
  std::vector<Rational> nus{1, -1, 2};
  if (r.root_degree() > 1) nus.emplace_back(1, r.root_degree());
  for (int i = 1; i <= l; ++i) {
    const std::string s = std::to_string(i);
    gens.push_back({"b" + s, A.b(i)});
    gens.push_back({"bdag" + s, A.bdag(i)});
    gens.push_back({"qN" + s, A.qN(i, 1)});
    gens.push_back({"qN" + s + "-", A.qN(i, -1)});
    record(rep, "osc/q0/" + s, A.qN(i, 0) - A.one());
    for (const auto& a : nus) {
      const std::string n = "/" + s + "/" + a.get_str();
      for (const auto& c : nus) {
        record(rep, "osc/q-add" + n + "," + c.get_str(), A.mul(A.qN(i, a), A.qN(i, c)) - A.qN(i, a + c));
      }
      record(rep, "osc/q-bdag" + n,
             A.mul({A.qN(i, a), A.bdag(i), A.qN(i, -a)}) - r.q_pow(a) * A.bdag(i));
      record(rep, "osc/q-b" + n, A.mul({A.qN(i, a), A.b(i), A.qN(i, -a)}) - r.q_pow(-a) * A.b(i));
    }
    record(rep, "osc/bdag-b/" + s, A.mul(A.bdag(i), A.b(i)) - A.qnum_N(i, 0));
    record(rep, "osc/b-bdag/" + s, A.mul(A.b(i), A.bdag(i)) - A.qnum_N(i, 1));
    for (int j = i + 1; j <= l; ++j) {
      const std::string t = s + "," + std::to_string(j);
      for (const auto& [na, x] : std::vector<std::pair<std::string, OscElement>>{
               {"b", A.b(i)}, {"bdag", A.bdag(i)}, {"qN", A.qN(i, 1)}}) {
        for (const auto& [nb, y] : std::vector<std::pair<std::string, OscElement>>{
                 {"b", A.b(j)}, {"bdag", A.bdag(j)}, {"qN", A.qN(j, 1)}}) {
          record(rep, "osc/slots-commute/" + na + nb + "/" + t, A.mul(x, y) - A.mul(y, x));
        }
      }
    }
  }
  // Longer sample words: every product of two generators.
  std::vector<std::pair<std::string, OscElement>> words = gens;
  for (const auto& [na, a] : gens) {
    for (const auto& [nb, b] : gens) words.push_back({na + "*" + nb, A.mul(a, b)});
  }
  std::optional<std::string> assoc;
  for (const auto& [na, a] : gens) {
    for (const auto& [nb, b] : gens) {
      for (const auto& [nc, c] : gens) {
        if (!assoc && !(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)))) assoc = na + "*" + nb + "*" + nc;
      }
    }
  }
  record(rep, "osc/associative", assoc);

  const auto basis = reduced_indices(l, T);
  for (const bool plus : {true, false}) {
    const std::string name = plus ? "osc/chi-plus/" : "osc/chi-minus/";
    auto chi = [&](const OscElement& w, const FockVector& v) { return plus ? A.chi_plus(w, v) : A.chi_minus(w, v); };
    std::optional<std::string> fail;
    for (const auto& [na, a] : gens) {
      for (const auto& [nb, b] : words) {
        const OscElement ab = A.mul(a, b);
        for (const auto& m : basis) {
          const FockVector v = FockVector::basis(m);
          if (!fail && !(chi(ab, v) == chi(a, chi(b, v)))) fail = na + " * " + nb + " on v" + m.to_string();
        }
      }
    }
    record(rep, name + "representation", fail);
  }
  std::optional<std::string> hom, twine;
  for (const auto& [na, a] : gens) {
    for (const auto& [nb, b] : words) {
      if (!hom && !(A.exchange(A.mul(a, b)) == A.mul(A.exchange(a), A.exchange(b)))) hom = na + " * " + nb;
    }
  }
  for (const auto& [na, a] : words) {
    for (const auto& m : basis) {
      const FockVector v = FockVector::basis(m);
      if (!twine && !(A.chi_minus(a, v) == A.chi_plus(A.exchange(a), v))) twine = na + " on v" + m.to_string();
    }
  }
  record(rep, "osc/exchange/homomorphism", hom);
  record(rep, "osc/exchange/intertwines", twine);
  for (int i = 1; i <= l; ++i) {
    const std::string s = std::to_string(i);
    const OscElement eb = A.exchange(A.b(i)), ed = A.exchange(A.bdag(i));
    record(rep, "osc/exchange/bdag-b/" + s, A.mul(ed, eb) - A.exchange(A.qnum_N(i, 0)));
    record(rep, "osc/exchange/b-bdag/" + s, A.mul(eb, ed) - A.exchange(A.qnum_N(i, 1)));
    record(rep, "osc/exchange/q-bdag/" + s,
           A.mul({A.exchange(A.qN(i, 1)), ed, A.exchange(A.qN(i, -1))}) - r.q_pow(1) * ed);
  }
  return rep;
}

Report verify_rho_homomorphism(const OscAlgebra& A) {
  const int l = A.rank();
  const QRing& r = A.ring();
  Report rep;
  auto e = [&](int i) { return A.rho(LoopGenerator::e(i)); };
  auto h = [&](int i, int nu) { return A.rho(LoopGenerator::h(i, nu)); };
  auto s = [](int i) { return std::to_string(i); };
  OscElement central = A.one();
  for (int i = 0; i <= l; ++i) {
    central = A.mul(central, h(i, 1));
    record(rep, "rho/h-inverse/" + s(i), A.mul(h(i, 1), h(i, -1)) - A.one());
    for (int j = 0; j <= l; ++j) {
      const std::string id = s(i) + "," + s(j);
      if (i < j) record(rep, "rho/h-commute/" + id, A.mul(h(i, 1), h(j, 1)) - A.mul(h(j, 1), h(i, 1)));
      record(rep, "rho/h-e/" + id,
             A.mul({h(i, 1), e(j), h(i, -1)}) - r.q_pow(affine_a_matrix(l, i, j)) * e(j));
      if (i == j) continue;
      const int n = 1 - affine_a_matrix(l, i, j);
      OscElement serre;
      for (int k = 0; k <= n; ++k) {
        OscElement t = A.mul({A.pow(e(i), n - k), e(j), A.pow(e(i), k)});
        Scalar c = (r.qfactorial(n - k) * r.qfactorial(k)).inv();
        if (k % 2) c = -c;
        serre += c * t;
      }
      record(rep, "rho/serre-e/" + id, serre);
    }
  }
  record(rep, "rho/central", central - A.one());
  return rep;
}

Report verify_oscillator_factorization(const OscAlgebra& A, const SpinVector& spins, int T) {
  const int l = A.rank();
  if (spins.rank() != l) throw std::invalid_argument("need l + 1 spins");
  std::vector<LoopGenerator> gens;
  for (int i = 0; i <= l; ++i) {
    gens.push_back(LoopGenerator::e(i));
    gens.push_back(LoopGenerator::h(i));
    gens.push_back(LoopGenerator::h(i, -1));
  }
  const auto basis = reduced_indices(l, T);
  Report rep;
  std::vector<std::optional<std::string>> fails(gens.size());
  parallel_for(gens.size(), [&](std::size_t k) {
    const LoopGenerator& g = gens[k];
    const OscElement image = gamma_twist(g, spins) * A.rho(g);
    for (const auto& m : basis) {
      const FockVector got = A.chi_plus(image, FockVector::basis(m));
      const FockVector want = act_quotient(l, g, m, A.ring(), &spins);
      if (!(got == want)) {
        fails[k] = "on v" + m.to_string() + ": oscillator " + got.to_string() + ", quotient " + want.to_string();
        return;
      }
    }
  });
  for (std::size_t k = 0; k < gens.size(); ++k) record(rep, "osc/factorization/" + gens[k].id(), fails[k]);
  return rep;
}

}  // namespace qverma
