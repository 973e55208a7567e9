#include "qverma/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qverma {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("VarSet: too many variables");
  }
  for (std::size_t a = 0; a < names_.size(); ++a) {
    for (std::size_t b = a + 1; b < names_.size(); ++b) {
      if (names_[a] == names_[b]) {
        throw std::invalid_argument("VarSet: duplicate variable '" + names_[a] + "'");
      }
    }
  }
}

const VarSet& VarSet::standard() {
  static const VarSet vars({"v", "zeta", "zt", "u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8", "u9"});
  return vars;
}

std::optional<std::size_t> VarSet::slot(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// LaurentPoly

namespace {

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (small[k] > big[k]) return false;
  }
  return true;
}

Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t k = 0; k < kMaxVars; ++k) r[k] = a[k] + b[k];
  return r;
}

Exponents operator-(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t k = 0; k < kMaxVars; ++k) r[k] = a[k] - b[k];
  return r;
}

Exponents negated(const Exponents& a) {
  Exponents r{};
  for (std::size_t k = 0; k < kMaxVars; ++k) r[k] = -a[k];
  return r;
}

// Merges two sorted term vectors, a + sign * b.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, negate_b ? Rational(-ib->second) : ib->second);
      ++ib;
    } else {
      Rational c = negate_b ? Rational(ia->second - ib->second) : Rational(ia->second + ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(Exponents{}, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Exponents{}, c);
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t slot, int32_t power) {
  Exponents e{};
  e.at(slot) = power;
  return monomial(e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponents{});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Exponents{} && terms_[0].second == 1;
}

bool LaurentPoly::uses(std::size_t slot) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [slot](const Term& t) { return t.first[slot] != 0; });
}

int32_t LaurentPoly::min_exponent(std::size_t slot) const {
  int32_t m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.first[slot] < m) m = t.first[slot];
    first = false;
  }
  return m;
}

int32_t LaurentPoly::max_exponent(std::size_t slot) const {
  int32_t m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.first[slot] > m) m = t.first[slot];
    first = false;
  }
  return m;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m{};
  bool first = true;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (first || t.first[k] < m[k]) m[k] = t.first[k];
    }
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& mono = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& other = a.terms_.size() == 1 ? b : a;
    LaurentPoly r;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      r.terms_.emplace_back(t.first + mono.terms_[0].first, t.second * mono.terms_[0].second);
    }
    return r;
  }
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.emplace_back(x.first + y.first, x.second * y.second);
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first + shift;
  return r;
}

LaurentPoly LaurentPoly::invert_variable(std::size_t slot) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first[slot] = -t.first[slot];
  return from_terms(std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};
  if (divisor.is_monomial()) {
    const auto& [e, c] = divisor.terms_[0];
    return shifted(negated(e)).scaled(1 / c);
  }
  // Shift both to genuine polynomials; the quotient is then a polynomial.
  const Exponents amin = min_exponents();
  const Exponents bmin = divisor.min_exponents();
  LaurentPoly rem = shifted(negated(amin));
  const LaurentPoly b = divisor.shifted(negated(bmin));
  const auto& [blead_e, blead_c] = b.leading();
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto& [e, c] = rem.leading();
    if (!divides(blead_e, e)) return std::nullopt;
    Term t{e - blead_e, c / blead_c};
    rem -= b * monomial(t.first, t.second);
    quotient.push_back(std::move(t));
  }
  return from_terms(std::move(quotient)).shifted(amin - bmin);
}

std::complex<double> LaurentPoly::eval(const std::array<std::complex<double>, kMaxVars>& at) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.get_d();
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (e[k] != 0) term *= std::pow(at[k], e[k]);
    }
    sum += term;
  }
  return sum;
}

std::string LaurentPoly::to_string(const VarSet& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool trivial = e == Exponents{};
    if (mag != 1 || trivial) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << "*";
      os << vars.name(k);
      if (e[k] != 1) os << "^" << e[k];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial gcd

namespace {

using Term = LaurentPoly::Term;

LaurentPoly strip_monomial(const LaurentPoly& p) { return p.shifted(negated(p.min_exponents())); }

LaurentPoly monic(const LaurentPoly& p) { return p.scaled(1 / p.leading().second); }

LaurentPoly normalized(const LaurentPoly& p) { return monic(strip_monomial(p)); }

// Coefficients of p viewed as a polynomial in variable x.
std::map<int32_t, LaurentPoly> split_by(const LaurentPoly& p, std::size_t x) {
  std::map<int32_t, std::vector<Term>> buckets;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[x] = 0;
    buckets[e[x]].emplace_back(rest, c);
  }
  std::map<int32_t, LaurentPoly> out;
  for (auto& [k, terms] : buckets) out.emplace(k, LaurentPoly::from_terms(std::move(terms)));
  return out;
}

std::vector<std::size_t> used_vars(const LaurentPoly& p) {
  std::vector<std::size_t> vs;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if (p.uses(k)) vs.push_back(k);
  }
  return vs;
}

using Dense = std::vector<Rational>;

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense to_dense(const LaurentPoly& p, std::size_t x) {
  Dense d(static_cast<std::size_t>(p.max_exponent(x)) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e[x])] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, std::size_t x) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    Exponents e{};
    e[x] = static_cast<int32_t>(k);
    terms.emplace_back(e, d[k]);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// a mod b for dense univariate polynomials, b monic.
void dense_mod(Dense& a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    Rational lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= lead * b[k];
    }
    a.pop_back();
  }
  trim(a);
}

LaurentPoly univariate_gcd(const LaurentPoly& pa, const LaurentPoly& pb, std::size_t x) {
  Dense a = to_dense(pa, x);
  Dense b = to_dense(pb, x);
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Rational lead = b.back();
    for (auto& c : b) c /= lead;
    dense_mod(a, b);
    std::swap(a, b);
  }
  return normalized(from_dense(a, x));
}

LaurentPoly gcd_impl(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t x) {
  LaurentPoly g;
  for (const auto& [k, c] : split_by(p, x)) {
    g = gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p, std::size_t x) {
  return *p.divide_exact(content_in(p, x));
}

int32_t degree_in(const LaurentPoly& p, std::size_t x) { return p.max_exponent(x); }

LaurentPoly lead_coeff_in(const LaurentPoly& p, std::size_t x) {
  return split_by(p, x).rbegin()->second;
}

// Primitive remainder sequence in x; a and b are primitive in x.
LaurentPoly prs_gcd(LaurentPoly a, LaurentPoly b, std::size_t x) {
  if (degree_in(a, x) < degree_in(b, x)) std::swap(a, b);
  while (!b.is_zero()) {
    if (degree_in(b, x) == 0) return LaurentPoly(1);
    const LaurentPoly lb = lead_coeff_in(b, x);
    const int32_t db = degree_in(b, x);
    LaurentPoly r = a;
    while (!r.is_zero() && degree_in(r, x) >= db) {
      const LaurentPoly lr = lead_coeff_in(r, x);
      Exponents shift{};
      shift[x] = degree_in(r, x) - db;
      r = r * lb - (lr * b).shifted(shift);
    }
    a = std::move(b);
    b = r.is_zero() ? LaurentPoly{} : primitive_part(strip_monomial(r), x);
  }
  return a;
}

LaurentPoly gcd_impl(const LaurentPoly& a_in, const LaurentPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) return {};
  if (a_in.is_zero()) return normalized(b_in);
  if (b_in.is_zero()) return normalized(a_in);
  const LaurentPoly a = strip_monomial(a_in);
  const LaurentPoly b = strip_monomial(b_in);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  const auto va = used_vars(a);
  const auto vb = used_vars(b);
  for (std::size_t x : va) {
    if (!b.uses(x)) return gcd_impl(content_in(a, x), b);
  }
  for (std::size_t x : vb) {
    if (!a.uses(x)) return gcd_impl(a, content_in(b, x));
  }
  if (va.size() == 1) return univariate_gcd(a, b, va[0]);
  std::size_t x = va[0];
  for (std::size_t y : va) {
    if (std::max(a.max_exponent(y), b.max_exponent(y)) < std::max(a.max_exponent(x), b.max_exponent(x))) x = y;
  }
  const LaurentPoly ca = content_in(a, x);
  const LaurentPoly cb = content_in(b, x);
  const LaurentPoly pa = *a.divide_exact(ca);
  const LaurentPoly pb = *b.divide_exact(cb);
  LaurentPoly g = prs_gcd(pa, pb, x);
  return normalized(gcd_impl(ca, cb) * primitive_part(g, x));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) { return gcd_impl(a, b); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::fraction(LaurentPoly num, LaurentPoly den) {
  Scalar s(std::move(num), std::move(den), 0);
  s.normalize();
  return s;
}

Scalar Scalar::monomial(const Exponents& e, const Rational& c) {
  return Scalar(LaurentPoly::monomial(e, c));
}

Scalar Scalar::variable(std::size_t slot, int32_t power) {
  return Scalar(LaurentPoly::variable(slot, power));
}

void Scalar::normalize() {
  if (den_.is_zero()) throw ArithmeticError("division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = *num_.divide_exact(den_);
    den_ = LaurentPoly(1);
    return;
  }
  const Exponents m = den_.min_exponents();
  const Rational lc = den_.leading().second;
  den_ = den_.shifted(negated(m)).scaled(1 / lc);
  num_ = num_.shifted(negated(m)).scaled(1 / lc);
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, 0); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  num_ *= o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return fraction(den_, num_);
}

Scalar Scalar::pow(int64_t n) const {
  if (n < 0) return inv().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar Scalar::invert_variable(std::size_t slot) const {
  return fraction(num_.invert_variable(slot), den_.invert_variable(slot));
}

namespace {

Scalar substitute_poly(const LaurentPoly& p, std::size_t slot, const Scalar& value) {
  Scalar out;
  for (const auto& [k, coeff] : split_by(p, slot)) {
    if (k < 0 && value.is_zero()) {
      throw ArithmeticError("negative power of a variable substituted by zero");
    }
    out += Scalar(coeff) * (k == 0 ? Scalar(1) : value.pow(k));
  }
  return out;
}

}  // namespace

Scalar Scalar::substitute(std::size_t slot, const Scalar& value) const {
  if (!num_.uses(slot) && !den_.uses(slot)) return *this;
  Scalar n = substitute_poly(num_, slot, value);
  Scalar d = substitute_poly(den_, slot, value);
  if (d.is_zero()) throw ArithmeticError("substitution hits a pole");
  return n / d;
}

bool Scalar::is_polynomial_in(std::size_t slot) const {
  return !den_.uses(slot) && num_.min_exponent(slot) >= 0;
}

std::optional<int32_t> Scalar::homogeneous_degree(std::size_t slot) const {
  if (is_zero() || den_.uses(slot)) return std::nullopt;
  const int32_t lo = num_.min_exponent(slot);
  if (lo != num_.max_exponent(slot)) return std::nullopt;
  return lo;
}

std::complex<double> Scalar::eval(const std::array<std::complex<double>, kMaxVars>& at) const {
  const std::complex<double> d = den_.eval(at);
  double scale = 0;
  for (const auto& [e, c] : den_.terms()) scale += std::abs(c.get_d());
  if (std::abs(d) <= 1e-14 * scale) throw ArithmeticError("pole: denominator evaluates to zero");
  return num_.eval(at) / d;
}

std::string Scalar::to_string(const VarSet& vars) const {
  if (den_.is_one()) return num_.to_string(vars);
  return "(" + num_.to_string(vars) + ")/(" + den_.to_string(vars) + ")";
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  Scalar parse() {
    skip();
    Scalar result;
    if (peek() == '(') {
      ++pos_;
      LaurentPoly num = poly();
      expect(')');
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        expect('(');
        LaurentPoly den = poly();
        expect(')');
        result = Scalar::fraction(std::move(num), std::move(den));
      } else {
        result = Scalar(std::move(num));
      }
    } else {
      result = Scalar(poly());
    }
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("Scalar::parse: " + what + " at offset " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  LaurentPoly poly() {
    skip();
    LaurentPoly sum;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      LaurentPoly t = term();
      sum += negative ? -t : t;
      skip();
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else {
        break;
      }
    }
    return sum;
  }

  LaurentPoly term() {
    Rational coeff = 1;
    Exponents e{};
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        Rational r(num);
        if (peek() == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
          ++pos_;
          r /= Rational(digits());
        }
        coeff *= r;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto slot = vars_.slot(name);
        if (!slot) fail("unknown variable '" + name + "'");
        int32_t power = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          bool neg = false;
          if (peek() == '-') {
            neg = true;
            ++pos_;
          }
          power = static_cast<int32_t>(std::stol(digits()));
          if (neg) power = -power;
        }
        e[*slot] += power;
      } else {
        fail("expected coefficient or variable");
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return LaurentPoly::monomial(e, coeff);
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const VarSet& vars) {
  return ScalarParser(text, vars).parse();
}

// ---------------------------------------------------------------------------
// QRing

QRing::QRing(int64_t root_degree) : root_degree_(root_degree) {
  if (root_degree <= 0) throw std::invalid_argument("QRing: root degree must be positive");
  const auto d = static_cast<int32_t>(root_degree);
  kappa_ = Scalar(LaurentPoly::variable(var::kV, d) - LaurentPoly::variable(var::kV, -d));
  kappa_inv_ = kappa_.inv();
}

int32_t QRing::v_exponent(const Rational& e) const {
  Rational x = e * Rational(root_degree_);
  x.canonicalize();
  if (x.get_den() != 1) {
    throw ArithmeticError("q^(" + e.get_str() + ") is not a power of v with D = " +
                          std::to_string(root_degree_));
  }
  if (!x.get_num().fits_sint_p()) throw ArithmeticError("exponent overflow");
  return static_cast<int32_t>(x.get_num().get_si());
}

Scalar QRing::q_pow(const Rational& e) const {
  return Scalar::variable(var::kV, v_exponent(e));
}

Scalar QRing::qnum(int64_t nu) const {
  if (nu == 0) return Scalar();
  const int64_t n = nu < 0 ? -nu : nu;
  std::vector<LaurentPoly::Term> terms;
  for (int64_t k = 0; k < n; ++k) {
    Exponents e{};
    e[var::kV] = static_cast<int32_t>((n - 1 - 2 * k) * root_degree_);
    terms.emplace_back(e, Rational(nu < 0 ? -1 : 1));
  }
  return Scalar(LaurentPoly::from_terms(std::move(terms)));
}

Scalar QRing::qnum(int64_t nu, const Scalar& shift) const {
  if (!shift.is_monomial()) {
    throw std::invalid_argument("qnum: shift must be an invertible monomial");
  }
  const Scalar qn = q_pow(Rational(nu));
  return (shift * qn - shift.inv() * qn.inv()) * kappa_inv_;
}

Scalar QRing::qfactorial(int64_t n) const {
  if (n < 0) throw std::invalid_argument("qfactorial: negative argument");
  Scalar r(1);
  for (int64_t k = 2; k <= n; ++k) r *= qnum(k);
  return r;
}

std::complex<double> QRing::eval_numeric(
    const Scalar& s, const std::map<std::string, std::complex<double>>& assignment,
    const VarSet& vars) const {
  std::array<std::complex<double>, kMaxVars> at{};
  std::array<bool, kMaxVars> known{};
  for (const auto& [name, value] : assignment) {
    if (name == "q" && !vars.slot("q")) {
      at[var::kV] = std::pow(value, 1.0 / static_cast<double>(root_degree_));
      known[var::kV] = true;
      continue;
    }
    auto slot = vars.slot(name);
    if (!slot) throw std::invalid_argument("eval_numeric: unknown variable '" + name + "'");
    at[*slot] = value;
    known[*slot] = true;
  }
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    if ((s.num().uses(k) || s.den().uses(k)) && !known[k]) {
      throw std::invalid_argument("eval_numeric: variable '" + vars.name(k) + "' is unassigned");
    }
  }
  return s.eval(at);
}

int64_t denominator_lcm(const std::vector<Rational>& values) {
  int64_t l = 1;
  for (Rational v : values) {
    v.canonicalize();
    l = std::lcm(l, static_cast<int64_t>(v.get_den().get_si()));
  }
  return l;
}

}  // namespace qverma
