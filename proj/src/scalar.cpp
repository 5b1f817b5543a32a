#include "akm/scalar.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "akm/errors.hpp"

namespace akm {

namespace upoly {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.empty()) throw ArgumentError("polynomial division by zero");
  rem = a;
  trim(rem);
  quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    size_t shift = rem.size() - b.size();
    Rational f = rem.back() / lead;
    quo[shift] = f;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= f * b[j];
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
}

Poly monic_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // extended Euclid on (m, a): track s with s*a == r mod m
  Poly r0 = m, r1 = a;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw PoleError("element is not invertible modulo the cyclotomic polynomial");
  Rational inv = 1 / r0[0];
  for (auto& c : s0) c *= inv;
  Poly q, rem;
  divmod(s0, m, q, rem);
  return rem;
}

}  // namespace upoly

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.push_back(Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
  if (!c_.empty()) c_[0].canonicalize();
}

LaurentPoly::LaurentPoly(int low, upoly::Poly c) : low_(low), c_(std::move(c)) { normalize(); }

LaurentPoly LaurentPoly::monomial(int exp, const Rational& c) {
  Rational r = c;
  r.canonicalize();
  return LaurentPoly(exp, upoly::Poly{r});
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Rational>& terms) {
  if (terms.empty()) return {};
  int lo = terms.begin()->first, hi = terms.rbegin()->first;
  upoly::Poly c(hi - lo + 1);
  for (const auto& [e, v] : terms) {
    c[e - lo] = v;
    c[e - lo].canonicalize();
  }
  return LaurentPoly(lo, std::move(c));
}

void LaurentPoly::normalize() {
  upoly::trim(c_);
  size_t z = 0;
  while (z < c_.size() && sgn(c_[z]) == 0) ++z;
  if (z > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
    low_ += static_cast<int>(z);
  }
  if (c_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }

Rational LaurentPoly::coeff(int exp) const {
  if (exp < low_ || exp > high() || c_.empty()) return 0;
  return c_[exp - low_];
}

std::map<int, Rational> LaurentPoly::terms() const {
  std::map<int, Rational> t;
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) t[low_ + static_cast<int>(i)] = c_[i];
  return t;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  upoly::Poly c(hi - lo + 1);
  for (size_t i = 0; i < c_.size(); ++i) c[low_ - lo + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[o.low_ - lo + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentPoly();
  c_ = upoly::mul(c_, o.c_);
  low_ += o.low_;
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += by;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  upoly::Poly c(c_.rbegin(), c_.rend());
  return LaurentPoly(-high(), std::move(c));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    int e = low_ + i;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = (a == 1);
    if (!unit || e == 0) os << a.get_str();
    if (e != 0) {
      if (!unit) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// --------------------------------------------------------------------- QField

QField::QField(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArgumentError("QField with zero denominator");
  reduce();
}

void QField::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_one()) {
    upoly::Poly g = upoly::monic_gcd(num_.c_, den_.c_);
    if (g.size() > 1) {
      upoly::Poly q, r;
      upoly::divmod(num_.c_, g, q, r);
      num_ = LaurentPoly(num_.low_, std::move(q));
      upoly::divmod(den_.c_, g, q, r);
      den_ = LaurentPoly(den_.low_, std::move(q));
    }
    int shift = den_.low_;
    Rational lead = den_.leading();
    num_.low_ -= shift;
    den_.low_ = 0;
    if (lead != 1) {
      for (auto& c : num_.c_) c /= lead;
      for (auto& c : den_.c_) c /= lead;
    }
  }
}

QField QField::operator-() const {
  QField r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

upoly::Poly exact_quotient(const upoly::Poly& a, const upoly::Poly& b) {
  upoly::Poly q, r;
  upoly::divmod(a, b, q, r);
  return q;
}

bool is_monomial(const LaurentPoly& p) { return p.dense().size() == 1; }

}  // namespace

QField& QField::operator+=(const QField& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d) where
  // b = g b', d = g d'; only gcd(numerator, g) can cancel.
  upoly::Poly g = upoly::monic_gcd(den_.c_, o.den_.c_);
  if (g.size() == 1) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  LaurentPoly b1(0, exact_quotient(den_.c_, g)), d1(0, exact_quotient(o.den_.c_, g));
  LaurentPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = QField();
  LaurentPoly gl(0, g);
  upoly::Poly g2 = upoly::monic_gcd(t.c_, g);
  if (g2.size() > 1) {
    t = LaurentPoly(t.low_, exact_quotient(t.c_, g2));
    gl = LaurentPoly(0, exact_quotient(g, g2));
  }
  num_ = std::move(t);
  den_ = b1 * d1 * gl;
  Rational lead = den_.leading();
  if (lead != 1) {
    for (auto& c : num_.c_) c /= lead;
    for (auto& c : den_.c_) c /= lead;
  }
  return *this;
}

QField& QField::operator-=(const QField& o) { return *this += -o; }

QField& QField::operator*=(const QField& o) {
  if (is_zero() || o.is_zero()) return *this = QField();
  // A monomial q^j c shares no factor with a denominator of nonzero constant term.
  if (o.den_.is_one() && (den_.is_one() || is_monomial(o.num_))) {
    num_ *= o.num_;
    return *this;
  }
  if (den_.is_one() && is_monomial(num_)) {
    LaurentPoly n = num_;
    *this = o;
    num_ *= n;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

QField& QField::operator/=(const QField& o) { return *this *= o.inverse(); }

QField QField::inverse() const {
  if (is_zero()) throw ArgumentError("QField division by zero");
  return QField(den_, num_);
}

QField QField::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QField r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

static Rational eval_laurent(const LaurentPoly& p, const Rational& qv) {
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    mpq_class base = e >= 0 ? qv : Rational(1) / qv;
    for (int i = 0; i < std::abs(e); ++i) t *= base;
    acc += t;
  }
  return acc;
}

Rational QField::eval(const Rational& qv) const {
  Rational d = eval_laurent(den_, qv);
  if (sgn(d) == 0) throw PoleError("QField evaluated at a pole");
  return eval_laurent(num_, qv) / d;
}

std::string QField::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

static nlohmann::json terms_json(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, c.get_str()});
  return arr;
}

static LaurentPoly terms_from_json(const nlohmann::json& arr) {
  std::map<int, Rational> t;
  for (const auto& item : arr) {
    Rational c(item.at(1).get<std::string>());
    c.canonicalize();
    t[item.at(0).get<int>()] += c;
  }
  return LaurentPoly::from_terms(t);
}

nlohmann::json QField::to_json() const {
  return {{"num", terms_json(num_)}, {"den", terms_json(den_)}};
}

QField QField::from_json(const nlohmann::json& j) {
  return QField(terms_from_json(j.at("num")), terms_from_json(j.at("den")));
}

// ---------------------------------------------------------------- cyclotomic

int euler_phi(int m) {
  int r = m;
  for (int p = 2, x = m; x > 1; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      r -= r / p;
    }
  }
  return r;
}

static const upoly::Poly& phi_locked(int m, std::map<int, upoly::Poly>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  upoly::Poly p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    upoly::Poly q, r;
    upoly::divmod(p, phi_locked(d, cache), q, r);
    p = std::move(q);
  }
  return cache[m] = std::move(p);
}

const upoly::Poly& cyclotomic(int m) {
  if (m < 1) throw ArgumentError("cyclotomic: order must be positive");
  static std::mutex mtx;
  static std::map<int, upoly::Poly> cache;
  std::lock_guard<std::mutex> lock(mtx);
  return phi_locked(m, cache);
}

int rs_order(int k) {
  if (k < 1) throw ArgumentError("rs_order: k must be positive");
  int n = 2 * (k + 1);
  return n / std::gcd(k + 2, n);
}

// --------------------------------------------------------------- CycloScalar

CycloScalar::CycloScalar(long c) {
  if (c != 0) c_.push_back(Rational(c));
}

CycloScalar::CycloScalar(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
  if (!c_.empty()) c_[0].canonicalize();
}

CycloScalar::CycloScalar(int order, upoly::Poly coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw ArgumentError("CycloScalar order must be positive");
  for (auto& c : c_) c.canonicalize();
  reduce();
}

CycloScalar CycloScalar::root_power(int order, long e) {
  long r = ((e % order) + order) % order;
  upoly::Poly c(r + 1, Rational(0));
  c[r] = 1;
  return CycloScalar(order, std::move(c));
}

void CycloScalar::reduce() {
  upoly::trim(c_);
  if (order_ > 1 && static_cast<int>(c_.size()) > euler_phi(order_)) {
    upoly::Poly q, r;
    upoly::divmod(c_, cyclotomic(order_), q, r);
    c_ = std::move(r);
  }
  if (order_ == 1 && c_.size() > 1) {
    Rational s = 0;
    for (auto& c : c_) s += c;
    c_ = sgn(s) ? upoly::Poly{s} : upoly::Poly{};
  }
}

Rational CycloScalar::rational_value() const {
  if (!is_rational()) throw ArgumentError("CycloScalar is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

void CycloScalar::unify(CycloScalar& o) {
  if (order_ == o.order_) return;
  if (is_rational() && order_ == 1) {
    order_ = o.order_;
    return;
  }
  if (o.is_rational() && o.order_ == 1) {
    o.order_ = order_;
    return;
  }
  throw ArgumentError("CycloScalar order mismatch");
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  CycloScalar b = o;
  unify(b);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
  for (size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  upoly::trim(c_);
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  CycloScalar b = o;
  unify(b);
  c_ = upoly::mul(c_, b.c_);
  reduce();
  return *this;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) {
  CycloScalar b = o;
  unify(b);
  return *this *= b.inverse();
}

bool CycloScalar::operator==(const CycloScalar& o) const {
  if (c_ != o.c_) return false;
  return order_ == o.order_ || is_rational();
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw ArgumentError("CycloScalar division by zero");
  if (is_rational()) {
    CycloScalar r(Rational(1) / c_[0]);
    r.order_ = order_;
    return r;
  }
  return CycloScalar(order_, upoly::inverse_mod(c_, cyclotomic(order_)));
}

std::string CycloScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << (sgn(c_[i]) < 0 ? " - " : " + ");
    else if (sgn(c_[i]) < 0) os << "-";
    first = false;
    Rational a = abs(c_[i]);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

nlohmann::json CycloScalar::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : c_) arr.push_back(c.get_str());
  return {{"order", order_}, {"coeffs", arr}};
}

CycloScalar CycloScalar::from_json(const nlohmann::json& j) {
  upoly::Poly c;
  for (const auto& s : j.at("coeffs")) {
    Rational r(s.get<std::string>());
    r.canonicalize();
    c.push_back(r);
  }
  return CycloScalar(j.at("order").get<int>(), std::move(c));
}

// ----------------------------------------------------------------- constants

QField tau() { return QField(-(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1))); }

QField chebyshev_u(int m) {
  if (m < 0) throw ArgumentError("chebyshev_u: m must be nonnegative");
  LaurentPoly a(1), b = tau().num();
  if (m == 0) return QField(a);
  for (int i = 1; i < m; ++i) {
    LaurentPoly c = tau().num() * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return QField(b);
}

QField chebyshev_u_neg(int m) {
  if (m < 0) throw ArgumentError("chebyshev_u_neg: m must be nonnegative");
  LaurentPoly r;
  for (int j = 0; j <= m; ++j) r += LaurentPoly::monomial(m - 2 * j);
  return QField(r);
}

QField mu(int m) {
  if (m < 0) throw ArgumentError("mu: m must be nonnegative");
  if (m == 0) return QField();
  return chebyshev_u(m - 1) / chebyshev_u(m);
}

QField alpha(int n) {
  if (n < 1) throw ArgumentError("alpha: n must be positive");
  if (n > 12) throw ResourceError("alpha: n > 12 exceeds the exponent budget");
  QField r(1);
  for (int i = 1; i <= n; ++i) r *= mu(i).pow(-(1 << (n - i)));
  return r;
}

QField delta(int m) { return mu(m) - mu(m - 1); }

// --------------------------------------------------------------- specialize

CycloScalar specialize_rs(const LaurentPoly& x, int k) {
  int m = rs_order(k);
  upoly::Poly c(m, Rational(0));
  for (const auto& [e, v] : x.terms()) c[((e % m) + m) % m] += v;
  return CycloScalar(m, std::move(c));
}

CycloScalar specialize_rs(const QField& x, int k) {
  CycloScalar d = specialize_rs(x.den(), k);
  if (d.is_zero()) {
    int m = rs_order(k);
    // the vanishing factor is the part of the denominator shared with Phi_m(q)
    upoly::Poly g = upoly::monic_gcd(x.den().dense(), cyclotomic(m));
    throw PoleError("denominator factor " + LaurentPoly::from_terms([&] {
                      std::map<int, Rational> t;
                      for (size_t i = 0; i < g.size(); ++i)
                        if (sgn(g[i])) t[static_cast<int>(i)] = g[i];
                      return t;
                    }()).str() +
                    " vanishes at the RS point (order " + std::to_string(m) + ")");
  }
  return specialize_rs(x.num(), k) / d;
}

}  // namespace akm
