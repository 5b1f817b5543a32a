#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace akm {

using Rational = mpq_class;

// Dense univariate polynomial helpers over Q, lowest degree first.
namespace upoly {
using Poly = std::vector<Rational>;
void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
// a = quo * b + rem; b must be nonzero.
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly monic_gcd(Poly a, Poly b);
// Returns s with s*a == 1 mod m (a and m coprime).
Poly inverse_mod(const Poly& a, const Poly& m);
}  // namespace upoly

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(int exp, const Rational& c = 1);
  static LaurentPoly from_terms(const std::map<int, Rational>& terms);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Rational coeff(int exp) const;
  Rational leading() const { return c_.back(); }
  std::map<int, Rational> terms() const;
  // Coefficients of q^low .. q^high, i.e. the polynomial part after q^-low.
  const upoly::Poly& dense() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }

  LaurentPoly shifted(int by) const;
  // Substitutes q -> q^-1.
  LaurentPoly bar() const;
  std::string str() const;

 private:
  friend class QField;
  LaurentPoly(int low, upoly::Poly c);
  void normalize();
  int low_ = 0;
  upoly::Poly c_;
};

// Exact element of Q(q): reduced fraction of Laurent polynomials with a monic
// denominator whose lowest exponent is 0.
class QField {
 public:
  QField() = default;
  QField(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  QField(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  QField(const LaurentPoly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
  QField(LaurentPoly num, LaurentPoly den);

  static QField q() { return QField(LaurentPoly::monomial(1)); }
  static QField qpow(int e) { return QField(LaurentPoly::monomial(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  QField operator-() const;
  QField& operator+=(const QField& o);
  QField& operator-=(const QField& o);
  QField& operator*=(const QField& o);
  QField& operator/=(const QField& o);
  friend QField operator+(QField a, const QField& b) { return a += b; }
  friend QField operator-(QField a, const QField& b) { return a -= b; }
  friend QField operator*(QField a, const QField& b) { return a *= b; }
  friend QField operator/(QField a, const QField& b) { return a /= b; }
  bool operator==(const QField& o) const { return num_ == o.num_ && den_ == o.den_; }

  QField inverse() const;
  QField pow(int e) const;
  // Evaluate at a rational value of q (q must not be a pole).
  Rational eval(const Rational& qv) const;
  std::string str() const;

  nlohmann::json to_json() const;
  static QField from_json(const nlohmann::json& j);

 private:
  void reduce();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

// Element of the cyclotomic field Q(zeta_m), zeta_m = q at the RS point.
// Order 1 is the rational subfield and promotes under mixed arithmetic.
class CycloScalar {
 public:
  CycloScalar() = default;
  CycloScalar(long c);  // NOLINT(google-explicit-constructor)
  CycloScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  CycloScalar(int order, upoly::Poly coeffs);
  // zeta^e in Q(zeta_order).
  static CycloScalar root_power(int order, long e);

  int order() const { return order_; }
  const upoly::Poly& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
  bool operator==(const CycloScalar& o) const;

  CycloScalar inverse() const;
  std::string str() const;
  nlohmann::json to_json() const;
  static CycloScalar from_json(const nlohmann::json& j);

 private:
  void unify(CycloScalar& o);
  void reduce();
  int order_ = 1;
  upoly::Poly c_;
};

// m-th cyclotomic polynomial, lowest degree first.
const upoly::Poly& cyclotomic(int m);
int euler_phi(int m);

// Order of q = -exp(i pi/(k+1)) as a root of unity.
int rs_order(int k);

QField tau();
QField chebyshev_u(int m);
// U_m evaluated at -tau, i.e. sum_j q^(m-2j).
QField chebyshev_u_neg(int m);
// mu_m = U_{m-1}/U_m; mu(0) is 0 by convention.
QField mu(int m);
QField alpha(int n);
QField delta(int m);

CycloScalar specialize_rs(const QField& x, int k);
CycloScalar specialize_rs(const LaurentPoly& x, int k);

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const QField& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const CycloScalar& x) { return os << x.str(); }

}  // namespace akm
