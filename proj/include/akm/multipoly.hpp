#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "akm/scalar.hpp"
#include "json.hpp"

namespace akm {

using Exponents = std::vector<int>;

// Sparse polynomial in z_1..z_n over a cyclotomic field; no zero coefficients.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const CycloScalar& c);
  // z_{i+1} (zero-based i).
  static MultiPoly var(int nvars, int i);
  static MultiPoly monomial(const Exponents& e, const CycloScalar& c = CycloScalar(1));
  // a z_i + b z_j (zero-based).
  static MultiPoly linear(int nvars, int i, const CycloScalar& a, int j, const CycloScalar& b);

  int nvars() const { return nvars_; }
  const std::map<Exponents, CycloScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycloScalar coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const CycloScalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const CycloScalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const CycloScalar& c) { return a *= c; }
  friend MultiPoly operator*(const CycloScalar& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  MultiPoly pow(int e) const;
  // Exchanges z_i and z_j (zero-based).
  MultiPoly swapped(int i, int j) const;
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int i) const;
  bool is_homogeneous() const;
  bool is_symmetric() const;

  CycloScalar evaluate(const std::vector<CycloScalar>& point) const;
  // Replaces z_i by images[i]; every image must have the same number of variables.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  std::string str() const;
  // [[exponents, scalar], ...] in increasing exponent order.
  nlohmann::json to_json() const;

 private:
  int nvars_;
  std::map<Exponents, CycloScalar> terms_;
};

// f = quotient * g when g divides f exactly; nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

}  // namespace akm
