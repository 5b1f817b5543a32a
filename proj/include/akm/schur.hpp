#pragma once

#include <optional>
#include <vector>

#include "akm/multipoly.hpp"
#include "json.hpp"

namespace akm {

// q at the RS point for the given k.
CycloScalar rs_q(int k);

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// Throws ArgumentError unless p is weakly decreasing and nonnegative; drops zeros.
Partition normalize_partition(const Partition& p);
Partition conjugate(const Partition& p);

// n repeated l times, then n-1, ..., 1 each repeated k times.
Partition young_Y(int k, int l, int n);

// Elementary and complete homogeneous symmetric polynomials in nvars variables.
MultiPoly elementary(int r, int nvars);
MultiPoly complete(int r, int nvars);
// Schur polynomial via the Jacobi-Trudi determinant (complete or elementary
// form, whichever is smaller). Rational coefficients.
MultiPoly schur_poly(const Partition& lambda, int nvars);
enum class JacobiTrudi { complete, elementary };
MultiPoly schur_poly(const Partition& lambda, int nvars, JacobiTrudi form);
// Ratio of alternants; the values must be pairwise distinct.
CycloScalar schur_bialternant(const Partition& lambda, const std::vector<CycloScalar>& x);
// Sum over semistandard tableaux of x^T.
CycloScalar schur_tableaux(const Partition& lambda, const std::vector<CycloScalar>& x);
// Number of semistandard tableaux with entries <= m by the hook-content formula.
Rational schur_dimension(const Partition& lambda, int m);

// s_{(1^l)}(1, q^2, ..., q^{2(k-1)}) == (-1)^l q^{-2l} at the RS point for 0 <= l <= k-1.
bool check_principal_specialization(int k);

struct SchurRecursionReport {
  int k = 0;
  int n = 0;
  // Per l: s_{Y^n_{k,l}} under z_{k(n-1)+j} = q^{2(j-1)} z equals
  // (-1)^l q^{-2l} z^l prod_i (z_i - q^{2k} z) s_{Y^{n-1}_{k,l}}(z').
  std::vector<bool> per_l;
  bool degrees_match = true;
  // Product over l with the prefactor (-1)^{k(k+1)/2} q^2 z^{k(k-1)/2}.
  bool product_printed = false;
  // Product over l with the product of the per-l prefactors,
  // (-1)^{k(k-1)/2} q^{-k(k-1)} z^{k(k-1)/2}.
  bool product_derived = false;
  // c with product(lhs) == c z^{k(k-1)/2} prod_i (z_i - q^{2k} z)^k S^{n-1}(z'),
  // when such a constant exists.
  std::optional<CycloScalar> product_constant;
  bool per_l_ok() const;
  bool ok() const { return per_l_ok() && degrees_match && product_printed; }
  nlohmann::json to_json() const;
};
// 2 <= k, 2 <= n, nk <= 9.
SchurRecursionReport check_schur_recursion(int k, int n);

// The Schur numerator determinant det(x_i^{lambda_j + m - j}) vanishes when the
// variables contain z, q^2 z, ..., q^{2(k-1)} z and q^{2k} z (checked for
// every Y^n_{k,l} with n <= 2 at a sample point).
bool check_wheel_vanishing(int k);

// prod_l s_{Y^n_{k,l}}(1, ..., 1).
Rational homogeneous_sum(int k, int n);
// Same product counted by tableau enumeration.
Rational homogeneous_sum_tableaux(int k, int n);

nlohmann::json partition_to_json(const Partition& p);

}  // namespace akm
