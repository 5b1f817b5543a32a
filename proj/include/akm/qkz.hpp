#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akm/multipoly.hpp"
#include "akm/schur.hpp"
#include "akm/states.hpp"

namespace akm {

using CycloDense = std::vector<std::vector<CycloScalar>>;  // row-major

// t_i f = (q z_i - q^{-1} z_{i+1}) / (z_{i+1} - z_i) (tau_i - 1) f, with
// z_{N+1} = z_1; 1 <= i <= N = f.nvars().
MultiPoly divided_exchange(int k, int i, const MultiPoly& f);

// prod_{i<j} (q z_i - q^{-1} z_j) at the RS point.
MultiPoly psi_highest(int k, int n);

enum class QkzMethod { propagation, dense };

struct QkzSolution {
  int k = 0;
  int n = 0;
  StateBasis basis;
  // e_i at the RS point in the state basis: e_rs[i-1][r][j] is the coefficient
  // of |paths[r]> in e_i |paths[j]>.
  std::vector<CycloDense> e_rs;
  std::vector<MultiPoly> components;  // aligned with basis.paths
  // Components fixed by single-unknown propagation before any dense solve.
  int propagated = 0;
  bool used_dense = false;

  const MultiPoly& component(const Path& p) const;
};

// Solves t_i Psi = (e_i - tau) Psi for 1 <= i <= N with Psi at the highest path
// fixed to psi_highest; nk <= 6. Throws ModelError if the system is
// inconsistent or the solution is not unique, and ResourceError beyond nk <= 6.
QkzSolution solve_qkz(int k, int n, QkzMethod method = QkzMethod::propagation,
                      Gauge gauge = Gauge::sigma_orbit);

// Every component equation, re-evaluated exactly. Failures are described.
bool verify_qkz(const QkzSolution& s, std::vector<std::string>* failures = nullptr);
// Degree bounds: partial degree <= N-1, homogeneous of total degree N(N-1)/2.
bool check_degrees(const QkzSolution& s);
// Psi_p is divisible by prod (q z_a - q^{-1} z_b) over a < b inside every
// maximal cyclic run p_i < p_{i+1} < ... of p.
bool check_run_factors(const QkzSolution& s);

// Left eigenvector: v e_i = tau v for all i, normalized to 1 at the lowest
// path. Throws ModelError unless the solution space is one-dimensional.
std::vector<CycloScalar> covector(const QkzSolution& s);
// lambda with v sigma == lambda v in the state basis, if v is a shift eigenvector.
std::optional<CycloScalar> covector_shift_eigenvalue(const QkzSolution& s, const std::vector<CycloScalar>& v);

MultiPoly weighted_sum(const QkzSolution& s, const std::vector<CycloScalar>& v);

struct SumRuleReport {
  MultiPoly W;
  MultiPoly schur_product;  // prod_l s_{Y^n_{k,l}}
  std::optional<CycloScalar> constant;  // W == constant * schur_product
  bool symmetric = false;
  bool homogeneous = false;
  int points_checked = 0;
  bool ratio_constant_at_points = false;
  bool ok() const { return symmetric && homogeneous && constant.has_value() && ratio_constant_at_points; }
  nlohmann::json to_json() const;
};
// Compares W with the Schur product symbolically and at random rational points.
SumRuleReport sum_rule(const QkzSolution& s, unsigned seed = 1, int points = 5);

// Spin vector sum_p Psi_p(zs) |p> at the RS point.
SparseVec<CycloScalar> psi_spin_vector(const QkzSolution& s, const std::vector<Rational>& zs);
// R_i(z_{i+1}, z_i) Psi(z) == Psi(.., z_{i+1}, z_i, ..) in the spin representation
// for every i (cyclic), at the given point. This is the exchange form of t_i Psi = (e_i - tau) Psi.
bool check_spin_exchange(const QkzSolution& s, const std::vector<Rational>& zs);

// T(t|zs) x with T = Tr_0 (shift D_0 R_{0N}(z_N, t) ... R_{01}(z_1, t)), where
// R_{0j}(z, t) = P_{0j} (a + b e_{0j}) on (auxiliary, site j) and
// D = diag(q^{-(k-1)}, ..., q^{k-1}) is the twist that closes the chain.
SparseVec<CycloScalar> transfer_apply(int k, int n, const Rational& t, const std::vector<Rational>& zs,
                                      const SparseVec<CycloScalar>& x, const CycloScalar& shift = CycloScalar(1));
// T(t|zs) Psi(zs) == Psi(zs), with the twist scaled by 1/lambda so that it is
// normalized like the shift fixing the covector (v sigma = lambda v).
bool transfer_matrix_check(const QkzSolution& s, const Rational& t, const std::vector<Rational>& zs);

struct WheelReport {
  int m = 0;
  int direction = 1;
  std::optional<CycloScalar> constant;  // C, shared by every embedded path
  int embedded = 0;                     // components compared with the smaller size
  int vanishing = 0;                    // components that must vanish and do
  bool ok = false;
  nlohmann::json to_json() const;
};
// Under z_{m+j} = q^{2 direction j} z (0 <= j < k), Psi at the path with 1..k
// inserted at positions m..m+k-1 equals C z^{k(k-1)/2} prod_{j outside}
// (q z_j - q^{-1} z)^k times the smaller solution at the remaining variables;
// paths without the run there vanish.
WheelReport wheel_recursion_check(const QkzSolution& big, const QkzSolution& small, int m, int direction = 1);

nlohmann::json qkz_solution_to_json(const QkzSolution& s, const std::vector<CycloScalar>& v,
                                    const SumRuleReport& rule);

}  // namespace akm
