#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akm/spin.hpp"
#include "akm/tiling.hpp"

namespace akm {

using DenseMat = std::vector<std::vector<QField>>;  // row-major

// Normalization of the state vectors.
//  word: each state is its word applied to v0.
//  sigma_orbit: the member of each sigma-orbit with the fewest rhombi keeps its
//  word vector; the others are its images under sigma.
enum class Gauge { word, sigma_orbit };

struct StateBasis {
  int k = 0;
  int n = 0;
  Gauge gauge = Gauge::sigma_orbit;
  std::vector<Path> paths;  // basis order
  std::vector<Word> words;
  std::vector<int> heights;  // rhombus counts
  std::vector<bool> zero_sum;
  std::vector<SpinVec> vectors;
  // e_cols[i-1][j]: coefficients of e_i |paths[j]> in the basis.
  std::vector<std::vector<std::vector<QField>>> e_cols;
  // sigma |paths[j]> = sigma_const[j] |paths[sigma_target[j]]>; zero when the
  // image is not a multiple of the rotated state.
  std::vector<int> sigma_target;
  std::vector<QField> sigma_const;

  int index_of(const Path& p) const;
};

// Displayed basis orders at (2,2) and (3,1); lexicographic elsewhere.
std::vector<Path> basis_order(int k, int n);
// Rotation (p_2, ..., p_N, p_1): the path of sigma applied to |p>.
Path rotate_path(const Path& p);

// nk <= 8 and k^{nk} <= max_dim; ModelError if the states are dependent.
StateBasis state_basis(int k, int n, Gauge gauge = Gauge::sigma_orbit, Index max_dim = kDefaultMaxDim);

DenseMat e_matrix(const StateBasis& b, int i);
DenseMat sigma_matrix(const StateBasis& b);
DenseMat mat_mul(const DenseMat& a, const DenseMat& b);
DenseMat mat_scaled(const DenseMat& a, const QField& s);
DenseMat mat_identity(std::size_t n);
std::optional<DenseMat> mat_inverse(const DenseMat& a);

struct PropertyReport {
  bool p1 = true;
  bool support = true;  // P2/P3
  bool p4 = true;
  bool zero_sum = true;
  bool sigma_proportional = true;
  bool orbit_product = true;
  bool independent = true;
  std::vector<std::string> failures;
  bool ok() const { return p1 && support && p4 && zero_sum && sigma_proportional && orbit_product && independent; }
  nlohmann::json to_json() const;
};

// Checks P1 (tau-eigenvalue of e_i where p_i < p_{i+1}), the support rule
// (the swapped path or paths with fewer rhombi), P4, zero-sum, sigma and independence.
PropertyReport verify_state_properties(const StateBasis& b);

struct AppendixCase {
  Path path;
  int i;
  int l;
  int m;
  bool ok;
};
struct AppendixReport {
  std::vector<AppendixCase> cases;
  bool ok() const;
  // Only the m = 1 cases, which carry the unit-coefficient corollary.
  bool ok_unit_label() const;
  nlohmann::json to_json() const;
};
// L_i(m) L_{i+1,i+l}(m) B == L_{i,i+l}(m) B + L_{i+2,i+l}(m) B with
// L_{a,b}(m) = L_a(m) L_{a+1}(m+1) ... L_b(m+b-a), for every state B with
// p_{i+l+1} < p_i < p_{i+1} < ... < p_{i+l} and m + l - 1 <= k - 1.
AppendixReport verify_appendixA(int k, int n, Index max_dim = kDefaultMaxDim);

nlohmann::json state_basis_to_json(const StateBasis& b);

}  // namespace akm
