#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "akm/linalg.hpp"
#include "akm/scalar.hpp"
#include "json.hpp"

namespace akm {

// Basis of (C^k)^{⊗sites}: letters 1..k, first site most significant.
struct SpinSpace {
  int k;
  int sites;
  Index dim() const;
  Index encode(const std::vector<int>& letters) const;
  std::vector<int> decode(Index idx) const;
  // Zero-based letter at a zero-based position.
  int letter(Index idx, int pos) const;
  Index weight(int pos) const;
};

// Local two-site matrices on C^k ⊗ C^k, index a*k + b for |ab>.
SparseMat local_e(int k);
SparseMat local_e_affine(int k);
// I ⊗ diag(q^{-(k-1)}, ..., q^{k-1}).
SparseMat local_twist(int k);

using LinOp = std::function<SpinVec(const SpinVec&)>;

// Placement of generators e_g on a chain of sites. The full periodic chain
// carries e_1..e_N with e_N the twisted generator on (site N, site 1); a
// window carries the generators whose two sites both lie inside it.
class Chain {
 public:
  static Chain full(int k, int n);
  // Consecutive sites start, start+1, ... (cyclic, 1-based) of an N-site chain.
  static Chain window(int k, int N, int start, int length);

  int k() const { return space_.k; }
  int N() const { return N_; }
  const SpinSpace& space() const { return space_; }
  Index dim() const { return space_.dim(); }
  // Normalizes a generator label to 1..N.
  int wrap(int g) const;
  bool has(int g) const;

  SpinVec apply_e(int g, const SpinVec& v) const;
  // e_g - c.
  SpinVec apply_shifted(int g, const QField& c, const SpinVec& v) const;
  LinOp e(int g) const;
  LinOp shifted(int g, const QField& c) const;
  // q-symmetrizer Y_m(e_start, ..., e_{start+m-1}) via Y_{m+1} = Y_m (e - mu_m) Y_m.
  LinOp Y(int m, int start) const;
  // prod_{i<n} Y_{k-1}(e_{ik+1}, ..., e_{(i+1)k-1}); full chain only.
  LinOp Yqsym() const;

  SparseMat materialize(const LinOp& op) const;
  SparseMat generator(int g) const { return materialize(e(g)); }

 private:
  struct Placement {
    int a;
    int b;
    bool affine;
  };
  Chain(int k, int sites, int N) : space_{k, sites}, N_(N) {}
  SpinSpace space_;
  int N_;
  std::map<int, Placement> gens_;
};

LinOp compose(std::vector<LinOp> ops);  // ops[0] applied last
bool is_zero_op(const LinOp& op, Index dim, std::optional<Entry<QField>>* witness = nullptr);
bool equal_ops(const LinOp& a, const LinOp& b, Index dim,
               std::optional<Entry<QField>>* witness = nullptr);

// build_generator: e_i on the full chain with N = nk sites.
SparseMat build_generator(int i, int k, int n);
// Cyclic shift |v1...vN> -> |v2...vN v1>.
SparseMat build_rho(int k, int n);
// sigma = Omega^{-1} rho with the twist on the last site.
SparseMat build_sigma(int k, int n);
SparseMat build_sigma_inverse(int k, int n);
// Basis indices with every letter occurring n times.
std::vector<Index> balanced_sector(int k, int n);

// Signed length of the word reached from 12...k by the given adjacent swaps
// (positions 1..k-1): +1 when the swapped pair was decreasing, -1 otherwise.
int signed_length(int k, const std::vector<int>& swaps, std::vector<int>* word = nullptr);
// Adjacent swaps (bubble order) that take 12...k to the given word.
std::vector<int> bubble_decomposition(const std::vector<int>& word);

// sum over permutations s of (-q)^{l(s)} |s(12...k)> on one block, tensored n times.
SpinVec v0(int k, int n);
QField v0_norm_brute(int k);
// q^{-k(k-1)/2} prod_{i=1}^{k} U_i.
QField v0_norm_form_first(int k);
// (-q)^{-k(k-1)/2} prod_{i=1}^{k-1} U_i.
QField v0_norm_form_second(int k);

struct RelationReport {
  std::string relation;
  int window;
  bool ok;
  std::optional<Entry<QField>> counterexample;
  nlohmann::json to_json() const;
};

enum class RelationSet { hecke, quotient, cylindric };
// Default bound on the full space dimension k^N.
constexpr Index kDefaultMaxDim = 4096;
std::vector<RelationReport> verify_relations(int k, int n, RelationSet which,
                                             Index max_dim = kDefaultMaxDim);

// Lemma on cyclic sequences i_1..i_{2n} over 1..k with i_l != i_{l+1}.
enum class LemmaMethod { brute, bijection };
QField lemma_sum(int k, int n, LemmaMethod method);
// Exponent sum_l 2(i_{2l}-i_{2l-1}) - sign(i_{2l}-i_{2l-1}) - sign(i_{2l}-i_{2l+1}).
int lemma_exponent_sequence(const std::vector<int>& i);
// Exponent sum_l 2(u_{2l}-u_{2l-1}).
int lemma_exponent_image(const std::vector<int>& u);
bool lemma_is_extra(const std::vector<int>& i);
// The map to U, extended from lexicographically minimal rotations.
std::vector<int> lemma_eta(const std::vector<int>& i);
std::vector<int> lemma_eta_inverse(const std::vector<int>& u);
QField lemma_closed_form_printed(int k, int n);  // (U'_{k-1})^{2n} + (k-1)
QField lemma_closed_form_image(int k, int n);    // (U'_{k-2})^{2n} + (k-1)

}  // namespace akm
