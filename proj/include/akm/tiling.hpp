#pragma once

#include <map>
#include <string>
#include <vector>

#include "akm/linalg.hpp"
#include "json.hpp"

namespace akm {

// Letters 1..k, each occurring n times.
using Path = std::vector<int>;

bool is_unrestricted_path(const Path& p, int k, int n);
// Every prefix holds at least as many j as j+1.
bool is_restricted_path(const Path& p, int k);
// Sorted lexicographically; nk <= 12.
std::vector<Path> enumerate_paths(int k, int n, bool restricted);
// 12..k repeated n times.
Path pi_omega(int k, int n);
// k..k (n times), k-1..k-1, ..., 1..1.
Path pi_highest(int k, int n);
std::string path_string(const Path& p);
Path parse_path(const std::string& s, int k, int n);

// Vertex of the unrolled cylinder: position in Z^k after a number of edges.
using Point = std::vector<int>;

struct Rhombus {
  int site;   // acts on edges site, site+1 (cyclic, 1-based)
  int label;  // 1..k-1
  int order;  // pile index
  Point left, bottom, right, top;
};

struct Tiling {
  int k = 0;
  int n = 0;
  Path base;
  Path top;
  std::vector<Rhombus> rhombi;           // in pile order
  std::vector<std::vector<int>> blocks;  // rhombus indices, in removal order
  // Signed corner sums keyed by (vertex index mod N, normalized position).
  std::map<std::vector<int>, int> vertex_sums;
  bool zero_sum = true;
  int candidates = 0;  // distinct minimal tilings considered
};

// Labels a pile sequence by block peeling; the sites must be legal piles from pi_omega.
Tiling label_pile_sequence(int k, int n, const std::vector<int>& sites);
Tiling build_tiling(const Path& pi, int k, int n);
// Tilings of every unrestricted path, sharing one path graph.
std::map<Path, Tiling> build_all_tilings(int k, int n);
// Replays the rhombi from the base path and returns the top path reached.
Path replay_tiling(const Tiling& t);
// (label multiplicities mu_k, ..., mu_1), the quantity maximized among tilings.
std::vector<int> label_profile(const Tiling& t);

struct WordFactor {
  int site;
  int label;
  auto operator<=>(const WordFactor&) const = default;
};
// L_{site}(label) factors, leftmost first, acting on Y_qsym.
using Word = std::vector<WordFactor>;

Word tiling_to_word(const Tiling& t);
// Applies the factors right to left to v0; throws ModelError on a vanishing word.
SpinVec word_to_spin(const Word& w, int k, int n);
std::string word_string(const Word& w);

nlohmann::json tiling_to_json(const Tiling& t);
std::string emit_tiling_svg(const Tiling& t);

}  // namespace akm
