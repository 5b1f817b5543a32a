#include "akm/states.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "akm/errors.hpp"

namespace akm {

int StateBasis::index_of(const Path& p) const {
  auto it = std::find(paths.begin(), paths.end(), p);
  if (it == paths.end()) throw ArgumentError("path not in basis: " + path_string(p));
  return static_cast<int>(it - paths.begin());
}

std::vector<Path> basis_order(int k, int n) {
  if (k == 3 && n == 1) return {{3, 2, 1}, {3, 1, 2}, {2, 3, 1}, {1, 3, 2}, {2, 1, 3}, {1, 2, 3}};
  if (k == 2 && n == 2)
    return {{1, 2, 1, 2}, {1, 1, 2, 2}, {2, 1, 2, 1}, {1, 2, 2, 1}, {2, 1, 1, 2}, {2, 2, 1, 1}};
  return enumerate_paths(k, n, false);
}

Path rotate_path(const Path& p) {
  Path r(p.begin() + 1, p.end());
  r.push_back(p.front());
  return r;
}

namespace {

SpinVec apply_sigma(const SpinSpace& sp, const SpinVec& v) {
  SpinVec out;
  Index top = sp.weight(0);
  for (const auto& [idx, x] : v) {
    int a = sp.letter(idx, 0);
    Index rest = idx - static_cast<Index>(a) * top;
    out.emplace(rest * sp.k + a, x * QField::qpow(sp.k - 1 - 2 * a));
  }
  return out;
}

void check_state_size(int k, int n, Index max_dim) {
  if (k < 2 || n < 1) throw ArgumentError("need k >= 2 and n >= 1");
  if (n * k > 8) throw ResourceError("state basis limited to nk <= 8");
  if (SpinSpace{k, n * k}.dim() > max_dim) throw ResourceError("spin space exceeds the dimension bound");
}

bool is_tau_column(const std::vector<QField>& col, int j) {
  for (std::size_t r = 0; r < col.size(); ++r) {
    if (static_cast<int>(r) == j) {
      if (!(col[r] == tau())) return false;
    } else if (!col[r].is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace

StateBasis state_basis(int k, int n, Gauge gauge, Index max_dim) {
  check_state_size(k, n, max_dim);
  int N = n * k;
  StateBasis b;
  b.k = k;
  b.n = n;
  b.gauge = gauge;
  b.paths = basis_order(k, n);
  std::map<Path, Tiling> tilings = build_all_tilings(k, n);
  std::size_t S = b.paths.size();
  for (const auto& p : b.paths) {
    const Tiling& t = tilings.at(p);
    b.words.push_back(tiling_to_word(t));
    b.heights.push_back(static_cast<int>(t.rhombi.size()));
    b.zero_sum.push_back(t.zero_sum);
  }
  SpinSpace sp{k, N};
  b.vectors.resize(S);
  if (gauge == Gauge::word) {
    for (std::size_t j = 0; j < S; ++j) b.vectors[j] = word_to_spin(b.words[j], k, n);
  } else {
    std::vector<bool> done(S, false);
    std::vector<std::size_t> by_height(S);
    for (std::size_t j = 0; j < S; ++j) by_height[j] = j;
    std::sort(by_height.begin(), by_height.end(), [&](std::size_t x, std::size_t y) {
      return std::pair(b.heights[x], b.paths[x]) < std::pair(b.heights[y], b.paths[y]);
    });
    for (std::size_t rep : by_height) {
      if (done[rep]) continue;
      SpinVec v = word_to_spin(b.words[rep], k, n);
      Path p = b.paths[rep];
      std::size_t j = rep;
      while (!done[j]) {
        b.vectors[j] = v;
        done[j] = true;
        v = apply_sigma(sp, v);
        p = rotate_path(p);
        j = b.index_of(p);
      }
    }
  }

  Echelon<QField> ech;
  for (std::size_t j = 0; j < S; ++j)
    if (!ech.add(b.vectors[j])) throw ModelError("state vectors are linearly dependent at " + path_string(b.paths[j]));

  Chain c = Chain::full(k, n);
  b.e_cols.assign(N, {});
  for (int i = 1; i <= N; ++i) {
    for (std::size_t j = 0; j < S; ++j) {
      SpinVec w = c.apply_e(i, b.vectors[j]);
      std::optional<std::vector<QField>> col;
      if (auto r = ratio(w, b.vectors[j])) {
        col = std::vector<QField>(S);
        (*col)[j] = *r;
      } else {
        col = ech.solve(w);
      }
      if (!col) throw ModelError("e_" + std::to_string(i) + " leaves the span of the states");
      b.e_cols[i - 1].push_back(std::move(*col));
    }
  }
  for (std::size_t j = 0; j < S; ++j) {
    int t = b.index_of(rotate_path(b.paths[j]));
    auto r = ratio(apply_sigma(sp, b.vectors[j]), b.vectors[t]);
    b.sigma_target.push_back(t);
    b.sigma_const.push_back(r ? *r : QField());
  }
  return b;
}

DenseMat e_matrix(const StateBasis& b, int i) {
  int N = b.n * b.k;
  if (i < 1 || i > N) throw ArgumentError("generator index out of range");
  std::size_t S = b.paths.size();
  DenseMat m(S, std::vector<QField>(S));
  for (std::size_t j = 0; j < S; ++j)
    for (std::size_t r = 0; r < S; ++r) m[r][j] = b.e_cols[i - 1][j][r];
  return m;
}

DenseMat sigma_matrix(const StateBasis& b) {
  std::size_t S = b.paths.size();
  DenseMat m(S, std::vector<QField>(S));
  for (std::size_t j = 0; j < S; ++j) m[b.sigma_target[j]][j] = b.sigma_const[j];
  return m;
}

DenseMat mat_mul(const DenseMat& a, const DenseMat& b) {
  std::size_t n = a.size(), p = b.empty() ? 0 : b[0].size();
  DenseMat c(n, std::vector<QField>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

DenseMat mat_scaled(const DenseMat& a, const QField& s) {
  DenseMat c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

DenseMat mat_identity(std::size_t n) {
  DenseMat m(n, std::vector<QField>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = QField(1);
  return m;
}

std::optional<DenseMat> mat_inverse(const DenseMat& a) {
  std::size_t n = a.size();
  DenseMat m = a, inv = mat_identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    QField s = m[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      QField f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

nlohmann::json PropertyReport::to_json() const {
  return {{"P1", p1},
          {"support", support},
          {"P4", p4},
          {"zero_sum", zero_sum},
          {"sigma_proportional", sigma_proportional},
          {"orbit_product", orbit_product},
          {"independent", independent},
          {"failures", failures}};
}

PropertyReport verify_state_properties(const StateBasis& b) {
  PropertyReport rep;
  int N = b.n * b.k;
  std::size_t S = b.paths.size();
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.failures.size() < 20) rep.failures.push_back(msg);
  };
  auto at = [&](const Path& p, int i) { return p[(i - 1 + N) % N]; };
  Chain c = Chain::full(b.k, b.n);
  // eigen[j][i-1]: e_i |p_j> = tau |p_j>
  std::vector<std::vector<bool>> eigen(S, std::vector<bool>(N));
  for (std::size_t j = 0; j < S; ++j)
    for (int i = 1; i <= N; ++i) eigen[j][i - 1] = is_tau_column(b.e_cols[i - 1][j], static_cast<int>(j));

  for (std::size_t j = 0; j < S; ++j) {
    const Path& p = b.paths[j];
    std::string ps = path_string(p);
    if (!b.zero_sum[j]) fail(rep.zero_sum, "zero-sum rule fails for " + ps);
    for (int i = 1; i <= N; ++i) {
      int a = at(p, i), bb = at(p, i + 1);
      if (a < bb) {
        SpinVec w = c.apply_e(i, b.vectors[j]);
        if (!(w == scaled(b.vectors[j], tau())))
          fail(rep.p1, "P1 fails for " + ps + " at e_" + std::to_string(i));
        continue;
      }
      Path swapped = p;
      std::swap(swapped[i - 1], swapped[i % N]);
      const auto& col = b.e_cols[i - 1][j];
      std::vector<std::size_t> support;
      for (std::size_t r = 0; r < S; ++r)
        if (!col[r].is_zero()) support.push_back(r);
      for (std::size_t r : support)
        if (b.paths[r] != swapped && b.heights[r] >= b.heights[j])
          fail(rep.support, "e_" + std::to_string(i) + " on " + ps + " reaches " + path_string(b.paths[r]));
      for (int jj = 1; jj <= N; ++jj) {
        int d = ((jj - i) % N + N) % N;
        if (d == 0 || d == 1 || d == N - 1 || !eigen[j][jj - 1]) continue;
        for (std::size_t r : support)
          if (!eigen[r][jj - 1])
            fail(rep.p4, "P4 fails for " + ps + " with e_" + std::to_string(i) + ", e_" + std::to_string(jj));
      }
    }
    if (b.sigma_const[j].is_zero())
      fail(rep.sigma_proportional, "sigma image of " + ps + " is not a multiple of its rotation");
    QField prod(1);
    std::size_t t = j;
    for (int s = 0; s < N; ++s) {
      prod *= b.sigma_const[t];
      t = b.sigma_target[t];
    }
    if (t != j || !prod.is_one()) fail(rep.orbit_product, "sigma orbit product is not 1 at " + ps);
  }
  if (rank(b.vectors) != static_cast<int>(S)) fail(rep.independent, "state vectors are dependent");
  return rep;
}

bool AppendixReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const AppendixCase& c) { return c.ok; });
}

bool AppendixReport::ok_unit_label() const {
  return std::all_of(cases.begin(), cases.end(), [](const AppendixCase& c) { return c.m != 1 || c.ok; });
}

nlohmann::json AppendixReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases)
    arr.push_back({{"path", path_string(c.path)}, {"i", c.i}, {"l", c.l}, {"m", c.m}, {"ok", c.ok}});
  return {{"ok", ok()}, {"ok_unit_label", ok_unit_label()}, {"cases", arr}};
}

AppendixReport verify_appendixA(int k, int n, Index max_dim) {
  StateBasis b = state_basis(k, n, Gauge::word, max_dim);
  int N = n * k;
  Chain c = Chain::full(k, n);
  auto wrap = [N](int g) { return ((g - 1) % N + N) % N + 1; };
  auto chain_L = [&](int from, int to, int m, SpinVec v) {
    for (int g = to; g >= from; --g) v = c.apply_shifted(wrap(g), mu(m + (g - from) - 1), v);
    return v;
  };
  AppendixReport rep;
  for (std::size_t j = 0; j < b.paths.size(); ++j) {
    const Path& p = b.paths[j];
    auto at = [&](int i) { return p[(i - 1) % N]; };
    for (int i = 1; i <= N; ++i)
      for (int l = 1; l + 2 <= N; ++l) {
        bool convex = at(i + l + 1) < at(i);
        for (int s = 0; s < l && convex; ++s) convex = at(i + s) < at(i + s + 1);
        if (!convex) continue;
        for (int m = 1; m + l - 1 <= k - 1; ++m) {
          const SpinVec& B = b.vectors[j];
          SpinVec lhs = c.apply_shifted(wrap(i), mu(m - 1), chain_L(i + 1, i + l, m, B));
          SpinVec rhs = chain_L(i, i + l, m, B) + chain_L(i + 2, i + l, m, B);
          rep.cases.push_back({p, i, l, m, lhs == rhs});
        }
      }
  }
  return rep;
}

nlohmann::json state_basis_to_json(const StateBasis& b) {
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t j = 0; j < b.paths.size(); ++j) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& f : b.words[j]) word.push_back({f.site, f.label});
    states.push_back({{"path", path_string(b.paths[j])}, {"word", word}, {"rhombi", b.heights[j]}});
  }
  nlohmann::json structure = nlohmann::json::array();
  for (std::size_t i = 0; i < b.e_cols.size(); ++i)
    for (std::size_t j = 0; j < b.paths.size(); ++j) {
      nlohmann::json terms = nlohmann::json::array();
      for (std::size_t r = 0; r < b.paths.size(); ++r)
        if (!b.e_cols[i][j][r].is_zero())
          terms.push_back({{"path", path_string(b.paths[r])}, {"coeff", b.e_cols[i][j][r].to_json()}});
      structure.push_back({{"i", i + 1}, {"path", path_string(b.paths[j])}, {"terms", terms}});
    }
  nlohmann::json sigma = nlohmann::json::array();
  for (std::size_t j = 0; j < b.paths.size(); ++j)
    sigma.push_back({{"path", path_string(b.paths[j])},
                     {"target", path_string(b.paths[b.sigma_target[j]])},
                     {"coeff", b.sigma_const[j].to_json()}});
  return {{"k", b.k},
          {"n", b.n},
          {"gauge", b.gauge == Gauge::word ? "word" : "sigma_orbit"},
          {"states", states},
          {"structure", structure},
          {"sigma", sigma}};
}

}  // namespace akm
