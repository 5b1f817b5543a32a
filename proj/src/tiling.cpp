#include "akm/tiling.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "akm/errors.hpp"
#include "akm/spin.hpp"

namespace akm {

bool is_unrestricted_path(const Path& p, int k, int n) {
  if (k < 1 || n < 1 || p.size() != static_cast<std::size_t>(n * k)) return false;
  std::vector<int> count(k + 1, 0);
  for (int x : p) {
    if (x < 1 || x > k) return false;
    ++count[x];
  }
  return std::all_of(count.begin() + 1, count.end(), [n](int c) { return c == n; });
}

bool is_restricted_path(const Path& p, int k) {
  std::vector<int> count(k + 2, 0);
  for (int x : p) {
    if (x < 1 || x > k) return false;
    ++count[x];
    if (x > 1 && count[x] > count[x - 1]) return false;
  }
  return true;
}

std::vector<Path> enumerate_paths(int k, int n, bool restricted) {
  if (k < 1 || n < 1) throw ArgumentError("k and n must be positive");
  if (n * k > 12) throw ResourceError("path enumeration limited to nk <= 12");
  Path p = pi_omega(k, n);
  std::sort(p.begin(), p.end());
  std::vector<Path> out;
  do {
    if (!restricted || is_restricted_path(p, k)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Path pi_omega(int k, int n) {
  if (k < 1 || n < 1) throw ArgumentError("k and n must be positive");
  Path p;
  for (int b = 0; b < n; ++b)
    for (int j = 1; j <= k; ++j) p.push_back(j);
  return p;
}

Path pi_highest(int k, int n) {
  if (k < 1 || n < 1) throw ArgumentError("k and n must be positive");
  Path p;
  for (int j = k; j >= 1; --j)
    for (int b = 0; b < n; ++b) p.push_back(j);
  return p;
}

std::string path_string(const Path& p) {
  std::string s;
  for (int x : p) {
    if (!s.empty() && x >= 10) s += ',';
    s += std::to_string(x);
  }
  return s;
}

Path parse_path(const std::string& s, int k, int n) {
  Path p;
  if (s.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t e = s.find(',', pos);
      if (e == std::string::npos) e = s.size();
      try {
        p.push_back(std::stoi(s.substr(pos, e - pos)));
      } catch (const std::exception&) {
        throw ArgumentError("malformed path: " + s);
      }
      pos = e + 1;
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw ArgumentError("malformed path: " + s);
      p.push_back(c - '0');
    }
  }
  if (!is_unrestricted_path(p, k, n)) throw ArgumentError("not an unrestricted path: " + s);
  return p;
}

namespace {

Point unit(int k, int t) {
  Point v(k, 0);
  v[t - 1] = 1;
  return v;
}

Point add(Point a, const Point& b, int s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Path on the cylinder with unrolled vertex positions and strand identities.
struct PileState {
  int k, n, N;
  Path path;
  std::vector<int> strand;
  std::vector<Point> p;  // p[j]: vertex j, between edges j and j+1

  PileState(int k_, int n_) : k(k_), n(n_), N(k_ * n_), path(pi_omega(k_, n_)), strand(N) {
    Point cur(k, 0);
    for (int j = 0; j < N; ++j) {
      strand[j] = j;
      p.push_back(cur);
      cur = add(cur, unit(k, path[j]));
    }
  }
  Point vert(int j) const {
    int q = floor_div(j, N), r = j - q * N;
    Point v = p[r];
    for (int& x : v) x += q * n;
    return v;
  }
  bool can_pile(int i) const { return path[i - 1] > path[i % N]; }
  Rhombus pile(int i) {
    int a = i - 1, b = i % N;
    Rhombus r;
    r.site = i;
    r.label = 0;
    r.left = vert(i - 1);
    r.bottom = vert(i);
    r.right = vert(i + 1);
    std::swap(path[a], path[b]);
    std::swap(strand[a], strand[b]);
    r.top = add(r.left, unit(k, path[a]));
    int q = floor_div(i, N);
    Point stored = r.top;
    for (int& x : stored) x -= q * n;
    p[i - q * N] = stored;
    return r;
  }
  std::vector<int> key(int j, const Point& pos) const {
    int q = floor_div(j, N);
    std::vector<int> v{j - q * N};
    for (int x : pos) v.push_back(x - q * n);
    return v;
  }
};

struct PileRecord {
  Rhombus r;
  int sa, sb;  // strands on edges site, site+1 after piling
};

// Maximal cyclic increasing run of the path containing edges s and s+1.
std::vector<int> increasing_run(const Path& path, int s) {
  int N = static_cast<int>(path.size());
  std::vector<int> sites{s, s % N + 1};
  auto contains = [&](int x) { return std::find(sites.begin(), sites.end(), x) != sites.end(); };
  while (static_cast<int>(sites.size()) < N) {
    int l = sites.front(), pl = (l - 2 + N) % N + 1;
    if (path[pl - 1] < path[l - 1] && !contains(pl))
      sites.insert(sites.begin(), pl);
    else
      break;
  }
  while (static_cast<int>(sites.size()) < N) {
    int r = sites.back(), nr = r % N + 1;
    if (path[r - 1] < path[nr - 1] && !contains(nr))
      sites.push_back(nr);
    else
      break;
  }
  return sites;
}

}  // namespace

Tiling label_pile_sequence(int k, int n, const std::vector<int>& seq) {
  int N = k * n;
  PileState st(k, n);
  std::vector<PileRecord> rh;
  for (int i : seq) {
    if (i < 1 || i > N || !st.can_pile(i)) throw ArgumentError("illegal pile at site " + std::to_string(i));
    Rhombus r = st.pile(i);
    rh.push_back({r, st.strand[i - 1], st.strand[i % N]});
  }
  PileState base(k, n);
  std::set<std::vector<int>> top_vertices, base_vertices;
  for (int j = 0; j < N; ++j) {
    top_vertices.insert(st.key(j, st.vert(j)));
    base_vertices.insert(base.key(j, base.vert(j)));
  }
  auto interior = [&](const std::vector<int>& v) { return !top_vertices.count(v) && !base_vertices.count(v); };

  Tiling t;
  t.k = k;
  t.n = n;
  t.base = pi_omega(k, n);
  t.top = st.path;
  std::vector<int> labels(rh.size(), 0);
  std::vector<int> remaining(rh.size());
  for (std::size_t j = 0; j < rh.size(); ++j) remaining[j] = static_cast<int>(j);
  auto& contrib = t.vertex_sums;

  while (!remaining.empty()) {
    PileState cur(k, n);
    for (int idx : remaining) cur.pile(rh[idx].r.site);
    int s = rh[remaining.back()].r.site;
    std::vector<int> sites = increasing_run(cur.path, s);
    std::set<int> strands;
    for (int x : sites) strands.insert(cur.strand[x - 1]);
    std::set<int> span(sites.begin(), sites.end() - 1);
    // Integers at the run's vertices: 1 on convex vertices, otherwise fixed by the zero-sum rule.
    std::map<int, int> height;
    int hv = 0;
    height[cur.strand[sites[0] - 1]] = 0;
    for (std::size_t j = 0; j + 1 < sites.size(); ++j) {
      auto v = cur.key(sites[j], cur.vert(sites[j]));
      int c = 1;
      if (interior(v)) {
        auto it = contrib.find(v);
        c = -(it == contrib.end() ? 0 : it->second);
      }
      hv += c;
      height[cur.strand[sites[j + 1] - 1]] = hv;
    }
    std::vector<int> block;
    for (;;) {
      int found = -1;
      for (int pos = static_cast<int>(remaining.size()) - 1; pos >= 0; --pos) {
        const PileRecord& r = rh[remaining[pos]];
        if (!span.count(r.r.site) || !strands.count(r.sa) || !strands.count(r.sb)) continue;
        bool exposed = true;
        for (std::size_t q = pos + 1; q < remaining.size(); ++q) {
          int d = ((rh[remaining[q]].r.site - r.r.site) % N + N) % N;
          if (d == 0 || d == 1 || d == N - 1) {
            exposed = false;
            break;
          }
        }
        if (exposed) {
          found = pos;
          break;
        }
      }
      if (found < 0) break;
      int idx = remaining[found];
      remaining.erase(remaining.begin() + found);
      const PileRecord& r = rh[idx];
      labels[idx] = std::abs(height[r.sa] - height[r.sb]);
      block.push_back(idx);
    }
    if (block.empty()) throw ModelError("block peeling removed no rhombus");
    for (int idx : block) {
      const Rhombus& r = rh[idx].r;
      int m = labels[idx];
      contrib[st.key(r.site, r.top)] += m;
      contrib[st.key(r.site, r.bottom)] += m;
      contrib[st.key(r.site - 1, r.left)] -= m;
      contrib[st.key(r.site + 1, r.right)] -= m;
    }
    t.blocks.push_back(block);
  }
  for (std::size_t j = 0; j < rh.size(); ++j) {
    Rhombus r = rh[j].r;
    r.label = labels[j];
    r.order = static_cast<int>(j);
    t.rhombi.push_back(r);
  }
  for (const auto& [v, x] : contrib)
    if (interior(v) && x != 0) t.zero_sum = false;
  return t;
}

namespace {

// Forward distances (rhombus counts) from pi_omega over all unrestricted paths.
struct PathGraph {
  int k, n, N;
  std::map<Path, int> dist;

  PathGraph(int k_, int n_) : k(k_), n(n_), N(k_ * n_) {
    Path start = pi_omega(k, n);
    dist[start] = 0;
    std::deque<Path> dq{start};
    while (!dq.empty()) {
      Path u = dq.front();
      dq.pop_front();
      for (int i = 1; i <= N; ++i) {
        if (u[i - 1] <= u[i % N]) continue;
        Path v = u;
        std::swap(v[i - 1], v[i % N]);
        if (!dist.count(v)) {
          dist[v] = dist[u] + 1;
          dq.push_back(v);
        }
      }
    }
  }

  // Paths lying on some shortest pile route to target.
  std::set<Path> on_routes(const Path& target) const {
    std::set<Path> good{target};
    std::deque<Path> dq{target};
    while (!dq.empty()) {
      Path v = dq.front();
      dq.pop_front();
      int dv = dist.at(v);
      for (int i = 1; i <= N; ++i) {
        if (v[i - 1] >= v[i % N]) continue;
        Path u = v;
        std::swap(u[i - 1], u[i % N]);
        auto it = dist.find(u);
        if (it != dist.end() && it->second == dv - 1 && good.insert(u).second) dq.push_back(u);
      }
    }
    return good;
  }

  Tiling best(const Path& target) const {
    auto it = dist.find(target);
    if (it == dist.end()) throw ModelError("path not reachable from the lowest path");
    std::set<Path> good = on_routes(target);
    // Depth-first in increasing site order, so each tiling is first met via
    // its lexicographically smallest pile sequence.
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<std::vector<int>> sequences;
    std::vector<int> seq;
    std::vector<std::vector<int>> keys;
    PileState st(k, n);
    std::function<void()> dfs = [&]() {
      if (st.path == target) {
        sequences.push_back(seq);
        return;
      }
      int du = dist.at(st.path);
      for (int i = 1; i <= N; ++i) {
        if (!st.can_pile(i)) continue;
        Path v = st.path;
        std::swap(v[i - 1], v[i % N]);
        if (!good.count(v) || dist.at(v) != du + 1) continue;
        PileState saved = st;
        Rhombus r = st.pile(i);
        auto key = st.key(i, r.top);
        key.insert(key.begin(), i);
        auto next = keys;
        next.insert(std::lower_bound(next.begin(), next.end(), key), key);
        if (seen.insert(next).second) {
          std::swap(keys, next);
          seq.push_back(i);
          dfs();
          seq.pop_back();
          std::swap(keys, next);
        }
        st = saved;
      }
    };
    dfs();
    if (sequences.empty()) throw ModelError("no tiling found for " + path_string(target));
    Tiling best_t;
    std::vector<int> best_profile;
    Word best_word;
    bool have = false;
    for (const auto& s : sequences) {
      Tiling t = label_pile_sequence(k, n, s);
      std::vector<int> prof = label_profile(t);
      Word w = tiling_to_word(t);
      if (!have || prof > best_profile || (prof == best_profile && w < best_word)) {
        best_t = std::move(t);
        best_profile = prof;
        best_word = w;
        have = true;
      }
    }
    best_t.candidates = static_cast<int>(sequences.size());
    return best_t;
  }
};

void check_tiling_size(int k, int n) {
  if (k < 2 || n < 1) throw ArgumentError("need k >= 2 and n >= 1");
  if (n * k > 8) throw ResourceError("tilings limited to nk <= 8");
}

}  // namespace

Tiling build_tiling(const Path& pi, int k, int n) {
  check_tiling_size(k, n);
  if (!is_unrestricted_path(pi, k, n)) throw ArgumentError("not an unrestricted path");
  return PathGraph(k, n).best(pi);
}

std::map<Path, Tiling> build_all_tilings(int k, int n) {
  check_tiling_size(k, n);
  PathGraph g(k, n);
  std::map<Path, Tiling> out;
  for (const auto& p : enumerate_paths(k, n, false)) out.emplace(p, g.best(p));
  return out;
}

Path replay_tiling(const Tiling& t) {
  PileState st(t.k, t.n);
  for (const auto& r : t.rhombi) {
    if (!st.can_pile(r.site)) throw ModelError("illegal pile in tiling");
    st.pile(r.site);
  }
  return st.path;
}

std::vector<int> label_profile(const Tiling& t) {
  std::vector<int> mu(t.k + 1, 0);
  for (const auto& r : t.rhombi)
    if (r.label >= 0 && r.label <= t.k) ++mu[r.label];
  std::vector<int> prof;
  for (int j = t.k; j >= 1; --j) prof.push_back(mu[j]);
  return prof;
}

Word tiling_to_word(const Tiling& t) {
  Word w;
  for (auto it = t.rhombi.rbegin(); it != t.rhombi.rend(); ++it) w.push_back({it->site, it->label});
  return w;
}

SpinVec word_to_spin(const Word& w, int k, int n) {
  if (n * k > 8) throw ResourceError("spin vectors limited to nk <= 8");
  Chain c = Chain::full(k, n);
  SpinVec v = v0(k, n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->label < 1 || it->label > k - 1) throw ArgumentError("rhombus label out of range");
    v = c.apply_shifted(it->site, mu(it->label - 1), v);
  }
  if (v.empty()) throw ModelError("word " + word_string(w) + " vanishes");
  return v;
}

std::string word_string(const Word& w) {
  std::string s;
  for (const auto& f : w) s += "L" + std::to_string(f.site) + "(" + std::to_string(f.label) + ")";
  return s + "Y";
}

nlohmann::json tiling_to_json(const Tiling& t) {
  nlohmann::json rh = nlohmann::json::array();
  for (const auto& r : t.rhombi) rh.push_back({{"site", r.site}, {"label", r.label}, {"order", r.order}});
  nlohmann::json word = nlohmann::json::array();
  for (const auto& f : tiling_to_word(t)) word.push_back({f.site, f.label});
  return {{"k", t.k},
          {"n", t.n},
          {"base", path_string(t.base)},
          {"top", path_string(t.top)},
          {"rhombi", rh},
          {"blocks", t.blocks},
          {"word", word},
          {"zero_sum", t.zero_sum},
          {"candidates", t.candidates}};
}

}  // namespace akm
