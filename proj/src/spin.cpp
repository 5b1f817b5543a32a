#include "akm/spin.hpp"

#include <algorithm>
#include <numeric>

#include "akm/errors.hpp"

namespace akm {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

void add_to(SpinVec& v, Index i, const QField& x) {
  if (x.is_zero()) return;
  auto it = v.find(i);
  if (it == v.end()) {
    v.emplace(i, x);
  } else {
    it->second += x;
    if (it->second.is_zero()) v.erase(it);
  }
}

void check_kn(int k, int n) {
  if (k < 2) throw ArgumentError("k must be at least 2");
  if (n < 1) throw ArgumentError("n must be at least 1");
  if (static_cast<long>(k) * n > 16) throw ResourceError("N = nk exceeds 16");
}

}  // namespace

Index SpinSpace::dim() const {
  Index d = 1;
  for (int s = 0; s < sites; ++s) {
    if (d > (Index(1) << 56) / static_cast<Index>(k)) throw ResourceError("spin space too large");
    d *= k;
  }
  return d;
}

Index SpinSpace::weight(int pos) const {
  Index w = 1;
  for (int s = pos + 1; s < sites; ++s) w *= k;
  return w;
}

Index SpinSpace::encode(const std::vector<int>& letters) const {
  if (static_cast<int>(letters.size()) != sites) throw ArgumentError("wrong number of letters");
  Index r = 0;
  for (int x : letters) {
    if (x < 1 || x > k) throw ArgumentError("letter out of range");
    r = r * k + (x - 1);
  }
  return r;
}

std::vector<int> SpinSpace::decode(Index idx) const {
  std::vector<int> v(sites);
  for (int s = sites - 1; s >= 0; --s) {
    v[s] = static_cast<int>(idx % k) + 1;
    idx /= k;
  }
  return v;
}

int SpinSpace::letter(Index idx, int pos) const {
  return static_cast<int>((idx / weight(pos)) % k);
}

SparseMat local_e(int k) {
  SparseMat m(static_cast<Index>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      Index col = a * k + b;
      m.set(b * k + a, col, QField(1));
      m.set(col, col, -QField::qpow(sgn(b - a)));
    }
  return m;
}

SparseMat local_e_affine(int k) {
  SparseMat m(static_cast<Index>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (x == y) continue;
      Index col = x * k + y;
      m.set(y * k + x, col, QField::qpow(2 * (x - y)));
      m.set(col, col, -QField::qpow(sgn(y - x)));
    }
  return m;
}

SparseMat local_twist(int k) {
  SparseMat m(static_cast<Index>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m.set(a * k + b, a * k + b, QField::qpow(-(k - 1) + 2 * b));
  return m;
}

Chain Chain::full(int k, int n) {
  check_kn(k, n);
  int N = n * k;
  Chain c(k, N, N);
  for (int g = 1; g < N; ++g) c.gens_[g] = {g - 1, g, false};
  c.gens_[N] = {N - 1, 0, true};
  return c;
}

Chain Chain::window(int k, int N, int start, int length) {
  if (k < 2 || N < 2) throw ArgumentError("invalid chain");
  if (length < 2 || length > N) throw ArgumentError("window length out of range");
  Chain c(k, length, N);
  for (int p = 0; p + 1 < length; ++p) {
    int g = c.wrap(start + p);
    c.gens_[g] = {p, p + 1, g == N};
  }
  return c;
}

int Chain::wrap(int g) const { return ((g - 1) % N_ + N_) % N_ + 1; }

bool Chain::has(int g) const { return gens_.count(wrap(g)) > 0; }

SpinVec Chain::apply_e(int g, const SpinVec& v) const {
  auto it = gens_.find(wrap(g));
  if (it == gens_.end()) throw ArgumentError("generator e_" + std::to_string(g) + " not in chain");
  const Placement& p = it->second;
  Index wa = space_.weight(p.a), wb = space_.weight(p.b);
  int k = space_.k;
  SpinVec out;
  for (const auto& [idx, x] : v) {
    int la = static_cast<int>((idx / wa) % k), lb = static_cast<int>((idx / wb) % k);
    if (la == lb) continue;
    Index sw = idx + wa * lb - wa * la + wb * la - wb * lb;
    QField cross = p.affine ? x * QField::qpow(2 * (la - lb)) : x;
    add_to(out, sw, cross);
    add_to(out, idx, -(x * QField::qpow(sgn(lb - la))));
  }
  return out;
}

SpinVec Chain::apply_shifted(int g, const QField& c, const SpinVec& v) const {
  SpinVec r = apply_e(g, v);
  axpy(r, -c, v);
  return r;
}

LinOp Chain::e(int g) const {
  return [this, g](const SpinVec& v) { return apply_e(g, v); };
}

LinOp Chain::shifted(int g, const QField& c) const {
  return [this, g, c](const SpinVec& v) { return apply_shifted(g, c, v); };
}

LinOp Chain::Y(int m, int start) const {
  if (m < 1) throw ArgumentError("Y_m needs m >= 1");
  for (int j = 0; j < m; ++j)
    if (!has(start + j)) throw ArgumentError("q-symmetrizer window out of range");
  if (m == 1) return e(start);
  LinOp inner = Y(m - 1, start);
  LinOp mid = shifted(start + m - 1, mu(m - 1));
  return compose({inner, mid, inner});
}

LinOp Chain::Yqsym() const {
  int k = space_.k;
  if (space_.sites != N_) throw ArgumentError("Yqsym needs the full chain");
  std::vector<LinOp> ops;
  for (int i = 0; i < N_ / k; ++i) ops.push_back(Y(k - 1, i * k + 1));
  return compose(ops);
}

SparseMat Chain::materialize(const LinOp& op) const {
  SparseMat m(dim());
  for (Index c = 0; c < dim(); ++c) m.set_col(c, op(SpinVec{{c, QField(1)}}));
  return m;
}

LinOp compose(std::vector<LinOp> ops) {
  return [ops = std::move(ops)](const SpinVec& v) {
    SpinVec r = v;
    for (auto it = ops.rbegin(); it != ops.rend() && !r.empty(); ++it) r = (*it)(r);
    return r;
  };
}

bool is_zero_op(const LinOp& op, Index dim, std::optional<Entry<QField>>* witness) {
  for (Index c = 0; c < dim; ++c) {
    SpinVec r = op(SpinVec{{c, QField(1)}});
    if (!r.empty()) {
      if (witness) *witness = Entry<QField>{r.begin()->first, c, r.begin()->second};
      return false;
    }
  }
  return true;
}

bool equal_ops(const LinOp& a, const LinOp& b, Index dim, std::optional<Entry<QField>>* witness) {
  return is_zero_op([&](const SpinVec& v) { return a(v) - b(v); }, dim, witness);
}

SparseMat build_generator(int i, int k, int n) {
  Chain c = Chain::full(k, n);
  if (i < 1 || i > c.N()) throw ArgumentError("generator index out of range");
  return c.generator(i);
}

SparseMat build_rho(int k, int n) {
  check_kn(k, n);
  SpinSpace sp{k, n * k};
  SparseMat m(sp.dim());
  Index top = sp.weight(0);
  for (Index c = 0; c < sp.dim(); ++c) {
    Index first = c / top;
    m.set((c % top) * k + first, c, QField(1));
  }
  return m;
}

SparseMat build_sigma(int k, int n) {
  check_kn(k, n);
  SpinSpace sp{k, n * k};
  SparseMat m(sp.dim());
  Index top = sp.weight(0);
  for (Index c = 0; c < sp.dim(); ++c) {
    int first = static_cast<int>(c / top);
    m.set((c % top) * k + first, c, QField::qpow((k - 1) - 2 * first));
  }
  return m;
}

SparseMat build_sigma_inverse(int k, int n) {
  check_kn(k, n);
  SpinSpace sp{k, n * k};
  SparseMat m(sp.dim());
  Index top = sp.weight(0);
  for (Index c = 0; c < sp.dim(); ++c) {
    int last = static_cast<int>(c % k);
    m.set(last * top + c / k, c, QField::qpow(-(k - 1) + 2 * last));
  }
  return m;
}

std::vector<Index> balanced_sector(int k, int n) {
  check_kn(k, n);
  SpinSpace sp{k, n * k};
  std::vector<Index> out;
  std::vector<int> count(k);
  for (Index c = 0; c < sp.dim(); ++c) {
    std::fill(count.begin(), count.end(), 0);
    Index x = c;
    bool ok = true;
    for (int s = 0; s < sp.sites && ok; ++s) {
      ok = ++count[x % k] <= n;
      x /= k;
    }
    if (ok) out.push_back(c);
  }
  return out;
}

int signed_length(int k, const std::vector<int>& swaps, std::vector<int>* word) {
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 1);
  int l = 0;
  for (int p : swaps) {
    if (p < 1 || p >= k) throw ArgumentError("swap position out of range");
    l += w[p - 1] > w[p] ? 1 : -1;
    std::swap(w[p - 1], w[p]);
  }
  if (word) *word = w;
  return l;
}

std::vector<int> bubble_decomposition(const std::vector<int>& word) {
  std::vector<int> w = word, seq;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 1; p < w.size(); ++p)
      if (w[p - 1] > w[p]) {
        std::swap(w[p - 1], w[p]);
        seq.push_back(static_cast<int>(p));
        changed = true;
      }
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

SpinVec v0(int k, int n) {
  check_kn(k, n);
  SpinSpace block{k, k};
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::pair<Index, QField>> terms;
  QField mq = -QField::q();
  do {
    int l = signed_length(k, bubble_decomposition(w));
    terms.emplace_back(block.encode(w), mq.pow(l));
  } while (std::next_permutation(w.begin(), w.end()));

  SpinVec v{{0, QField(1)}};
  Index shift = block.dim();
  for (int b = 0; b < n; ++b) {
    SpinVec next;
    for (const auto& [i, x] : v)
      for (const auto& [j, y] : terms) next.emplace(i * shift + j, x * y);
    v = std::move(next);
  }
  return v;
}

QField v0_norm_brute(int k) {
  SpinVec v = v0(k, 1);
  return dot(v, v);
}

QField v0_norm_form_first(int k) {
  QField r = QField::qpow(-k * (k - 1) / 2);
  for (int i = 1; i <= k; ++i) r *= chebyshev_u(i);
  return r;
}

QField v0_norm_form_second(int k) {
  QField r = (-QField::q()).pow(-k * (k - 1) / 2);
  for (int i = 1; i <= k - 1; ++i) r *= chebyshev_u(i);
  return r;
}

nlohmann::json RelationReport::to_json() const {
  nlohmann::json j{{"relation", relation}, {"window", window}, {"ok", ok}};
  if (counterexample)
    j["counterexample"] = {{"row", counterexample->row},
                           {"col", counterexample->col},
                           {"value", counterexample->value.to_json()}};
  return j;
}

std::vector<RelationReport> verify_relations(int k, int n, RelationSet which, Index max_dim) {
  check_kn(k, n);
  if (n * k > 8) throw ResourceError("verify_relations supports N = nk <= 8");
  Chain c = Chain::full(k, n);
  if (c.dim() > max_dim)
    throw ResourceError("spin space dimension " + std::to_string(c.dim()) + " exceeds max-dim");
  const int N = c.N();
  const Index dim = c.dim();
  const QField t = tau();
  std::vector<RelationReport> out;
  auto record = [&](std::string name, int window, bool ok, std::optional<Entry<QField>> w) {
    out.push_back({std::move(name), window, ok, ok ? std::nullopt : std::move(w)});
  };
  auto cyc_dist = [N](int i, int j) {
    int d = std::abs(i - j) % N;
    return std::min(d, N - d);
  };

  if (which == RelationSet::hecke) {
    // Braid and commutation are checked cyclically whenever the chain has
    // at least three sites.
    for (int i = 1; i <= N; ++i) {
      std::optional<Entry<QField>> w;
      bool ok = equal_ops(compose({c.e(i), c.e(i)}),
                          [&](const SpinVec& v) { return scaled(c.apply_e(i, v), t); }, dim, &w);
      record("square", i, ok, w);
    }
    if (N >= 3) {
      for (int i = 1; i <= N; ++i) {
        int j = c.wrap(i + 1);
        std::optional<Entry<QField>> w;
        LinOp lhs = [&](const SpinVec& v) {
          return c.apply_e(i, c.apply_e(j, c.apply_e(i, v))) - c.apply_e(i, v);
        };
        LinOp rhs = [&](const SpinVec& v) {
          return c.apply_e(j, c.apply_e(i, c.apply_e(j, v))) - c.apply_e(j, v);
        };
        record("braid", i, equal_ops(lhs, rhs, dim, &w), w);
      }
      for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
          if (cyc_dist(i, j) < 2) continue;
          std::optional<Entry<QField>> w;
          bool ok = equal_ops(compose({c.e(i), c.e(j)}), compose({c.e(j), c.e(i)}), dim, &w);
          record("commute_" + std::to_string(j), i, ok, w);
        }
    }
  } else if (which == RelationSet::quotient) {
    if (n >= 2) {
      for (int i = 1; i <= N; ++i) {
        std::optional<Entry<QField>> w;
        record("Y_k", i, is_zero_op(c.Y(k, i), dim, &w), w);
      }
    } else {
      for (int i = 1; i + k <= N; ++i) {
        std::optional<Entry<QField>> w;
        record("Y_k", i, is_zero_op(c.Y(k, i), dim, &w), w);
      }
      // With N = k no window fits; the full cyclic window must not vanish.
      bool nonzero = !is_zero_op(c.Y(k, 1), dim);
      record("Y_k_full_nonzero", 1, nonzero, std::nullopt);
    }
  } else {
    std::vector<LinOp> ops;
    if (n == 1) {
      LinOp y = c.Y(k - 1, 1);
      ops = {y, c.shifted(N, t), y};
    } else {
      LinOp y = c.Yqsym();
      ops.push_back(y);
      for (int i = 1; i < n; ++i) ops.push_back(c.shifted(i * k, mu(k - 2)));
      ops.push_back(c.shifted(N, t));
      ops.push_back(y);
    }
    std::optional<Entry<QField>> w;
    record("cylindric", 1, is_zero_op(compose(ops), dim, &w), w);
  }
  return out;
}

}  // namespace akm
