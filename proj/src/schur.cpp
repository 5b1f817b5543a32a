#include "akm/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "akm/errors.hpp"

namespace akm {

Partition normalize_partition(const Partition& p) {
  Partition r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || (i > 0 && p[i] > p[i - 1])) throw ArgumentError("not a partition");
    if (p[i] > 0) r.push_back(p[i]);
  }
  return r;
}

Partition conjugate(const Partition& p) {
  Partition r;
  for (int c = 1; !p.empty() && c <= p[0]; ++c)
    r.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [c](int x) { return x >= c; })));
  return r;
}

Partition young_Y(int k, int l, int n) {
  if (k < 1 || n < 1) throw ArgumentError("young_Y needs k, n >= 1");
  if (l < 0 || l > k - 1) throw ArgumentError("young_Y needs 0 <= l <= k-1");
  Partition p(l, n);
  for (int v = n - 1; v >= 1; --v) p.insert(p.end(), k, v);
  return p;
}

MultiPoly elementary(int r, int nvars) {
  MultiPoly p(nvars);
  if (r < 0 || r > nvars) return p;
  Exponents e(nvars, 0);
  std::fill(e.end() - r, e.end(), 1);
  do p.add_term(e, CycloScalar(1));
  while (std::next_permutation(e.begin(), e.end()));
  return p;
}

MultiPoly complete(int r, int nvars) {
  MultiPoly p(nvars);
  if (r < 0) return p;
  Exponents e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      p.add_term(e, CycloScalar(1));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (nvars == 0) {
    if (r == 0) p.add_term(e, CycloScalar(1));
    return p;
  }
  rec(0, r);
  return p;
}

namespace {

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m, int nvars) {
  std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(nvars, CycloScalar(1));
  MultiPoly r(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    MultiPoly t = m[0][j] * determinant(std::move(minor), nvars);
    if (j % 2)
      r -= t;
    else
      r += t;
  }
  return r;
}

CycloScalar determinant(std::vector<std::vector<CycloScalar>> m) {
  std::size_t n = m.size();
  CycloScalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return CycloScalar();
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    CycloScalar inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      CycloScalar f = m[r][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

CycloScalar power(const CycloScalar& x, int e) {
  CycloScalar r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Embeds a polynomial in z_1..z_m into m + extra variables.
MultiPoly widen(const MultiPoly& p, int nvars) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < p.nvars(); ++i) images.push_back(MultiPoly::var(nvars, i));
  if (images.empty()) return MultiPoly::constant(nvars, p.coeff({}));
  return p.substitute(images);
}

// Number of tableaux via chains of horizontal strips from the empty shape.
Rational count_tableaux(const Partition& lambda, int m) {
  std::map<Partition, Rational> layer{{Partition{}, Rational(1)}};
  for (int step = 0; step < m; ++step) {
    std::map<Partition, Rational> next;
    for (const auto& [mu, c] : layer) {
      // nu / mu is a horizontal strip inside lambda: mu_i <= nu_i <= min(lambda_i, mu_{i-1}).
      Partition nu(lambda.size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == lambda.size()) {
          next[normalize_partition(nu)] += c;
          return;
        }
        int lo = i < mu.size() ? mu[i] : 0;
        int hi = lambda[i];
        if (i > 0) hi = std::min(hi, i - 1 < mu.size() ? mu[i - 1] : 0);
        for (int v = lo; v <= hi; ++v) {
          nu[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
    layer = std::move(next);
  }
  auto it = layer.find(lambda);
  return it == layer.end() ? Rational(0) : it->second;
}

}  // namespace

CycloScalar rs_q(int k) { return CycloScalar::root_power(rs_order(k), 1); }

MultiPoly schur_poly(const Partition& lambda, int nvars, JacobiTrudi form) {
  Partition lam = normalize_partition(lambda);
  if (static_cast<int>(lam.size()) > nvars) return MultiPoly(nvars);
  Partition rows = form == JacobiTrudi::complete ? lam : conjugate(lam);
  int len = static_cast<int>(rows.size());
  std::map<int, MultiPoly> cache;
  auto gen = [&](int r) -> const MultiPoly& {
    auto it = cache.find(r);
    if (it == cache.end())
      it = cache.emplace(r, form == JacobiTrudi::complete ? complete(r, nvars) : elementary(r, nvars)).first;
    return it->second;
  };
  std::vector<std::vector<MultiPoly>> m(len);
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) m[i].push_back(gen(rows[i] - i + j));
  return determinant(std::move(m), nvars);
}

MultiPoly schur_poly(const Partition& lambda, int nvars) {
  Partition lam = normalize_partition(lambda);
  bool by_rows = lam.size() <= (lam.empty() ? 0 : static_cast<std::size_t>(lam[0]));
  return schur_poly(lam, nvars, by_rows ? JacobiTrudi::complete : JacobiTrudi::elementary);
}

CycloScalar schur_bialternant(const Partition& lambda, const std::vector<CycloScalar>& x) {
  Partition lam = normalize_partition(lambda);
  std::size_t m = x.size();
  if (lam.size() > m) return CycloScalar();
  lam.resize(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (x[i] == x[j]) throw ArgumentError("bialternant needs distinct values");
  std::vector<std::vector<CycloScalar>> num(m), den(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      num[i].push_back(power(x[i], lam[j] + static_cast<int>(m - 1 - j)));
      den[i].push_back(power(x[i], static_cast<int>(m - 1 - j)));
    }
  return determinant(num) / determinant(den);
}

CycloScalar schur_tableaux(const Partition& lambda, const std::vector<CycloScalar>& x) {
  Partition lam = normalize_partition(lambda);
  int m = static_cast<int>(x.size());
  std::vector<std::vector<int>> t;
  for (int len : lam) t.emplace_back(len, 0);
  CycloScalar total;
  std::function<void(std::size_t, int, CycloScalar)> fill = [&](std::size_t r, int c, CycloScalar w) {
    if (r == lam.size()) {
      total += w;
      return;
    }
    if (c == lam[r]) {
      fill(r + 1, 0, w);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      t[r][c] = v;
      fill(r, c + 1, w * x[v - 1]);
    }
  };
  fill(0, 0, CycloScalar(1));
  return total;
}

Rational schur_dimension(const Partition& lambda, int m) {
  Partition lam = normalize_partition(lambda);
  Partition conj = conjugate(lam);
  Rational r(1);
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int hook = lam[i] - j + conj[j] - static_cast<int>(i) - 1;
      int content = j - static_cast<int>(i);
      r *= Rational(m + content, hook);
    }
  r.canonicalize();
  return r;
}

bool check_principal_specialization(int k) {
  if (k < 2) throw ArgumentError("principal specialization needs k >= 2");
  CycloScalar q = rs_q(k), q2 = q * q;
  std::vector<CycloScalar> x;
  for (int i = 0; i < k; ++i) x.push_back(power(q2, i));
  for (int l = 0; l <= k - 1; ++l) {
    CycloScalar lhs = schur_poly(young_Y(k, l, 1), k).evaluate(x);
    CycloScalar rhs = CycloScalar::root_power(rs_order(k), -2L * l) * CycloScalar(l % 2 ? -1 : 1);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool SchurRecursionReport::per_l_ok() const {
  return !per_l.empty() && std::all_of(per_l.begin(), per_l.end(), [](bool b) { return b; });
}

nlohmann::json SchurRecursionReport::to_json() const {
  nlohmann::json j{{"k", k},
                   {"n", n},
                   {"per_l", per_l},
                   {"degrees_match", degrees_match},
                   {"product_printed", product_printed},
                   {"product_derived", product_derived}};
  j["product_constant"] = product_constant ? product_constant->to_json() : nlohmann::json(nullptr);
  return j;
}

SchurRecursionReport check_schur_recursion(int k, int n) {
  if (k < 2 || n < 2) throw ArgumentError("schur recursion needs k, n >= 2");
  if (k * n > 9) throw ResourceError("schur recursion is limited to nk <= 9");
  SchurRecursionReport rep;
  rep.k = k;
  rep.n = n;
  int N = k * n, M = N - k, V = M + 1, zi = M;
  int order = rs_order(k);
  CycloScalar q2k = CycloScalar::root_power(order, 2L * k);
  std::vector<MultiPoly> images;
  for (int i = 0; i < M; ++i) images.push_back(MultiPoly::var(V, i));
  for (int j = 1; j <= k; ++j)
    images.push_back(MultiPoly::var(V, zi) * CycloScalar::root_power(order, 2L * (j - 1)));
  MultiPoly z = MultiPoly::var(V, zi);
  MultiPoly wheel = MultiPoly::constant(V, CycloScalar(1));
  for (int i = 0; i < M; ++i) wheel *= MultiPoly::var(V, i) - z * q2k;

  MultiPoly lhs_prod = MultiPoly::constant(V, CycloScalar(1)), base_prod = lhs_prod;
  for (int l = 0; l <= k - 1; ++l) {
    MultiPoly lhs = schur_poly(young_Y(k, l, n), N).substitute(images);
    MultiPoly lower = widen(schur_poly(young_Y(k, l, n - 1), M), V);
    MultiPoly base = z.pow(l) * wheel * lower;
    CycloScalar pref = CycloScalar::root_power(order, -2L * l) * CycloScalar(l % 2 ? -1 : 1);
    MultiPoly rhs = base * pref;
    bool deg = lhs.total_degree() == rhs.total_degree();
    for (int v = 0; v < V; ++v) deg = deg && lhs.degree_in(v) == rhs.degree_in(v);
    rep.degrees_match = rep.degrees_match && deg;
    rep.per_l.push_back(lhs == rhs);
    lhs_prod *= lhs;
    base_prod *= lower;
  }
  int half = k * (k - 1) / 2;
  MultiPoly base = z.pow(half) * wheel.pow(k) * base_prod;
  CycloScalar printed = CycloScalar::root_power(order, 2) * CycloScalar((k * (k + 1) / 2) % 2 ? -1 : 1);
  CycloScalar derived = CycloScalar::root_power(order, -1L * k * (k - 1)) * CycloScalar(half % 2 ? -1 : 1);
  rep.product_printed = lhs_prod == base * printed;
  rep.product_derived = lhs_prod == base * derived;
  if (!base.is_zero()) {
    CycloScalar c = lhs_prod.terms().rbegin()->second / base.terms().rbegin()->second;
    if (lhs_prod == base * c) rep.product_constant = c;
  }
  return rep;
}

bool check_wheel_vanishing(int k) {
  if (k < 2) throw ArgumentError("wheel vanishing needs k >= 2");
  int order = rs_order(k);
  CycloScalar z(Rational(3, 7));
  for (int n = 2; n <= 2; ++n) {
    int m = n * k;
    std::vector<CycloScalar> x;
    for (int j = 0; j <= k; ++j) x.push_back(z * CycloScalar::root_power(order, 2L * j));
    for (int i = static_cast<int>(x.size()); i < m; ++i) x.push_back(CycloScalar(Rational(2 * i + 5, i + 2)));
    for (int l = 0; l <= k - 1; ++l) {
      Partition lam = young_Y(k, l, n);
      lam.resize(m, 0);
      std::vector<std::vector<CycloScalar>> num(m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) num[i].push_back(power(x[i], lam[j] + m - 1 - j));
      if (!determinant(num).is_zero()) return false;
    }
  }
  return true;
}

Rational homogeneous_sum(int k, int n) {
  Rational r(1);
  for (int l = 0; l <= k - 1; ++l) r *= schur_dimension(young_Y(k, l, n), n * k);
  return r;
}

Rational homogeneous_sum_tableaux(int k, int n) {
  Rational r(1);
  for (int l = 0; l <= k - 1; ++l) r *= count_tableaux(normalize_partition(young_Y(k, l, n)), n * k);
  return r;
}

nlohmann::json partition_to_json(const Partition& p) { return nlohmann::json(normalize_partition(p)); }

}  // namespace akm
