#include "akm/qkz.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "akm/errors.hpp"
#include "akm/rmatrix.hpp"

namespace akm {

namespace {

MultiPoly lin(int N, int i, int j, int k) {
  return MultiPoly::linear(N, i, rs_q(k), j, -rs_q(k).inverse());
}

std::vector<Exponents> monomial_basis(int N, int degree) {
  std::vector<Exponents> out;
  Exponents e(N, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == N - 1) {
      if (left <= N - 1) {
        e[i] = left;
        out.push_back(e);
      }
      return;
    }
    for (int a = std::min(left, N - 1); a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, degree);
  return out;
}

// t_i Psi_r + tau Psi_r - sum_j e_{rj} Psi_j.
MultiPoly residual(const QkzSolution& s, int i, std::size_t r, const CycloScalar& tau_rs) {
  const auto& e = s.e_rs[i - 1];
  MultiPoly res = divided_exchange(s.k, i, s.components[r]) + s.components[r] * tau_rs;
  for (std::size_t j = 0; j < s.components.size(); ++j)
    if (!e[r][j].is_zero()) res -= s.components[j] * e[r][j];
  return res;
}

// Sparse Gaussian elimination for A x = b over the cyclotomic field.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}
  // Returns false if the equation contradicts the previous ones.
  bool add(std::map<std::size_t, CycloScalar> row, CycloScalar rhs) {
    for (const auto& r : rows_) {
      auto it = row.find(r.pivot);
      if (it == row.end()) continue;
      CycloScalar f = it->second / r.coeffs.at(r.pivot);
      for (const auto& [v, c] : r.coeffs) {
        CycloScalar& x = row[v];
        x -= f * c;
        if (x.is_zero()) row.erase(v);
      }
      rhs -= f * r.rhs;
    }
    if (row.empty()) return rhs.is_zero();
    std::size_t p = row.begin()->first;
    rows_.push_back({p, std::move(row), std::move(rhs)});
    return true;
  }
  std::size_t rank() const { return rows_.size(); }
  std::vector<CycloScalar> solve() const {
    if (rows_.size() != unknowns_) throw ModelError("q-KZ system does not determine a unique solution");
    std::vector<CycloScalar> x(unknowns_);
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      CycloScalar v = it->rhs;
      for (const auto& [u, c] : it->coeffs)
        if (u != it->pivot) v -= c * x[u];
      x[it->pivot] = v / it->coeffs.at(it->pivot);
    }
    return x;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::map<std::size_t, CycloScalar> coeffs;
    CycloScalar rhs;
  };
  std::size_t unknowns_;
  std::vector<Row> rows_;
};

void solve_dense(QkzSolution& s, const std::vector<bool>& known, const CycloScalar& tau_rs) {
  int N = s.k * s.n;
  std::size_t S = s.components.size();
  auto mons = monomial_basis(N, N * (N - 1) / 2);
  std::map<std::size_t, std::size_t> slot;  // component -> first unknown
  std::size_t U = 0;
  for (std::size_t j = 0; j < S; ++j)
    if (!known[j]) {
      slot[j] = U;
      U += mons.size();
    }
  // Images of each basis monomial under t_i + tau.
  std::vector<std::vector<MultiPoly>> shifted(N);
  for (int i = 1; i <= N; ++i)
    for (const auto& m : mons) {
      MultiPoly x = MultiPoly::monomial(m);
      shifted[i - 1].push_back(divided_exchange(s.k, i, x) + x * tau_rs);
    }
  LinearSystem sys(U);
  for (int i = 1; i <= N; ++i) {
    const auto& e = s.e_rs[i - 1];
    for (std::size_t r = 0; r < S; ++r) {
      // Linear form per monomial of the residual; constants from known components.
      std::map<Exponents, std::map<std::size_t, CycloScalar>> forms;
      MultiPoly constant(N);
      auto add_unknown = [&](std::size_t j, std::size_t mi, const MultiPoly& image) {
        for (const auto& [ex, c] : image.terms()) {
          CycloScalar& x = forms[ex][slot[j] + mi];
          x += c;
        }
      };
      if (known[r]) {
        constant += divided_exchange(s.k, i, s.components[r]) + s.components[r] * tau_rs;
      } else {
        for (std::size_t mi = 0; mi < mons.size(); ++mi) add_unknown(r, mi, shifted[i - 1][mi]);
      }
      for (std::size_t j = 0; j < S; ++j) {
        if (e[r][j].is_zero()) continue;
        if (known[j]) {
          constant -= s.components[j] * e[r][j];
        } else {
          for (std::size_t mi = 0; mi < mons.size(); ++mi)
            add_unknown(j, mi, MultiPoly::monomial(mons[mi], -e[r][j]));
        }
      }
      for (const auto& [ex, c] : constant.terms()) forms[ex];
      for (auto& [ex, row] : forms) {
        std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
        if (!sys.add(row, -constant.coeff(ex)))
          throw ModelError("q-KZ system is inconsistent at e_" + std::to_string(i) + ", path " +
                           path_string(s.basis.paths[r]));
      }
    }
  }
  std::vector<CycloScalar> x = sys.solve();
  for (const auto& [j, base] : slot) {
    MultiPoly p(N);
    for (std::size_t mi = 0; mi < mons.size(); ++mi) p.add_term(mons[mi], x[base + mi]);
    s.components[j] = std::move(p);
  }
}

SparseVec<CycloScalar> specialize_vec(const SpinVec& v, int k) {
  SparseVec<CycloScalar> r;
  for (const auto& [i, x] : v) {
    CycloScalar c = specialize_rs(x, k);
    if (!c.is_zero()) r.emplace(i, c);
  }
  return r;
}

CycloDense local_matrix(const SparseMat& m, int k) {
  Index d = m.dim();
  CycloDense r(d, std::vector<CycloScalar>(d));
  for (const auto& [c, col] : m.cols())
    for (const auto& [row, x] : col) r[row][c] = specialize_rs(x, k);
  return r;
}

// Applies a k^2 x k^2 matrix (index a*k + b for |ab>) on sites (s1, s2).
SparseVec<CycloScalar> apply_pair(const SpinSpace& sp, int s1, int s2, const CycloDense& m,
                                  const SparseVec<CycloScalar>& v) {
  int k = sp.k;
  Index w1 = sp.weight(s1), w2 = sp.weight(s2);
  SparseVec<CycloScalar> out;
  for (const auto& [idx, x] : v) {
    int a = sp.letter(idx, s1), b = sp.letter(idx, s2);
    Index rest = idx - a * w1 - b * w2;
    std::size_t col = static_cast<std::size_t>(a * k + b);
    for (std::size_t row = 0; row < m.size(); ++row) {
      if (m[row][col].is_zero()) continue;
      Index target = rest + (row / k) * w1 + (row % k) * w2;
      SparseVec<CycloScalar> one{{target, m[row][col] * x}};
      axpy(out, CycloScalar(1), one);
    }
  }
  return out;
}

// R(z, w) = a + b e on a pair, at the RS point.
CycloDense r_local(int k, const Rational& z, const Rational& w, const SparseMat& e) {
  RCoeffs rc = r_coeffs(z, w);
  CycloScalar a = specialize_rs(rc.a, k), b = specialize_rs(rc.b, k);
  CycloDense m = local_matrix(e, k);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      m[i][j] *= b;
      if (i == j) m[i][j] += a;
    }
  return m;
}

void check_no_pole(const Rational& z, const Rational& w, int k) {
  // qw - q^{-1} z vanishes only when q^2 = z / w, impossible for real ratios at the RS point
  // unless both vanish.
  if (z == 0 && w == 0) throw ArgumentError("R-matrix pole at z = w = 0");
  if (k < 2) throw ArgumentError("k must be at least 2");
}

}  // namespace

MultiPoly divided_exchange(int k, int i, const MultiPoly& f) {
  int N = f.nvars();
  if (i < 1 || i > N) throw ArgumentError("divided_exchange index out of range");
  int a = i - 1, b = i % N;
  MultiPoly diff = f.swapped(a, b) - f;
  MultiPoly den = MultiPoly::var(N, b) - MultiPoly::var(N, a);
  auto quo = exact_divide(diff, den);
  if (!quo) throw std::logic_error("(tau_i - 1) f is not divisible by z_{i+1} - z_i");
  return lin(N, a, b, k) * *quo;
}

MultiPoly psi_highest(int k, int n) {
  int N = k * n;
  if (N > 8) throw ResourceError("psi_highest is limited to nk <= 8");
  MultiPoly p = MultiPoly::constant(N, CycloScalar(1));
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) p *= lin(N, i, j, k);
  return p;
}

const MultiPoly& QkzSolution::component(const Path& p) const {
  int j = basis.index_of(p);
  if (j < 0) throw ArgumentError("unknown path " + path_string(p));
  return components[j];
}

QkzSolution solve_qkz(int k, int n, QkzMethod method, Gauge gauge) {
  if (k < 2 || n < 1) throw ArgumentError("solve_qkz needs k >= 2, n >= 1");
  if (k * n > 6) throw ResourceError("solve_qkz is limited to nk <= 6");
  int N = k * n;
  QkzSolution s;
  s.k = k;
  s.n = n;
  s.basis = state_basis(k, n, gauge);
  std::size_t S = s.basis.paths.size();
  for (int i = 1; i <= N; ++i) {
    CycloDense m(S, std::vector<CycloScalar>(S));
    for (std::size_t j = 0; j < S; ++j)
      for (std::size_t r = 0; r < S; ++r) m[r][j] = specialize_rs(s.basis.e_cols[i - 1][j][r], k);
    s.e_rs.push_back(std::move(m));
  }
  CycloScalar tau_rs = specialize_rs(tau(), k);
  s.components.assign(S, MultiPoly(N));
  std::vector<bool> known(S, false);
  int top = s.basis.index_of(pi_highest(k, n));
  s.components[top] = psi_highest(k, n);
  known[top] = true;

  if (method == QkzMethod::propagation) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 1; i <= N; ++i) {
        const auto& e = s.e_rs[i - 1];
        for (std::size_t r = 0; r < S; ++r) {
          if (!known[r]) continue;
          std::vector<std::size_t> unknown;
          for (std::size_t j = 0; j < S; ++j)
            if (!known[j] && !e[r][j].is_zero()) unknown.push_back(j);
          if (unknown.size() != 1) continue;
          std::size_t j = unknown[0];
          MultiPoly rhs = divided_exchange(k, i, s.components[r]) + s.components[r] * tau_rs;
          for (std::size_t x = 0; x < S; ++x)
            if (known[x] && !e[r][x].is_zero()) rhs -= s.components[x] * e[r][x];
          s.components[j] = rhs * e[r][j].inverse();
          known[j] = true;
          ++s.propagated;
          progress = true;
        }
      }
    }
  }
  if (std::count(known.begin(), known.end(), false) > 0) {
    s.used_dense = true;
    solve_dense(s, known, tau_rs);
  }
  std::vector<std::string> failures;
  if (!verify_qkz(s, &failures)) throw ModelError("q-KZ equation fails: " + failures.front());
  return s;
}

bool verify_qkz(const QkzSolution& s, std::vector<std::string>* failures) {
  int N = s.k * s.n;
  CycloScalar tau_rs = specialize_rs(tau(), s.k);
  bool ok = true;
  for (int i = 1; i <= N; ++i)
    for (std::size_t r = 0; r < s.components.size(); ++r) {
      if (residual(s, i, r, tau_rs).is_zero()) continue;
      ok = false;
      if (failures) failures->push_back("e_" + std::to_string(i) + " at " + path_string(s.basis.paths[r]));
    }
  return ok;
}

bool check_degrees(const QkzSolution& s) {
  int N = s.k * s.n;
  for (const auto& p : s.components) {
    if (p.is_zero()) return false;
    if (!p.is_homogeneous() || p.total_degree() != N * (N - 1) / 2) return false;
    for (int v = 0; v < N; ++v)
      if (p.degree_in(v) > N - 1) return false;
  }
  return true;
}

bool check_run_factors(const QkzSolution& s) {
  int N = s.k * s.n;
  std::size_t S = s.components.size();
  for (std::size_t j = 0; j < S; ++j) {
    std::vector<bool> eigen(N);
    for (int i = 1; i <= N; ++i) {
      bool tau_col = true;
      for (std::size_t r = 0; r < S; ++r) {
        const QField& c = s.basis.e_cols[i - 1][j][r];
        if (r == j ? !(c == tau()) : !c.is_zero()) tau_col = false;
      }
      eigen[i - 1] = tau_col;
    }
    int start = static_cast<int>(std::find(eigen.begin(), eigen.end(), true) - eigen.begin());
    if (start == N) return false;
    // Walk generators start+1, ..., start+N (cyclic); collect maximal runs of non-eigen ones.
    int g = 0;
    while (g < N) {
      int i = (start + 1 + g) % N;
      if (eigen[i]) {
        ++g;
        continue;
      }
      std::vector<int> sites{i};
      while (g < N && !eigen[(start + 1 + g) % N]) {
        sites.push_back((start + 2 + g) % N);
        ++g;
      }
      MultiPoly f = MultiPoly::constant(N, CycloScalar(1));
      for (std::size_t a = 0; a < sites.size(); ++a)
        for (std::size_t b = a + 1; b < sites.size(); ++b) f *= lin(N, sites[a], sites[b], s.k);
      if (!exact_divide(s.components[j], f)) return false;
    }
  }
  return true;
}

std::vector<CycloScalar> covector(const QkzSolution& s) {
  std::size_t S = s.components.size();
  int N = s.k * s.n;
  CycloScalar tau_rs = specialize_rs(tau(), s.k);
  // Unknowns v_0..v_{S-1}; equations sum_r v_r e_{rj} - tau v_j = 0 and v_{lowest} = 1.
  LinearSystem sys(S);
  int low = s.basis.index_of(pi_omega(s.k, s.n));
  std::map<std::size_t, CycloScalar> norm{{static_cast<std::size_t>(low), CycloScalar(1)}};
  sys.add(norm, CycloScalar(1));
  for (int i = 1; i <= N; ++i)
    for (std::size_t j = 0; j < S; ++j) {
      std::map<std::size_t, CycloScalar> row;
      for (std::size_t r = 0; r < S; ++r)
        if (!s.e_rs[i - 1][r][j].is_zero()) row[r] = s.e_rs[i - 1][r][j];
      row[j] -= tau_rs;
      if (row[j].is_zero()) row.erase(j);
      if (!sys.add(row, CycloScalar())) throw ModelError("no covector with v e_i = tau v");
    }
  if (sys.rank() != S) throw ModelError("covector space has dimension " + std::to_string(S + 1 - sys.rank()));
  return sys.solve();
}

std::optional<CycloScalar> covector_shift_eigenvalue(const QkzSolution& s, const std::vector<CycloScalar>& v) {
  std::optional<CycloScalar> lambda;
  for (std::size_t j = 0; j < v.size(); ++j) {
    // (v sigma)_j = v_{target(j)} c_j.
    CycloScalar x = v[s.basis.sigma_target[j]] * specialize_rs(s.basis.sigma_const[j], s.k);
    if (v[j].is_zero()) {
      if (!x.is_zero()) return std::nullopt;
      continue;
    }
    CycloScalar r = x / v[j];
    if (lambda && !(*lambda == r)) return std::nullopt;
    lambda = r;
  }
  return lambda;
}

MultiPoly weighted_sum(const QkzSolution& s, const std::vector<CycloScalar>& v) {
  MultiPoly w(s.k * s.n);
  for (std::size_t j = 0; j < v.size(); ++j) w += s.components[j] * v[j];
  return w;
}

nlohmann::json SumRuleReport::to_json() const {
  return {{"W", W.to_json()},
          {"schur_product", schur_product.to_json()},
          {"constant", constant ? constant->to_json() : nlohmann::json(nullptr)},
          {"symmetric", symmetric},
          {"homogeneous", homogeneous},
          {"points_checked", points_checked},
          {"ratio_constant_at_points", ratio_constant_at_points}};
}

SumRuleReport sum_rule(const QkzSolution& s, unsigned seed, int points) {
  int N = s.k * s.n;
  SumRuleReport rep;
  rep.W = weighted_sum(s, covector(s));
  rep.schur_product = MultiPoly::constant(N, CycloScalar(1));
  for (int l = 0; l <= s.k - 1; ++l) rep.schur_product *= schur_poly(young_Y(s.k, l, s.n), N);
  rep.symmetric = rep.W.is_symmetric();
  rep.homogeneous = rep.W.is_homogeneous() && rep.W.total_degree() == N * (N - 1) / 2;
  if (!rep.W.is_zero()) {
    CycloScalar c = rep.W.terms().rbegin()->second / rep.schur_product.terms().rbegin()->second;
    if (rep.W == rep.schur_product * c) rep.constant = c;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(1, 60);
  std::optional<CycloScalar> first;
  rep.ratio_constant_at_points = true;
  for (int p = 0; p < points; ++p) {
    std::vector<CycloScalar> x;
    for (int i = 0; i < N; ++i) x.push_back(CycloScalar(Rational(d(rng), d(rng))));
    CycloScalar den = rep.schur_product.evaluate(x);
    if (den.is_zero()) continue;
    CycloScalar r = rep.W.evaluate(x) / den;
    ++rep.points_checked;
    if (!first) first = r;
    if (!(r == *first)) rep.ratio_constant_at_points = false;
  }
  if (rep.points_checked < points) rep.ratio_constant_at_points = false;
  return rep;
}

SparseVec<CycloScalar> psi_spin_vector(const QkzSolution& s, const std::vector<Rational>& zs) {
  int N = s.k * s.n;
  if (static_cast<int>(zs.size()) != N) throw ArgumentError("need one spectral parameter per site");
  std::vector<CycloScalar> x(zs.begin(), zs.end());
  SparseVec<CycloScalar> out;
  for (std::size_t j = 0; j < s.components.size(); ++j)
    axpy(out, s.components[j].evaluate(x), specialize_vec(s.basis.vectors[j], s.k));
  return out;
}

bool check_spin_exchange(const QkzSolution& s, const std::vector<Rational>& zs) {
  int N = s.k * s.n;
  Chain c = Chain::full(s.k, s.n);
  SparseVec<CycloScalar> psi = psi_spin_vector(s, zs);
  for (int i = 1; i <= N; ++i) {
    int a = i - 1, b = i % N;
    check_no_pole(zs[b], zs[a], s.k);
    RCoeffs rc = r_coeffs(zs[b], zs[a]);
    SparseVec<CycloScalar> lhs = scaled(psi, specialize_rs(rc.a, s.k));
    // e_i is applied in Q(q) to each state, then specialized.
    SparseVec<CycloScalar> epsi;
    std::vector<CycloScalar> x(zs.begin(), zs.end());
    for (std::size_t j = 0; j < s.components.size(); ++j)
      axpy(epsi, s.components[j].evaluate(x), specialize_vec(c.apply_e(i, s.basis.vectors[j]), s.k));
    axpy(lhs, specialize_rs(rc.b, s.k), epsi);
    std::vector<Rational> swapped = zs;
    std::swap(swapped[a], swapped[b]);
    if (!(lhs == psi_spin_vector(s, swapped))) return false;
  }
  return true;
}

SparseVec<CycloScalar> transfer_apply(int k, int n, const Rational& t, const std::vector<Rational>& zs,
                                      const SparseVec<CycloScalar>& x, const CycloScalar& shift) {
  int N = k * n;
  if (static_cast<int>(zs.size()) != N) throw ArgumentError("need one spectral parameter per site");
  SpinSpace big{k, N + 1};
  SparseMat e = local_e(k);
  SparseMat perm(static_cast<Index>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) perm.set(b * k + a, a * k + b, QField(1));
  CycloDense p = local_matrix(perm, k);
  Index chain_dim = SpinSpace{k, N}.dim();
  SparseVec<CycloScalar> out;
  for (int a = 0; a < k; ++a) {
    SparseVec<CycloScalar> w;
    for (const auto& [idx, v] : x) w.emplace(a * chain_dim + idx, v);
    for (int j = 1; j <= N; ++j) {
      check_no_pole(zs[j - 1], t, k);
      w = apply_pair(big, 0, j, r_local(k, zs[j - 1], t, e), w);
      w = apply_pair(big, 0, j, p, w);
    }
    CycloScalar twist = CycloScalar::root_power(rs_order(k), -(k - 1) + 2 * a) * shift;
    for (const auto& [idx, v] : w)
      if (big.letter(idx, 0) == a) axpy(out, twist, SparseVec<CycloScalar>{{idx - a * chain_dim, v}});
  }
  return out;
}

bool transfer_matrix_check(const QkzSolution& s, const Rational& t, const std::vector<Rational>& zs) {
  auto lambda = covector_shift_eigenvalue(s, covector(s));
  if (!lambda) throw ModelError("covector is not a shift eigenvector");
  SparseVec<CycloScalar> psi = psi_spin_vector(s, zs);
  return transfer_apply(s.k, s.n, t, zs, psi, lambda->inverse()) == psi;
}

nlohmann::json WheelReport::to_json() const {
  return {{"m", m},
          {"direction", direction},
          {"constant", constant ? constant->to_json() : nlohmann::json(nullptr)},
          {"embedded", embedded},
          {"vanishing", vanishing},
          {"ok", ok}};
}

WheelReport wheel_recursion_check(const QkzSolution& big, const QkzSolution& small, int m, int direction) {
  int k = big.k, N = k * big.n, M = N - k;
  if (small.k != k || small.n + 1 != big.n) throw ArgumentError("wheel recursion needs sizes n and n-1");
  if (m < 1 || m + k - 1 > N) throw ArgumentError("wheel window out of range");
  if (direction != 1 && direction != -1) throw ArgumentError("wheel direction must be +1 or -1");
  WheelReport rep;
  rep.m = m;
  rep.direction = direction;
  int order = rs_order(k), V = M + 1, zi = M;
  MultiPoly z = MultiPoly::var(V, zi);
  std::vector<MultiPoly> images;
  std::vector<MultiPoly> small_images;
  for (int p = 0, o = 0; p < N; ++p) {
    int j = p - (m - 1);
    if (j >= 0 && j < k) {
      images.push_back(z * CycloScalar::root_power(order, 2L * direction * j));
    } else {
      images.push_back(MultiPoly::var(V, o));
      small_images.push_back(MultiPoly::var(V, o));
      ++o;
    }
  }
  MultiPoly pref = z.pow(k * (k - 1) / 2);
  for (int o = 0; o < M; ++o) pref *= lin(V, o, zi, k).pow(k);
  rep.ok = true;
  for (std::size_t j = 0; j < big.components.size(); ++j) {
    const Path& p = big.basis.paths[j];
    MultiPoly lhs = big.components[j].substitute(images);
    bool has_run = true;
    for (int t = 0; t < k; ++t) has_run = has_run && p[m - 1 + t] == t + 1;
    if (!has_run) {
      if (lhs.is_zero())
        ++rep.vanishing;
      else
        rep.ok = false;
      continue;
    }
    Path rest;
    for (int t = 0; t < N; ++t)
      if (t < m - 1 || t >= m - 1 + k) rest.push_back(p[t]);
    MultiPoly base = pref * small.component(rest).substitute(small_images);
    ++rep.embedded;
    if (lhs.is_zero() || base.is_zero()) {
      rep.ok = false;
      continue;
    }
    CycloScalar c = lhs.terms().rbegin()->second / base.terms().rbegin()->second;
    if (!(lhs == base * c)) {
      rep.ok = false;
      continue;
    }
    if (!rep.constant) rep.constant = c;
    if (!(*rep.constant == c)) rep.ok = false;
  }
  return rep;
}

nlohmann::json qkz_solution_to_json(const QkzSolution& s, const std::vector<CycloScalar>& v,
                                    const SumRuleReport& rule) {
  nlohmann::json comps = nlohmann::json::object();
  nlohmann::json cov = nlohmann::json::object();
  for (std::size_t j = 0; j < s.components.size(); ++j) {
    comps[path_string(s.basis.paths[j])] = s.components[j].to_json();
    cov[path_string(s.basis.paths[j])] = v[j].to_json();
  }
  std::vector<nlohmann::json> young;
  for (int l = 0; l <= s.k - 1; ++l) young.push_back(partition_to_json(young_Y(s.k, l, s.n)));
  return {{"k", s.k},
          {"n", s.n},
          {"gauge", s.basis.gauge == Gauge::word ? "word" : "sigma_orbit"},
          {"components", comps},
          {"covector", cov},
          {"W", rule.W.to_json()},
          {"young_diagrams", young},
          {"sum_rule_constant", rule.constant ? rule.constant->to_json() : nlohmann::json(nullptr)},
          {"sum_rule_symmetric", rule.symmetric},
          {"sum_rule_points_checked", rule.points_checked}};
}

}  // namespace akm
