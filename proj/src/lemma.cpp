#include <algorithm>
#include <map>
#include <set>

#include "akm/errors.hpp"
#include "akm/spin.hpp"

namespace akm {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

void check_range(int k, int n) {
  if (k < 2 || k > 7) throw ArgumentError("lemma_sum needs 2 <= k <= 7");
  if (n < 1 || n > 3) throw ArgumentError("lemma_sum needs 1 <= n <= 3");
}

// (xi^r s)_j = s_{j+r}, indices mod length.
std::vector<int> rotate_left(const std::vector<int>& s, int r) {
  int L = static_cast<int>(s.size());
  std::vector<int> out(L);
  for (int j = 0; j < L; ++j) out[j] = s[((j + r) % L + L) % L];
  return out;
}

// Smallest r with xi^r s lexicographically minimal among rotations.
int min_rotation(const std::vector<int>& s) {
  int L = static_cast<int>(s.size()), best = 0;
  std::vector<int> bv = s;
  for (int r = 1; r < L; ++r) {
    auto c = rotate_left(s, r);
    if (c < bv) {
      bv = std::move(c);
      best = r;
    }
  }
  return best;
}

std::vector<int> eta_minimal(const std::vector<int>& i) {
  int L = static_cast<int>(i.size());
  std::vector<int> u(L);
  u[0] = i[0];
  int d1 = i[1] - i[0];
  u[1] = u[0] + d1 - sgn(d1);
  for (int t = 2; t < L; ++t) {
    int d = i[t] - i[t - 1], dp = i[t - 1] - i[t - 2];
    u[t] = u[t - 1] + (d * dp > 0 ? d : d - sgn(d));
  }
  return u;
}

std::vector<int> eta_minimal_inverse(const std::vector<int>& u) {
  int L = static_cast<int>(u.size());
  std::vector<int> i(L);
  i[0] = u[0];
  int t = u[1] - u[0] + 1;
  i[1] = i[0] + t;
  for (int j = 2; j < L; ++j) {
    int db = u[j] - u[j - 1];
    if (db == 0)
      t = -sgn(t);
    else if (t * db > 0)
      t = db;
    else
      t = db + sgn(db);
    i[j] = i[j - 1] + t;
  }
  return i;
}

// Calls f on every cyclic sequence of length L over 1..k with distinct
// neighbours.
template <class F>
void for_each_cyclic(int k, int L, F f) {
  std::vector<int> s(L, 1);
  while (true) {
    bool ok = true;
    for (int j = 0; j < L && ok; ++j) ok = s[j] != s[(j + 1) % L];
    if (ok) f(s);
    int p = L - 1;
    while (p >= 0 && s[p] == k) s[p--] = 1;
    if (p < 0) break;
    ++s[p];
  }
}

QField from_exponents(const std::map<int, long>& counts) {
  std::map<int, Rational> t;
  for (const auto& [e, c] : counts) t[e] = Rational(c);
  return QField(LaurentPoly::from_terms(t));
}

}  // namespace

int lemma_exponent_sequence(const std::vector<int>& i) {
  int L = static_cast<int>(i.size()), e = 0;
  for (int l = 0; l + 1 < L; l += 2) {
    int a = i[l], b = i[l + 1], c = i[(l + 2) % L];
    e += 2 * (b - a) - sgn(b - a) - sgn(b - c);
  }
  return e;
}

int lemma_exponent_image(const std::vector<int>& u) {
  int e = 0;
  for (std::size_t l = 0; l + 1 < u.size(); l += 2) e += 2 * (u[l + 1] - u[l]);
  return e;
}

bool lemma_is_extra(const std::vector<int>& i) {
  if (i.size() % 2) return false;
  for (std::size_t l = 0; l < i.size(); l += 2)
    if (i[l] != i[0] || i[l + 1] != i[0] - 1) return false;
  return i[0] >= 2;
}

std::vector<int> lemma_eta(const std::vector<int>& i) {
  if (i.size() < 2 || i.size() % 2) throw ArgumentError("sequence length must be even and positive");
  if (lemma_is_extra(i)) throw ArgumentError("extra sequences are outside the domain of the map");
  int r = min_rotation(i);
  return rotate_left(eta_minimal(rotate_left(i, r)), -r);
}

std::vector<int> lemma_eta_inverse(const std::vector<int>& u) {
  if (u.size() < 2 || u.size() % 2) throw ArgumentError("sequence length must be even and positive");
  int r = min_rotation(u);
  return rotate_left(eta_minimal_inverse(rotate_left(u, r)), -r);
}

QField lemma_closed_form_printed(int k, int n) {
  return chebyshev_u_neg(k - 1).pow(2 * n) + QField(k - 1);
}

QField lemma_closed_form_image(int k, int n) {
  return chebyshev_u_neg(k - 2).pow(2 * n) + QField(k - 1);
}

QField lemma_sum(int k, int n, LemmaMethod method) {
  check_range(k, n);
  const int L = 2 * n;
  if (method == LemmaMethod::brute) {
    std::map<int, long> counts;
    for_each_cyclic(k, L, [&](const std::vector<int>& s) { ++counts[lemma_exponent_sequence(s)]; });
    return from_exponents(counts);
  }

  std::map<int, long> counts;
  std::set<std::vector<int>> image;
  long extra = 0;
  for_each_cyclic(k, L, [&](const std::vector<int>& s) {
    if (lemma_is_extra(s)) {
      if (lemma_exponent_sequence(s) != 0) throw ModelError("extra sequence with nonzero exponent");
      ++extra;
      return;
    }
    std::vector<int> u = lemma_eta(s);
    for (int x : u)
      if (x < 1 || x > k - 1) throw ModelError("image of the map leaves 1..k-1");
    if (lemma_exponent_image(u) != lemma_exponent_sequence(s))
      throw ModelError("map does not preserve the exponent");
    if (!image.insert(u).second) throw ModelError("map is not injective");
    if (lemma_eta_inverse(u) != s) throw ModelError("inverse map does not undo the map");
    ++counts[lemma_exponent_image(u)];
  });
  long full = 1;
  for (int j = 0; j < L; ++j) full *= (k - 1);
  if (static_cast<long>(image.size()) != full) throw ModelError("map is not onto");
  if (extra != k - 1) throw ModelError("unexpected number of extra sequences");
  counts[0] += extra;
  return from_exponents(counts);
}

}  // namespace akm
