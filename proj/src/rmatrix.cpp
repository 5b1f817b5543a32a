#include "akm/rmatrix.hpp"

#include "akm/errors.hpp"

namespace akm {

RCoeffs r_coeffs(const QField& z, const QField& w) {
  QField q = QField::q(), qi = q.inverse();
  QField den = q * w - qi * z;
  if (den.is_zero()) throw ArgumentError("R-matrix denominator vanishes");
  return {(q * z - qi * w) / den, (z - w) / den};
}

RCoeffs r_coeffs(const Rational& z, const Rational& w) { return r_coeffs(QField(z), QField(w)); }

QField l_shift(int m) {
  if (m < 1) throw ArgumentError("rhombus label must be positive");
  return mu(m - 1);
}

LinOp l_op(const Chain& c, int g, int m) { return c.shifted(g, l_shift(m)); }

LinOp l_op_cleared(const Chain& c, int g, int m) {
  if (m < 1) throw ArgumentError("rhombus label must be positive");
  QField u1 = chebyshev_u(m - 1), u2 = m >= 2 ? chebyshev_u(m - 2) : QField();
  return [&c, g, u1, u2](const SpinVec& v) {
    SpinVec r = scaled(c.apply_e(g, v), u1);
    axpy(r, -u2, v);
    return r;
  };
}

LinOp r_op(const Chain& c, int g, const Rational& z, const Rational& w) {
  RCoeffs rc = r_coeffs(z, w);
  return [&c, g, rc](const SpinVec& v) {
    SpinVec r = scaled(c.apply_e(g, v), rc.b);
    axpy(r, rc.a, v);
    return r;
  };
}

namespace {

Chain checked_full(int k, int n) {
  Chain c = Chain::full(k, n);
  if (c.dim() > kDefaultMaxDim * 16) throw ResourceError("spin space too large to materialize");
  return c;
}

void check_site(const Chain& c, int i) {
  if (i < 1 || i > c.N()) throw ArgumentError("site index out of range");
}

}  // namespace

SparseMat build_L(int i, int m, int k, int n) {
  if (m < 1 || m > k) throw ArgumentError("rhombus label out of range");
  Chain c = checked_full(k, n);
  check_site(c, i);
  return c.materialize(l_op(c, i, m));
}

SparseMat build_R(int i, const Rational& z, const Rational& w, int k, int n) {
  Chain c = checked_full(k, n);
  check_site(c, i);
  return c.materialize(r_op(c, i, z, w));
}

SparseMat build_Y(int m, int start, int k, int n) {
  if (m < 1 || m > k) throw ArgumentError("q-symmetrizer order out of range");
  Chain c = checked_full(k, n);
  check_site(c, start);
  if (n == 1 && start + m - 1 > c.N()) throw ArgumentError("window out of range");
  return c.materialize(c.Y(m, start));
}

SparseMat build_Yqsym(int k, int n) {
  Chain c = checked_full(k, n);
  return c.materialize(c.Yqsym());
}

bool check_yang_baxter(int u, int v, int i, int k, int n) {
  if (!(u > v && v >= 1)) throw ArgumentError("need u > v >= 1");
  int N = n * k;
  if (i < 1 || i > N) throw ArgumentError("site index out of range");
  if (N < 3 || (n == 1 && i + 2 > N)) throw ArgumentError("window does not fit");
  Chain c = Chain::window(k, N, i, 3);
  int j = c.wrap(i + 1);
  // Both sides carry the same labels, so clearing the denominators U_{m-1}
  // of each factor scales them equally and keeps entries Laurent polynomials.
  LinOp lhs = compose({l_op_cleared(c, i, u - v), l_op_cleared(c, j, u), l_op_cleared(c, i, v)});
  LinOp rhs = compose({l_op_cleared(c, j, v), l_op_cleared(c, i, u), l_op_cleared(c, j, u - v)});
  return equal_ops(lhs, rhs, c.dim());
}

bool check_unitarity(const Rational& z, const Rational& w, int i, int k, int n) {
  int N = n * k;
  if (i < 1 || i > N) throw ArgumentError("site index out of range");
  Chain c = Chain::window(k, N, i, 2);
  LinOp prod = compose({r_op(c, i, z, w), r_op(c, i, w, z)});
  return equal_ops(prod, [](const SpinVec& v) { return v; }, c.dim());
}

QField band_constant(int k, int n) {
  return delta(k - 1).pow(n - 1) * mu(k - 1).inverse() * alpha(k - 1).pow(n);
}

std::optional<QField> op_ratio(const LinOp& op, const LinOp& ref, Index dim) {
  std::optional<QField> r;
  for (Index c = 0; c < dim; ++c) {
    SpinVec e{{c, QField(1)}};
    SpinVec a = op(e), b = ref(e);
    if (b.empty()) {
      if (!a.empty()) return std::nullopt;
      continue;
    }
    auto cr = ratio(a, b);
    if (!cr) return std::nullopt;
    if (!r)
      r = cr;
    else if (!(*r == *cr))
      return std::nullopt;
  }
  return r;
}

std::optional<QField> band_ratio(int k, int n) {
  Chain c = Chain::full(k, n);
  if (c.dim() > kDefaultMaxDim) throw ResourceError("spin space too large for the band check");
  LinOp y = n == 1 ? c.Y(k - 1, 1) : c.Yqsym();
  std::vector<LinOp> ops{y};
  for (int i = 1; i <= n; ++i) ops.push_back(l_op(c, i * k, k - 1));
  ops.push_back(y);
  return op_ratio(compose(ops), y, c.dim());
}

bool cylindric_band_check(int k, int n) {
  auto r = band_ratio(k, n);
  return r && *r == band_constant(k, n);
}

std::optional<QField> y_factorization_constant(int m) {
  if (m < 2) throw ArgumentError("factorization needs m >= 2");
  Chain c = Chain::full(m + 1, 1);
  std::vector<LinOp> ops;
  for (int j = 1; j <= m; ++j) ops.push_back(l_op(c, j, j));
  ops.push_back(c.Y(m - 1, 1));
  return op_ratio(c.Y(m, 1), compose(ops), c.dim());
}

QField y_factorization_expected(int m) {
  QField r(1);
  for (int l = 1; l <= m - 2; ++l) r *= alpha(l);
  return r;
}

bool check_nested_symmetrizers(int m, int l) {
  if (l < 1 || l > m) throw ArgumentError("need 1 <= l <= m");
  Chain c = Chain::full(m + 1, 1);
  LinOp big = c.Y(m, 1);
  for (int j = 1; j + l - 1 <= m; ++j) {
    LinOp small = c.Y(l, j);
    LinOp target = [&](const SpinVec& v) { return scaled(big(v), alpha(l)); };
    if (!equal_ops(compose({big, small}), target, c.dim())) return false;
    if (!equal_ops(compose({small, big}), target, c.dim())) return false;
  }
  return true;
}

}  // namespace akm
