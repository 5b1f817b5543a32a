#pragma once

#include <optional>

#include "akm/spin.hpp"

namespace akm {

// Spectral coefficients of R(z,w) = a + b e with
// a = (qz - q^-1 w)/(qw - q^-1 z), b = (z - w)/(qw - q^-1 z).
struct RCoeffs {
  QField a;
  QField b;
};
RCoeffs r_coeffs(const Rational& z, const Rational& w);
RCoeffs r_coeffs(const QField& z, const QField& w);

// Constant subtracted in the rhombus operator L(m) = e - mu_{m-1}, so that
// L(1) = e and R(z/w = q^{-2m}) = mu_m L(m).
QField l_shift(int m);

LinOp l_op(const Chain& c, int g, int m);
// U_{m-1} L(m) = U_{m-1} e - U_{m-2}.
LinOp l_op_cleared(const Chain& c, int g, int m);
LinOp r_op(const Chain& c, int g, const Rational& z, const Rational& w);

SparseMat build_L(int i, int m, int k, int n);
SparseMat build_R(int i, const Rational& z, const Rational& w, int k, int n);
SparseMat build_Y(int m, int start, int k, int n);
SparseMat build_Yqsym(int k, int n);

// L_{i,i+1}(u-v) L_{i+1,i+2}(u) L_{i,i+1}(v) == L_{i+1,i+2}(v) L_{i,i+1}(u) L_{i+1,i+2}(u-v)
// on the three sites i, i+1, i+2 (cyclic for n >= 2).
bool check_yang_baxter(int u, int v, int i, int k, int n);
// R_i(z,w) R_i(w,z) == 1 on the two sites of e_i.
bool check_unitarity(const Rational& z, const Rational& w, int i, int k, int n);

// Delta_{k-1}^{n-1} mu_{k-1}^{-1} alpha_{k-1}^n, with Delta_m = mu_m - mu_{m-1}.
QField band_constant(int k, int n);
// c with Y (prod_{i=1}^{n} L_{ik}(k-1)) Y == c Y, where Y is Y_{k-1}(e_1..e_{k-1})
// for n = 1 and Y_qsym otherwise; nullopt if not proportional.
std::optional<QField> band_ratio(int k, int n);
bool cylindric_band_check(int k, int n);

// c with Y_m == c L_1(1) L_2(2) ... L_m(m) Y_{m-1} on the chain of m+1
// sites with m+1 letters; nullopt if not proportional.
std::optional<QField> y_factorization_constant(int m);
// prod_{l=1}^{m-2} alpha_l.
QField y_factorization_expected(int m);

// Y_m(e_1..e_m) Y_l(e_j..e_{j+l-1}) == alpha_l Y_m and the mirrored product,
// for every nested window, on m+1 sites with m+1 letters.
bool check_nested_symmetrizers(int m, int l);

// Ratio c with op == c * ref as linear maps on the first dim basis vectors.
std::optional<QField> op_ratio(const LinOp& op, const LinOp& ref, Index dim);

}  // namespace akm
