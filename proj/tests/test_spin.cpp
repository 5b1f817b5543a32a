#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "akm/errors.hpp"
#include "akm/spin.hpp"

using namespace akm;

namespace {

QField qp(int e) { return QField::qpow(e); }

// A ⊗ B for square matrices on spaces of dimensions da, db.
SparseMat kron(const SparseMat& a, const SparseMat& b) {
  Index db = b.dim();
  SparseMat r(a.dim() * db);
  for (const auto& [ca, va] : a.cols())
    for (const auto& [cb, vb] : b.cols())
      for (const auto& [ra, xa] : va)
        for (const auto& [rb, xb] : vb) r.set(ra * db + rb, ca * db + cb, xa * xb);
  return r;
}

int inversions(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) c += w[a] > w[b];
  return c;
}

// sum over S_k of q^{-2 inv} as prod_i (1 + q^-2 + ... + q^{-2(i-1)}).
QField mahonian(int k) {
  QField r(1);
  for (int i = 1; i <= k; ++i) {
    QField s;
    for (int j = 0; j < i; ++j) s += qp(-2 * j);
    r *= s;
  }
  return r;
}

}  // namespace

TEST(SpinSpace, EncodeDecodeRoundTrip) {
  SpinSpace sp{3, 4};
  EXPECT_EQ(sp.dim(), 81u);
  for (Index c = 0; c < sp.dim(); ++c) EXPECT_EQ(sp.encode(sp.decode(c)), c);
  EXPECT_EQ(sp.encode({1, 1, 1, 2}), 1u);
  EXPECT_EQ(sp.encode({2, 1, 1, 1}), 27u);
  EXPECT_EQ(sp.letter(27, 0), 1);
  EXPECT_THROW(sp.encode({0, 1, 1, 1}), ArgumentError);
}

TEST(LocalE, ActionOnBasis) {
  SparseMat e = local_e(2);
  EXPECT_TRUE(e.col(0).empty());
  SpinVec expect{{1, -qp(1)}, {2, QField(1)}};
  EXPECT_EQ(e.col(1), expect);
  SparseMat e3 = local_e(3);
  EXPECT_EQ(e3 * e3, e3.scaled(tau()));
}

TEST(LocalE, AffineMatrixAndTwist) {
  SparseMat a = local_e_affine(2);
  EXPECT_EQ(a.get(1, 1), -qp(1));
  EXPECT_EQ(a.get(1, 2), qp(2));
  EXPECT_EQ(a.get(2, 1), qp(-2));
  EXPECT_EQ(a.get(2, 2), -qp(-1));
  EXPECT_EQ(a.nnz(), 4u);
  for (int k = 2; k <= 4; ++k) {
    SparseMat om = local_twist(k), e = local_e(k), ea = local_e_affine(k);
    SparseMat om_inv(om.dim());
    for (const auto& [c, v] : om.cols()) om_inv.set(c, c, v.at(c).inverse());
    EXPECT_EQ(ea, om * e * om_inv) << k;
    EXPECT_EQ(ea * ea, ea.scaled(tau())) << k;
  }
}

TEST(LocalE, AffineBraidOnThreeSites) {
  for (int k = 2; k <= 3; ++k) {
    SparseMat id = SparseMat::identity(k);
    SparseMat e12 = kron(local_e(k), id), e23 = kron(id, local_e(k));
    SparseMat a12 = kron(local_e_affine(k), id), a23 = kron(id, local_e_affine(k));
    EXPECT_EQ(a12 * e23 * a12 - a12, e23 * a12 * e23 - e23) << k;
    EXPECT_EQ(e12 * a23 * e12 - e12, a23 * e12 * a23 - a23) << k;
  }
}

TEST(Generators, LastGeneratorIsShiftConjugate) {
  for (auto [k, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    int N = n * k;
    SparseMat tail = local_e_affine(k);
    for (int s = 0; s < N - 2; ++s) tail = kron(SparseMat::identity(k), tail);
    SparseMat rho = build_rho(k, n);
    EXPECT_EQ(build_generator(N, k, n), rho.transpose() * tail * rho) << k << n;
  }
  EXPECT_THROW(build_generator(0, 2, 1), ArgumentError);
  EXPECT_THROW(build_generator(3, 2, 1), ArgumentError);
}

TEST(Generators, FarGeneratorsCommute) {
  SparseMat e1 = build_generator(1, 2, 2), e3 = build_generator(3, 2, 2);
  EXPECT_EQ(e1 * e3, e3 * e1);
}

TEST(Generators, EntriesAreLaurentMonomials) {
  for (int i = 1; i <= 6; ++i) {
    SparseMat e = build_generator(i, 3, 2);
    for (const auto& [c, v] : e.cols())
      for (const auto& [r, x] : v) {
        ASSERT_TRUE(x.is_laurent());
        EXPECT_EQ(x.num().low(), x.num().high());
      }
  }
}

TEST(Sigma, ConjugatesGeneratorsDownward) {
  for (auto [k, n] : {std::pair{2, 2}, {3, 1}, {2, 3}, {4, 1}}) {
    int N = n * k;
    SparseMat s = build_sigma(k, n), si = build_sigma_inverse(k, n);
    EXPECT_EQ(s * si, SparseMat::identity(s.dim()));
    for (int i = 1; i <= N; ++i) {
      int prev = i == 1 ? N : i - 1;
      EXPECT_EQ(s * build_generator(i, k, n) * si, build_generator(prev, k, n)) << k << n << i;
    }
    for (const auto& [c, v] : s.cols()) EXPECT_EQ(v.size(), 1u);
  }
}

TEST(Sigma, PowerNIsIdentityOnBalancedSector) {
  for (auto [k, n] : {std::pair{2, 2}, {3, 1}, {2, 1}, {3, 2}}) {
    int N = n * k;
    SparseMat s = build_sigma(k, n), p = SparseMat::identity(s.dim());
    for (int j = 0; j < N; ++j) p = s * p;
    for (Index c : balanced_sector(k, n)) EXPECT_EQ(p.col(c), (SpinVec{{c, QField(1)}}));
    // off the sector sigma^N is diagonal but not the identity
    EXPECT_EQ(p.get(0, 0), qp(N * (k - 1)));
  }
}

TEST(SignedLength, IndependentOfDecomposition) {
  std::mt19937 rng(3);
  for (int k = 3; k <= 4; ++k) {
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 1);
    do {
      std::vector<int> got;
      EXPECT_EQ(signed_length(k, bubble_decomposition(w), &got), -inversions(w));
      EXPECT_EQ(got, w);
      // pad a reduced word with a random cancelling pair to get a non-reduced one
      for (int t = 0; t < 5; ++t) {
        auto seq = bubble_decomposition(w);
        int p = std::uniform_int_distribution<int>(1, k - 1)(rng);
        auto at = seq.begin() + std::uniform_int_distribution<int>(0, seq.size())(rng);
        at = seq.insert(at, p);
        seq.insert(at, p);
        EXPECT_EQ(signed_length(k, seq, &got), -inversions(w));
        EXPECT_EQ(got, w);
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST(V0, SmallCase) {
  SpinVec v = v0(2, 1);
  SpinVec expect{{1, QField(1)}, {2, (-QField::q()).inverse()}};
  EXPECT_EQ(v, expect);
}

TEST(V0, SimultaneousEigenvector) {
  for (auto [k, n] : {std::pair{2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}}) {
    Chain c = Chain::full(k, n);
    SpinVec v = v0(k, n);
    for (int b = 0; b < n; ++b) {
      for (int j = 1; j < k; ++j) EXPECT_EQ(c.apply_e(b * k + j, v), scaled(v, tau())) << k << n << j;
      EXPECT_EQ(c.Y(k - 1, b * k + 1)(v), scaled(v, alpha(k - 1)));
    }
  }
}

TEST(V0, NormMatchesSecondClosedForm) {
  for (int k = 2; k <= 5; ++k) {
    QField brute = v0_norm_brute(k);
    EXPECT_EQ(brute, mahonian(k)) << k;
    EXPECT_EQ(brute, v0_norm_form_second(k)) << k;
    EXPECT_FALSE(brute == v0_norm_form_first(k)) << k;
  }
}

TEST(V0, SymmetrizerIsRankOneProjectorOntoV0) {
  for (int k = 2; k <= 4; ++k) {
    Chain c = Chain::full(k, 1);
    SparseMat y = c.materialize(c.Y(k - 1, 1));
    SpinVec v = v0(k, 1);
    QField s = alpha(k - 1) / v0_norm_brute(k);
    SparseMat outer(y.dim());
    for (const auto& [i, x] : v)
      for (const auto& [j, z] : v) outer.set(i, j, s * x * z);
    EXPECT_EQ(y, outer) << k;
    EXPECT_EQ(y * y, y.scaled(alpha(k - 1))) << k;
    std::vector<SpinVec> cols;
    for (const auto& [col, vec] : y.cols()) cols.push_back(vec);
    EXPECT_EQ(rank(cols), 1) << k;
  }
}

TEST(Relations, SmallInstancesPass) {
  for (auto [k, n] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    for (auto which : {RelationSet::hecke, RelationSet::quotient, RelationSet::cylindric}) {
      auto reports = verify_relations(k, n, which);
      EXPECT_FALSE(reports.empty());
      for (const auto& r : reports) EXPECT_TRUE(r.ok) << k << n << " " << r.to_json().dump();
    }
  }
}

TEST(Relations, QuotientWindowsForSingleBlock) {
  auto reports = verify_relations(2, 1, RelationSet::quotient);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].relation, "Y_k_full_nonzero");
  EXPECT_TRUE(reports[0].ok);
}

TEST(Relations, PrintedCylindricCoefficientFails) {
  // With e_{ik} - mu_{k-1} in place of e_{ik} - mu_{k-2} the identity breaks.
  Chain c = Chain::full(2, 2);
  LinOp y = c.Yqsym();
  LinOp good = compose({y, c.shifted(2, mu(0)), c.shifted(4, tau()), y});
  LinOp printed = compose({y, c.shifted(2, mu(1)), c.shifted(4, tau()), y});
  EXPECT_TRUE(is_zero_op(good, c.dim()));
  std::optional<Entry<QField>> w;
  EXPECT_FALSE(is_zero_op(printed, c.dim(), &w));
  EXPECT_TRUE(w.has_value());
}

TEST(Relations, ReportJson) {
  RelationReport r{"braid", 2, false, Entry<QField>{1, 3, QField(2)}};
  auto j = r.to_json();
  EXPECT_EQ(j["relation"], "braid");
  EXPECT_EQ(j["window"], 2);
  EXPECT_EQ(j["counterexample"]["col"], 3);
}

TEST(Relations, ResourceBound) {
  EXPECT_THROW(verify_relations(3, 3, RelationSet::hecke), ResourceError);
  EXPECT_THROW(verify_relations(4, 2, RelationSet::hecke, 4096), ResourceError);
}
