#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "akm/qkz.hpp"
#include "akm/rmatrix.hpp"
#include "akm/schur.hpp"
#include "akm/states.hpp"

using namespace akm;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

DenseMat rows(std::initializer_list<std::vector<QField>> r) { return DenseMat(r); }
std::vector<QField> zero6() { return std::vector<QField>(6); }

Outcome golden_three_one() {
  StateBasis b = state_basis(3, 1, Gauge::sigma_orbit);
  QField t = tau(), s = tau() * tau() - QField(1), o(1), z;
  DenseMat e1 = rows({zero6(), zero6(), {s, z, t, z, o, z}, {z, o, z, t, z, z}, zero6(), {o, z, z, z, s, t}});
  DenseMat e2 = rows({zero6(), {s, t, z, o, z, z}, zero6(), zero6(), {z, z, o, z, t, z}, {o, z, z, s, z, t}});
  DenseMat e3 = rows({{t, z, z, z, z, o}, {z, t, z, o, s, z}, {z, z, t, s, o, z}, zero6(), zero6(), zero6()});
  DenseMat sg = rows({{z, z, z, o, z, z},
                      {z, z, o, z, z, z},
                      {z, z, z, z, z, o},
                      {z, z, z, z, o, z},
                      {o, z, z, z, z, z},
                      {z, o, z, z, z, z}});
  Outcome r;
  r.pass = b.paths == basis_order(3, 1) && e_matrix(b, 1) == e1 && e_matrix(b, 2) == e2 && e_matrix(b, 3) == e3 &&
           sigma_matrix(b) == sg;
  r.note = "e1, e2, e3, sigma in the displayed order";
  return r;
}

Outcome golden_two_two() {
  StateBasis b = state_basis(2, 2, Gauge::word);
  QField t = tau(), o(1), z, ti = tau().inverse();
  DenseMat e1 = rows({{t, o, z, z, t * t, o}, zero6(), zero6(), {z, z, o, t, z, z}, zero6(), zero6()});
  DenseMat e2 = rows({zero6(), {o, t, z, z, z, z}, {z, z, t, o, o, o}, zero6(), zero6(), zero6()});
  DenseMat shown = rows({{z, z, t, z, z, z},
                         {z, z, z, t, z, z},
                         {ti, z, z, z, z, z},
                         {z, z, z, z, z, ti},
                         {z, ti, z, z, z, z},
                         {z, z, z, z, t, z}});
  Outcome r;
  auto inv = mat_inverse(sigma_matrix(b));
  auto shown_inv = mat_inverse(shown);
  if (!inv || !shown_inv) return {false, "shift matrix not invertible"};
  DenseMat e3 = e_matrix(b, 3), e4 = e_matrix(b, 4), e13 = mat_mul(e_matrix(b, 1), e3);
  bool e12 = b.paths == basis_order(2, 2) && e_matrix(b, 1) == e1 && e_matrix(b, 2) == e2;
  bool shift = mat_scaled(*inv, QField(-1)) == shown;
  bool conj = mat_mul(mat_mul(shown, e_matrix(b, 2)), *shown_inv) == e3 && mat_mul(mat_mul(shown, e3), *shown_inv) == e4;
  bool cyl = mat_mul(mat_mul(mat_mul(e13, e_matrix(b, 2)), e4), e13) == mat_scaled(e13, t * t);
  r.pass = e12 && shift && conj && cyl;
  r.note = "e1, e2 exact; displayed shift = -sigma^{-1}; e3, e4 by conjugation; e1e3e2e4e1e3 = tau^2 e1e3";
  return r;
}

Outcome relation_suite() {
  Outcome r;
  int checked = 0;
  for (auto [k, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}})
    for (auto which : {RelationSet::hecke, RelationSet::quotient, RelationSet::cylindric})
      for (const auto& rep : verify_relations(k, n, which)) {
        ++checked;
        if (!rep.ok) {
          r.pass = false;
          r.note += " failed " + rep.relation + " at (" + std::to_string(k) + "," + std::to_string(n) + ")";
        }
      }
  if (r.pass) r.note = std::to_string(checked) + " relation checks";
  return r;
}

Outcome lemma_oracle() {
  Outcome r;
  bool methods = true, printed = true, shifted = true;
  for (int k = 2; k <= 6; ++k)
    for (int n = 1; n <= 3; ++n) {
      QField brute = lemma_sum(k, n, LemmaMethod::brute);
      methods = methods && lemma_sum(k, n, LemmaMethod::bijection) == brute;
      printed = printed && brute == lemma_closed_form_printed(k, n);
      shifted = shifted && brute == lemma_closed_form_image(k, n);
    }
  std::vector<int> i1{1, 2, 3, 7, 4, 2}, i2{7, 2, 3, 4, 2, 1}, i3{2, 1, 5, 3, 1, 4, 2, 5};
  bool rows = lemma_exponent_sequence(i1) == 4 && lemma_exponent_image(lemma_eta(i1)) == 4 &&
              lemma_exponent_sequence(i2) == -8 && lemma_exponent_image(lemma_eta(i2)) == -8 &&
              lemma_exponent_sequence(i3) == 4 && lemma_exponent_image(lemma_eta(i3)) == 4;
  r.pass = methods && printed && rows;
  std::ostringstream os;
  os << "bijection = brute: " << (methods ? "yes" : "no") << "; table rows: " << (rows ? "yes" : "no")
     << "; = (U'_{k-1})^{2n} + (k-1): " << (printed ? "yes" : "no")
     << "; = (U'_{k-2})^{2n} + (k-1): " << (shifted ? "yes" : "no");
  if (!printed) os << ". Blocked: at k = 2, n = 1 the sum is 2 but the stated form is not; see decisions ledger";
  r.note = os.str();
  return r;
}

Outcome yang_baxter() {
  Outcome r;
  int ybe = 0, unit = 0;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(1, 60);
  for (int k = 2; k <= 8; ++k)
    for (int n = 1; n * k <= 8; ++n) {
      int N = n * k;
      if (N < 3) continue;
      int last = n == 1 ? N - 2 : N;
      for (int i = 1; i <= last; ++i)
        for (int u = 2; u <= k; ++u)
          for (int v = 1; v < u; ++v) {
            ++ybe;
            if (!check_yang_baxter(u, v, i, k, n)) {
              r.pass = false;
              r.note += " YBE fails (k,n,i,u,v)=(" + std::to_string(k) + "," + std::to_string(n) + "," +
                        std::to_string(i) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
            }
          }
      for (int p = 0; p < 20; ++p) {
        Rational z(d(rng), d(rng)), w(d(rng), d(rng));
        ++unit;
        if (!check_unitarity(z, w, 1 + p % (n == 1 ? N - 1 : N), k, n)) r.pass = false;
      }
    }
  if (r.pass) r.note = std::to_string(ybe) + " YBE windows, " + std::to_string(unit) + " unitarity points";
  return r;
}

Outcome principal() {
  Outcome r;
  for (int k = 2; k <= 6; ++k) r.pass = r.pass && check_principal_specialization(k);
  r.note = "k = 2..6 in Q(zeta_m)";
  return r;
}

Outcome schur_recursion() {
  Outcome r;
  std::ostringstream os;
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    SchurRecursionReport rep = check_schur_recursion(k, n);
    r.pass = r.pass && rep.ok();
    os << "(" << k << "," << n << ") per-l " << (rep.per_l_ok() ? "ok" : "FAIL") << ", printed product "
       << (rep.product_printed ? "ok" : "FAIL") << ", derived product " << (rep.product_derived ? "ok" : "FAIL")
       << "; ";
  }
  if (!r.pass)
    os << "Blocked: the product of the per-l prefactors is (-1)^{k(k-1)/2} q^{-k(k-1)}, not (-1)^{k(k+1)/2} q^2; "
          "see decisions ledger";
  r.note = os.str();
  return r;
}

Outcome qkz() {
  Outcome r;
  std::ostringstream os;
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(1, 40);
  std::map<std::pair<int, int>, QkzSolution> sols;
  for (auto [k, n] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    QkzSolution s = solve_qkz(k, n);
    std::vector<std::string> failures;
    bool eqs = verify_qkz(s, &failures);
    int transfer = 0;
    for (int p = 0; p < 3; ++p) {
      std::vector<Rational> zs;
      for (int i = 0; i < k * n; ++i) zs.push_back(Rational(d(rng), d(rng)));
      if (transfer_matrix_check(s, Rational(d(rng), d(rng)), zs)) ++transfer;
    }
    SumRuleReport rule = sum_rule(s, 7, 5);
    bool sum = rule.ok() && rule.points_checked >= 5;
    r.pass = r.pass && eqs && transfer == 3 && sum;
    os << "(" << k << "," << n << ") equations " << (eqs ? "ok" : "FAIL") << ", transfer " << transfer << "/3, sum rule "
       << (sum ? "ok" : "FAIL") << "; ";
    sols.emplace(std::pair{k, n}, std::move(s));
  }
  bool wheel = true;
  for (int m = 1; m <= 3; ++m) wheel = wheel && wheel_recursion_check(sols.at({2, 2}), sols.at({2, 1}), m).ok;
  r.pass = r.pass && wheel;
  os << "wheel (2,2)->(2,1) " << (wheel ? "ok" : "FAIL") << " (z_{m+j} = q^{2j} z, see ledger)";
  r.note = os.str();
  return r;
}

Outcome tiling_properties() {
  Outcome r;
  std::ostringstream os;
  for (auto [k, n] : {std::pair{2, 2}, {3, 1}, {3, 2}}) {
    StateBasis b = state_basis(k, n);
    PropertyReport p = verify_state_properties(b);
    bool dim = b.paths.size() == enumerate_paths(k, n, false).size();
    r.pass = r.pass && p.ok() && dim;
    os << "(" << k << "," << n << ") " << b.paths.size() << " states " << (p.ok() && dim ? "ok" : "FAIL") << "; ";
  }
  r.note = os.str();
  return r;
}

Outcome v0_norm() {
  Outcome r;
  std::ostringstream os;
  for (int k = 2; k <= 5; ++k) {
    QField brute = v0_norm_brute(k);
    bool first = brute == v0_norm_form_first(k), second = brute == v0_norm_form_second(k);
    os << "k=" << k << " first form " << (first ? "=" : "!=") << ", second form " << (second ? "=" : "!=") << "; ";
    r.pass = r.pass && second;
  }
  for (int k = 2; k <= 4; ++k) {
    Chain c = Chain::full(k, 1);
    SparseMat y = c.materialize(c.Y(k - 1, 1));
    SpinVec v = v0(k, 1);
    QField s = alpha(k - 1) / v0_norm_brute(k);
    SparseMat outer(y.dim());
    for (const auto& [i, x] : v)
      for (const auto& [j, z] : v) outer.set(i, j, s * x * z);
    bool ok = y == outer;
    r.pass = r.pass && ok;
    os << "Y_{k-1} = alpha/A |v0><v0| at k=" << k << (ok ? " ok" : " FAIL") << "; ";
  }
  r.note = os.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_red;
  bool expect_given = false;
  for (int a = 1; a + 1 < argc; ++a)
    if (std::string(argv[a]) == "--expect-red") {
      expect_given = true;
      std::stringstream ss(argv[a + 1]);
      std::string tok;
      while (std::getline(ss, tok, ',')) expect_red.insert(std::stoi(tok));
    }
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria{
      {"golden matrices (3,1)", golden_three_one, 10},
      {"golden matrices (2,2)", golden_two_two, 10},
      {"relation suite", relation_suite, 300},
      {"lemma oracle", lemma_oracle, 60},
      {"Yang-Baxter and unitarity", yang_baxter, 120},
      {"principal specialization", principal, 10},
      {"Schur recursion", schur_recursion, 120},
      {"q-KZ solution, transfer matrix, sum rule, wheel", qkz, 600},
      {"tiling state properties", tiling_properties, 300},
      {"<v0|v0> and the rank-one symmetrizer", v0_norm, 10},
  };
  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[i].limit_s) {
      o.pass = false;
      o.note += " over the " + std::to_string(static_cast<int>(criteria[i].limit_s)) + " s budget";
    }
    if (!o.pass) red.insert(static_cast<int>(i + 1));
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": " << criteria[i].name << " ("
              << secs << " s) " << o.note << "\n";
  }
  std::cout << criteria.size() - red.size() << "/" << criteria.size() << " criteria pass\n";
  if (expect_given) return red == expect_red ? 0 : 1;
  return red.empty() ? 0 : 1;
}
