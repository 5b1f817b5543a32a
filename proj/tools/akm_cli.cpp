#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "akm/errors.hpp"
#include "akm/qkz.hpp"
#include "akm/rmatrix.hpp"
#include "akm/schur.hpp"
#include "akm/states.hpp"
#include "akm/tiling.hpp"

using namespace akm;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  int k = 2;
  int n = 1;
  unsigned seed = 1;
  std::string out = ".";
  std::string format = "text";
  Index max_dim = kDefaultMaxDim;
};

// Sorted keys come from nlohmann's std::map objects.
std::string canonical(const json& j) { return j.dump(2) + "\n"; }

void write_atomic(const fs::path& path, const std::string& body) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << body;
  }
  fs::rename(tmp, path);
}

class FileLock {
 public:
  explicit FileLock(const fs::path& p) : fd_(::open(p.c_str(), O_CREAT | O_RDWR, 0644)) {
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

std::string tag(const RunConfig& c) { return "k" + std::to_string(c.k) + "_n" + std::to_string(c.n); }

json dense_to_json(const DenseMat& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.to_json());
    rows.push_back(row);
  }
  return rows;
}

json relation_suite(const RunConfig& c, RelationSet which, bool& ok) {
  json items = json::array();
  for (const auto& r : verify_relations(c.k, c.n, which, c.max_dim)) {
    ok = ok && r.ok;
    items.push_back(r.to_json());
  }
  return items;
}

json scalars_suite(const RunConfig& c, bool& ok) {
  json items = json::array();
  auto add = [&](const std::string& name, bool pass) {
    ok = ok && pass;
    items.push_back({{"check", name}, {"ok", pass}});
  };
  QField t = tau();
  for (int m = 1; m <= 2 * c.k + 2; ++m)
    add("chebyshev_recurrence_" + std::to_string(m), chebyshev_u(m + 1) == t * chebyshev_u(m) - chebyshev_u(m - 1));
  for (int m = 1; m < c.k; ++m) add("mu_" + std::to_string(m), mu(m) == chebyshev_u(m - 1) / chebyshev_u(m));
  add("U_k_vanishes_at_rs_point", specialize_rs(chebyshev_u(c.k), c.k).is_zero());
  for (int m = 0; m < c.k; ++m)
    add("U_" + std::to_string(m) + "_nonzero_at_rs_point", !specialize_rs(chebyshev_u(m), c.k).is_zero());
  std::mt19937 rng(c.seed);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    QField a = QField::qpow(d(rng)) * QField(d(rng)) + QField(d(rng) == 0 ? 1 : 7);
    if (a.is_zero()) continue;
    add("inverse_" + std::to_string(trial), a * a.inverse() == QField(1));
  }
  return items;
}

json ybe_suite(const RunConfig& c, bool& ok) {
  int N = c.k * c.n;
  if (N > 8) throw ResourceError("ybe suite is bounded by nk <= 8");
  json items = json::array();
  int last = c.n == 1 ? N - 2 : N;
  for (int i = 1; i <= last; ++i)
    for (int u = 2; u <= c.k; ++u)
      for (int v = 1; v < u; ++v) {
        bool pass = check_yang_baxter(u, v, i, c.k, c.n);
        ok = ok && pass;
        items.push_back({{"check", "yang_baxter"}, {"i", i}, {"u", u}, {"v", v}, {"ok", pass}});
      }
  std::mt19937 rng(c.seed);
  std::uniform_int_distribution<int> d(1, 50);
  for (int trial = 0; trial < 20; ++trial) {
    Rational z(d(rng), d(rng)), w(d(rng), d(rng));
    int i = 1 + trial % (c.n == 1 ? N - 1 : N);
    bool pass = check_unitarity(z, w, i, c.k, c.n);
    ok = ok && pass;
    items.push_back({{"check", "unitarity"}, {"i", i}, {"z", z.get_str()}, {"w", w.get_str()}, {"ok", pass}});
  }
  return items;
}

json qsym_suite(const RunConfig& c, bool& ok) {
  json items = json::array();
  auto add = [&](json item, bool pass) {
    ok = ok && pass;
    item["ok"] = pass;
    items.push_back(item);
  };
  add({{"check", "band"}, {"constant", band_constant(c.k, c.n).to_json()}}, cylindric_band_check(c.k, c.n));
  for (int m = 2; m <= std::min(c.k, 3); ++m) {
    auto got = y_factorization_constant(m);
    add({{"check", "y_factorization"}, {"m", m}}, got && *got == y_factorization_expected(m));
  }
  QField brute = v0_norm_brute(c.k);
  add({{"check", "v0_norm"},
       {"brute", brute.to_json()},
       {"matches_first_form", brute == v0_norm_form_first(c.k)},
       {"matches_second_form", brute == v0_norm_form_second(c.k)}},
      brute == v0_norm_form_second(c.k));
  return items;
}

json states_suite(const RunConfig& c, bool& ok) {
  StateBasis b = state_basis(c.k, c.n, Gauge::sigma_orbit, c.max_dim);
  PropertyReport props = verify_state_properties(b);
  ok = ok && props.ok();
  json mats = json::object();
  for (int i = 1; i <= c.k * c.n; ++i) mats["e" + std::to_string(i)] = dense_to_json(e_matrix(b, i));
  mats["sigma"] = dense_to_json(sigma_matrix(b));
  json paths = json::array();
  for (const auto& p : b.paths) paths.push_back(path_string(p));
  return {{"basis", paths}, {"matrices", mats}, {"properties", props.to_json()}, {"states", state_basis_to_json(b)}};
}

json lemma_suite(const RunConfig& c, bool& ok) {
  QField brute = lemma_sum(c.k, c.n, LemmaMethod::brute);
  QField bij = lemma_sum(c.k, c.n, LemmaMethod::bijection);
  ok = ok && brute == bij;
  return {{"brute", brute.to_json()},
          {"bijection", bij.to_json()},
          {"methods_agree", brute == bij},
          {"matches_printed_closed_form", brute == lemma_closed_form_printed(c.k, c.n)},
          {"matches_shifted_closed_form", brute == lemma_closed_form_image(c.k, c.n)}};
}

int emit(const RunConfig& c, const fs::path& file, const json& report, bool ok) {
  write_atomic(file, canonical(report));
  if (c.format == "json")
    std::cout << canonical(report);
  else
    std::cout << (ok ? "pass " : "FAIL ") << file.string() << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& c, const std::string& suite) {
  bool ok = true;
  json body;
  if (suite == "scalars")
    body = scalars_suite(c, ok);
  else if (suite == "hecke")
    body = relation_suite(c, RelationSet::hecke, ok);
  else if (suite == "quotient")
    body = relation_suite(c, RelationSet::quotient, ok);
  else if (suite == "cylindric")
    body = relation_suite(c, RelationSet::cylindric, ok);
  else if (suite == "ybe")
    body = ybe_suite(c, ok);
  else if (suite == "qsym")
    body = qsym_suite(c, ok);
  else if (suite == "states")
    body = states_suite(c, ok);
  else if (suite == "appendixA") {
    AppendixReport r = verify_appendixA(c.k, c.n, c.max_dim);
    ok = r.ok_unit_label();
    body = r.to_json();
  } else if (suite == "lemma")
    body = lemma_suite(c, ok);
  else
    throw ArgumentError("unknown suite: " + suite);
  json report{{"suite", suite}, {"k", c.k}, {"n", c.n}, {"seed", c.seed}, {"ok", ok}, {"checks", body}};
  return emit(c, fs::path(c.out) / ("verify_" + suite + "_" + tag(c) + ".json"), report, ok);
}

json solve_json(const RunConfig& c, Gauge gauge, bool use_cache) {
  const char* dir = std::getenv("AKM_CACHE_DIR");
  fs::path cached;
  std::optional<FileLock> lock;
  if (use_cache && dir && *dir) {
    fs::create_directories(dir);
    std::string key = "qkz_" + tag(c) + (gauge == Gauge::word ? "_word" : "_sigma_orbit");
    cached = fs::path(dir) / (key + ".json");
    lock.emplace(fs::path(dir) / (key + ".lock"));
    if (fs::exists(cached)) {
      std::ifstream f(cached);
      return json::parse(f);
    }
  }
  QkzSolution s = solve_qkz(c.k, c.n, QkzMethod::propagation, gauge);
  std::vector<std::string> failures;
  if (!verify_qkz(s, &failures)) throw ModelError("q-KZ verification failed: " + failures.front());
  SumRuleReport rule = sum_rule(s, c.seed);
  json j = qkz_solution_to_json(s, covector(s), rule);
  j["verified"] = true;
  if (!cached.empty()) write_atomic(cached, canonical(j));
  return j;
}

int cmd_solve(const RunConfig& c, const std::string& gauge, bool no_cache) {
  if (c.k * c.n > 6) throw ResourceError("solve is bounded by nk <= 6");
  json j = solve_json(c, gauge == "word" ? Gauge::word : Gauge::sigma_orbit, !no_cache);
  return emit(c, fs::path(c.out) / ("qkz_" + tag(c) + ".json"), j, true);
}

int cmd_sumrule(const RunConfig& c) {
  if (c.k * c.n > 6) throw ResourceError("sumrule is bounded by nk <= 6");
  QkzSolution s = solve_qkz(c.k, c.n);
  SumRuleReport rule = sum_rule(s, c.seed);
  bool ok = rule.ok();
  auto lambda = covector_shift_eigenvalue(s, covector(s));
  json transfer = json::array();
  std::mt19937 rng(c.seed);
  std::uniform_int_distribution<int> d(1, 30);
  for (int p = 0; p < 3; ++p) {
    std::vector<Rational> zs;
    for (int i = 0; i < c.k * c.n; ++i) zs.push_back(Rational(d(rng), d(rng)));
    Rational t(d(rng), d(rng));
    bool pass = transfer_matrix_check(s, t, zs);
    ok = ok && pass;
    transfer.push_back({{"t", t.get_str()}, {"ok", pass}});
  }
  json report{{"k", c.k},
              {"n", c.n},
              {"sum_rule", rule.to_json()},
              {"shift_eigenvalue", lambda ? lambda->to_json() : json(nullptr)},
              {"transfer", transfer}};
  if (c.n >= 2) {
    QkzSolution small = solve_qkz(c.k, c.n - 1);
    json wheels = json::array();
    for (int m = 1; m + c.k - 1 <= c.k * c.n; ++m) {
      WheelReport w = wheel_recursion_check(s, small, m);
      ok = ok && w.ok;
      wheels.push_back(w.to_json());
    }
    report["wheel"] = wheels;
  }
  report["ok"] = ok;
  return emit(c, fs::path(c.out) / ("sumrule_" + tag(c) + ".json"), report, ok);
}

int cmd_tiling(const RunConfig& c, const std::string& path) {
  Path p = parse_path(path, c.k, c.n);
  Tiling t = build_tiling(p, c.k, c.n);
  std::string name = "tiling_" + tag(c) + "_" + path_string(p);
  fs::path svg = fs::path(c.out) / (name + ".svg");
  write_atomic(svg, emit_tiling_svg(t));
  json j = tiling_to_json(t);
  j["svg"] = svg.filename().string();
  return emit(c, fs::path(c.out) / (name + ".json"), j, true);
}

int cmd_paths(const RunConfig& c, bool restricted) {
  json list = json::array();
  for (const auto& p : enumerate_paths(c.k, c.n, restricted)) list.push_back(path_string(p));
  json j{{"k", c.k}, {"n", c.n}, {"restricted", restricted}, {"count", list.size()}, {"paths", list}};
  return emit(c, fs::path(c.out) / (std::string(restricted ? "restricted_" : "paths_") + tag(c) + ".json"), j,
              true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the A_k cylinder model and its q-KZ solutions"};
  app.require_subcommand(1);
  RunConfig c;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", c.k, "number of letters")->check(CLI::Range(2, 9));
    sub->add_option("--n", c.n, "letter multiplicity")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed for random rational points");
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-dim", c.max_dim, "bound on the spin space dimension k^(nk)");
  };
  std::string suite, path, gauge = "sigma_orbit";
  bool no_cache = false, restricted = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"scalars", "hecke", "quotient", "cylindric", "ybe", "qsym", "states", "appendixA", "lemma"}));
  common(verify);
  auto* solve = app.add_subcommand("solve", "solve the q-KZ system at the RS point");
  solve->add_option("--gauge", gauge, "state normalization")->check(CLI::IsMember({"word", "sigma_orbit"}));
  solve->add_flag("--no-cache", no_cache, "ignore AKM_CACHE_DIR");
  common(solve);
  auto* tiling = app.add_subcommand("tiling", "draw the tiling of a path");
  tiling->add_option("--path", path, "path, e.g. 321 or 3,2,1")->required();
  common(tiling);
  auto* sumrule = app.add_subcommand("sumrule", "check the sum rule, transfer matrix and wheel recursion");
  common(sumrule);
  auto* paths = app.add_subcommand("paths", "list unrestricted paths");
  paths->add_flag("--restricted", restricted, "list restricted paths instead");
  common(paths);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    if (*verify) return cmd_verify(c, suite);
    if (*solve) return cmd_solve(c, gauge, no_cache);
    if (*tiling) return cmd_tiling(c, path);
    if (*sumrule) return cmd_sumrule(c);
    if (*paths) return cmd_paths(c, restricted);
  } catch (const ResourceError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
