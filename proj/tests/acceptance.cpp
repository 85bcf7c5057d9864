// Acceptance suite: one PASS/FAIL line per criterion.
//
//   jhess_acceptance            run all criteria
//   jhess_acceptance --only 5   run one criterion
//
// Exit status is 0 iff every selected criterion passed.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "jhess/experiments.hpp"
#include "jhess/matrix_io.hpp"
#include "jhess/reduction.hpp"
#include "jhess/symplectic.hpp"
#include "jhess/transforms.hpp"
#include "oracles.hpp"

using namespace jhess;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages and the worst observed ratio.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) msgs_ += (msgs_.empty() ? "" : "; ") + what;
  }
  void observe(double ratio) { worst_ = std::max(worst_, ratio); }
  Outcome done(const std::string& extra = "") const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failed";
    if (worst_ > 0) s << ", worst error/bound " << worst_;
    if (!extra.empty()) s << ", " << extra;
    if (!msgs_.empty()) s << " [" << msgs_ << "]";
    return {failures_ == 0, s.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  double worst_ = 0;
  std::string msgs_;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double rel_check(Tally& t, double err, double bound, const std::string& what) {
  const double ratio = bound > 0 ? err / bound : (err == 0 ? 0 : INFINITY);
  t.observe(ratio);
  t.check(err <= bound, what + " err=" + fmt("%.3e", err) + " bound=" + fmt("%.3e", bound));
  return ratio;
}

Vector unit(Index len, Index i) {
  Vector e(static_cast<std::size_t>(len), 0.0);
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

// ---------------------------------------------------------------- criterion 1
Outcome transform_postconditions() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> scale(0.5, 1.5);
  std::bernoulli_distribution coin(0.5);
  Tally t;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = 1 + trial % 6;
    const Index len = 2 * n;
    const Vector a = oracle::random_vector(rng, len);
    const double na = oracle::vec_norm(a);
    const double tol = 1e-12 * na;
    const std::string tag = " trial " + std::to_string(trial);

    const double rho = (coin(rng) ? 1 : -1) * scale(rng) * na;
    Vector target = unit(len, 0);
    target[0] = rho;
    rel_check(t, oracle::vec_dist(jhess::apply(sh1(a, rho), a), target), tol, "sh1" + tag);

    const FreeParams p = optimal_params(a);
    target[0] = p.rho;
    rel_check(t, oracle::vec_dist(jhess::apply(osh1(a), a), target), tol, "osh1" + tag);

    const double mu = std::uniform_real_distribution<double>(-2, 2)(rng);
    Vector t2 = Vector(static_cast<std::size_t>(len), 0.0);
    if (n == 1) {
      t2 = a;  // identity by definition
    } else {
      t2[0] = mu;
      t2[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(n)];
    }
    const TransformSH s2 = sh2(a, mu);
    rel_check(t, oracle::vec_dist(jhess::apply(s2, a), t2), tol, "sh2" + tag);
    rel_check(t, oracle::vec_dist(jhess::apply(s2, unit(len, 0)), unit(len, 0)), 1e-12, "sh2 e1" + tag);

    Vector t3 = Vector(static_cast<std::size_t>(len), 0.0);
    if (n == 1) {
      t3 = a;
    } else {
      t3[0] = p.mu;
      t3[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(n)];
    }
    const TransformSH o2 = osh2(a);
    rel_check(t, oracle::vec_dist(jhess::apply(o2, a), t3), tol, "osh2" + tag);
    rel_check(t, oracle::vec_dist(jhess::apply(o2, unit(len, 0)), unit(len, 0)), 1e-12, "osh2 e1" + tag);

    const Vector y = oracle::random_vector(rng, len);
    rel_check(t, oracle::vec_dist(jhess::apply(general_mapping(a, y), a), y), 1e-12 * std::max(na, oracle::vec_norm(y)),
              "general_mapping" + tag);

    const Index k = trial % n;
    const auto ks = static_cast<std::size_t>(k);
    const auto ns = static_cast<std::size_t>(n);
    Vector tg = a;
    tg[ks] = std::hypot(a[ks], a[ns + ks]);
    tg[ns + ks] = 0.0;
    rel_check(t, oracle::vec_dist(jhess::apply(vlg(k, a), a), tg), tol, "vlg" + tag);

    const Vector h = jhess::apply(vlh(k, a), a);
    double upper_tail = 0.0;
    double seg = 0.0;
    for (std::size_t i = ks; i < ns; ++i) seg = std::hypot(seg, a[i]);
    for (std::size_t i = ks + 1; i < ns; ++i) upper_tail = std::hypot(upper_tail, h[i]);
    rel_check(t, upper_tail + std::abs(std::abs(h[ks]) - seg), tol, "vlh" + tag);
  }
  return t.done();
}

// ---------------------------------------------------------------- criterion 2
Outcome embedding() {
  std::mt19937_64 rng(2002);
  Tally t;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 2 + trial % 6;
    const Index offset = trial % n;
    const Index m = n - offset;
    const Vector a = oracle::random_vector(rng, 2 * m);
    const TransformSH small = trial % 2 ? osh2(a) : osh1(a);
    const TransformSH big = embed(small, offset, Dim(n));
    const Vector x = oracle::random_vector(rng, 2 * n);
    Vector sub;
    for (Index i = offset; i < n; ++i) sub.push_back(x[static_cast<std::size_t>(i)]);
    for (Index i = n + offset; i < 2 * n; ++i) sub.push_back(x[static_cast<std::size_t>(i)]);

    for (bool adj : {false, true}) {
      const Vector full = adj ? apply_adjoint(big, x) : jhess::apply(big, x);
      const Vector part = adj ? apply_adjoint(small, sub) : jhess::apply(small, sub);
      Vector want = x;
      for (Index i = 0; i < m; ++i) {
        want[static_cast<std::size_t>(offset + i)] = part[static_cast<std::size_t>(i)];
        want[static_cast<std::size_t>(n + offset + i)] = part[static_cast<std::size_t>(m + i)];
      }
      rel_check(t, oracle::vec_dist(full, want), 1e-15 * oracle::vec_norm(want),
                std::string(adj ? "T^J" : "T") + " trial " + std::to_string(trial));
    }
  }
  return t.done();
}

// ---------------------------------------------------------------- criterion 3
Outcome optimality() {
  std::mt19937_64 rng(3003);
  std::uniform_real_distribution<double> scale(0.1, 3.0);
  std::bernoulli_distribution coin(0.5);
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + trial % 5;
    const Vector a = oracle::random_vector(rng, 2 * n);
    const double na = oracle::vec_norm(a);
    const double c1 = cond2(osh1(a), Dim(n));
    const double c2 = cond2(osh2(a), Dim(n));
    for (int r = 0; r < 10; ++r) {
      const double rho = (coin(rng) ? 1 : -1) * scale(rng) * na;
      const double mu = a[0] + (coin(rng) ? 1 : -1) * scale(rng) * na;
      const double s1 = cond2(sh1(a, rho), Dim(n));
      const double s2 = cond2(sh2(a, mu), Dim(n));
      t.check(c1 <= s1 + 1e-9, "osh1 " + fmt("%.6g", c1) + " > sh1 " + fmt("%.6g", s1));
      t.check(c2 <= s2 + 1e-9, "osh2 " + fmt("%.6g", c2) + " > sh2 " + fmt("%.6g", s2));
    }
  }
  return t.done();
}

// ---------------------------------------------------------------- criterion 4
Outcome symplectic_properties() {
  std::mt19937_64 rng(4004);
  Tally t;
  double min_bad_cond = INFINITY;
  int bad_well_conditioned = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 4;
    const Vector a = oracle::random_vector(rng, 2 * n);
    const Vector y = oracle::random_vector(rng, 2 * n);
    const std::vector<TransformSH> shs = {sh1(a, 1.25), osh1(a), sh2(a, 0.3), osh2(a), general_mapping(a, y)};
    for (const TransformSH& s : shs) {
      const DenseMatrix d = densify(s, Dim(n));
      const double res = oracle::norm2(oracle::minus_identity(oracle::matmul(oracle::adjoint(d), d)));
      const double det_err = std::abs(oracle::laplace_det(d) - 1.0);
      rel_check(t, res, 1e-11, "symplecticity");
      rel_check(t, det_err, 1e-10, "determinant");
      if (res > 1e-11 || det_err > 1e-10) {
        const double k = cond2(s, Dim(n));
        min_bad_cond = std::min(min_bad_cond, k);
        if (k <= 1e4) ++bad_well_conditioned;
      }
    }
    const Index k = trial % n;
    for (const SymplecticTransform& o :
         {SymplecticTransform(vlg(k, a)), SymplecticTransform(vlh(k, a)), SymplecticTransform(vlh_lower(k, a))}) {
      const DenseMatrix d = densify(o, Dim(n));
      rel_check(t, oracle::norm2(oracle::minus_identity(oracle::matmul(oracle::transpose(d), d))), 1e-13,
                "orthogonality");
    }
  }
  if (std::isinf(min_bad_cond)) return t.done();
  return t.done("failing transforms have cond2 >= " + fmt("%.2e", min_bad_cond) + ", " +
                std::to_string(bad_well_conditioned) + " failures with cond2 <= 1e4");
}

// ------------------------------------------------------------ criteria 5 and 6
Outcome family_table(int family, Index n_max, Index tight_n, double tight, double loose, double seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_sweep(family, 2, n_max, {Variant::JHMSH, Variant::JHMSH2});
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Tally t;
  for (const SweepRow& r : rows) {
    const std::string tag = std::string(to_string(r.variant)) + " n=" + std::to_string(r.n);
    t.check(r.status == RowStatus::Ok, tag + " breakdown");
    if (r.status != RowStatus::Ok) continue;
    const double bound = r.n <= tight_n ? tight : loose;
    rel_check(t, r.orth_loss, bound, tag + " orth_loss");
    rel_check(t, r.red_err, bound, tag + " red_err");
  }
  t.check(elapsed < seconds, "runtime " + fmt("%.2f s", elapsed));
  return t.done("runtime " + fmt("%.2f s", elapsed));
}

// ---------------------------------------------------------------- criterion 7
Outcome breakdowns() {
  ReductionOptions off;
  off.breakdown_fallback = false;
  Tally t;
  for (int family : {1, 2})
    for (Index n = 2; n <= (family == 1 ? 30 : 20); ++n)
      for (Variant v : {Variant::JHSH, Variant::JHOSH}) {
        const std::string tag = "family " + std::to_string(family) + " n=" + std::to_string(n) + " " + to_string(v);
        try {
          reduce(gen_family(family, n), v, off);
          t.check(false, tag + " completed");
        } catch (const BreakdownError& e) {
          t.check(e.step() == 1 && e.kind() == BreakdownKind::ZeroNu,
                  tag + " step=" + std::to_string(e.step()) + " kind=" + to_string(e.kind()));
        }
      }
  return t.done();
}

// ---------------------------------------------------------------- criterion 8
Outcome factorization_oracle() {
  std::mt19937_64 rng(8008);
  Tally t;
  ReductionOptions opts;
  opts.breakdown_fallback = false;
  const std::vector<Variant> variants = {Variant::JHSH, Variant::JHOSH, Variant::JHMSH, Variant::JHMSH2};
  std::vector<int> failed_runs(variants.size(), 0);
  double min_bad_cond = INFINITY;
  int accepted = 0;
  int rejected = 0;
  while (accepted < 100) {
    const Index n = accepted < 50 ? 3 : 4;
    const DenseMatrix a = oracle::random_matrix(rng, 2 * n, 2 * n);
    const double norm_a = oracle::norm2(a);
    std::vector<ReductionResult> results;
    bool ok = true;
    for (Variant v : variants) {
      ReductionOptions o = opts;
      if (v == Variant::JHSH) o.strategy = SeededParams{static_cast<std::uint64_t>(accepted)};
      try {
        results.push_back(reduce(a, v, o));
      } catch (const BreakdownError&) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++rejected;
      continue;
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      const ReductionResult& r = results[i];
      const std::string tag = "matrix " + std::to_string(accepted) + " " + to_string(variants[i]);
      t.check(structure_report(r.h, 0.0).is_upper_j_hessenberg, tag + " structure");
      const DenseMatrix sas = oracle::matmul(oracle::matmul(oracle::adjoint(r.s), a), r.s);
      const double res = oracle::norm2(oracle::sub(r.h, sas));
      rel_check(t, res, 1e-10 * norm_a, tag + " residual");
      DenseMatrix s = DenseMatrix::identity(2 * n);
      for (const auto& e : r.transcript) s = oracle::matmul(s, densify_adjoint(e.transform, Dim(n)));
      const double replay = oracle::norm2(oracle::sub(s, r.s));
      rel_check(t, replay, 1e-10 * oracle::norm2(r.s), tag + " replay");
      if (res > 1e-10 * norm_a || replay > 1e-10 * oracle::norm2(r.s)) {
        ++failed_runs[i];
        double k = 1.0;
        for (const auto& e : r.transcript)
          if (const auto* sh = std::get_if<TransformSH>(&e.transform)) k = std::max(k, cond2(*sh, Dim(n)));
        min_bad_cond = std::min(min_bad_cond, k);
      }
    }
    ++accepted;
  }
  std::string extra = std::to_string(rejected) + " draws rejected for zero pivots";
  if (!std::isinf(min_bad_cond)) {
    extra += ", failing runs per variant";
    for (std::size_t i = 0; i < variants.size(); ++i)
      extra += std::string(i ? "/" : " ") + std::to_string(failed_runs[i]);
    extra += ", every failing run has a transform with cond2 >= " + fmt("%.2e", min_bad_cond);
  }
  return t.done(extra);
}

// ---------------------------------------------------------------- criterion 9
int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(JHESS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[1024];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    if (out) out->append(buf, got);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_pipeline() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "jhess_acceptance_cli";
  fs::create_directories(dir);
  const std::string a = (dir / "a.txt").string();
  const std::string h = (dir / "h.txt").string();
  const std::string s = (dir / "s.txt").string();
  Tally t;
  t.check(run_cli("gen --family 1 --n 5 --out " + a) == 0, "gen");
  std::string out;
  t.check(run_cli("reduce --input " + a + " --algo jhmsh --out-h " + h + " --out-s " + s, &out) == 0,
          "reduce: " + out);
  t.check(run_cli("check --a " + a + " --s " + s + " --h " + h) == 0, "check");

  const DenseMatrix loaded = load_matrix(h);
  const std::string copy = (dir / "h2.txt").string();
  save_matrix(copy, loaded);
  const DenseMatrix again = load_matrix(copy);
  t.check(std::memcmp(loaded.data(), again.data(), sizeof(double) * loaded.values().size()) == 0,
          "round trip of H");
  std::mt19937_64 rng(9009);
  DenseMatrix r = oracle::random_matrix(rng, 6, 6);
  for (double& x : std::span<double>(r.data(), 36)) x = std::ldexp(x, static_cast<int>(rng() % 200) - 100);
  save_matrix(copy, r);
  const DenseMatrix rb = load_matrix(copy);
  t.check(std::memcmp(r.data(), rb.data(), sizeof(double) * 36) == 0, "round trip of random matrix");
  fs::remove_all(dir);
  return t.done();
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double seconds;  // 0 = no separate limit
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "transform postconditions", transform_postconditions, 5},
      {2, "embedding equivalence", embedding, 2},
      {3, "optimal parameters minimize cond2", optimality, 30},
      {4, "symplecticity, determinant, orthogonality", symplectic_properties, 0},
      {5, "family 1 table, n = 2..30", [] { return family_table(1, 30, 10, 1e-7, 1e-5, 10); }, 0},
      {6, "family 2 table, n = 2..20", [] { return family_table(2, 20, 8, 1e-10, 5e-2, 5); }, 0},
      {7, "breakdown without fallback", breakdowns, 0},
      {8, "factorization oracle, random 6x6 and 8x8", factorization_oracle, 0},
      {9, "end-to-end CLI", cli_pipeline, 0},
  };

  int failed = 0;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.seconds > 0 && elapsed >= c.seconds) {
      o.pass = false;
      o.detail += ", over time limit " + fmt("%.0f s", c.seconds);
    }
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                elapsed);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
