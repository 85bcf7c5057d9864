// jhess: generate test matrices, reduce them to J-Hessenberg form, run the
// table sweeps and check stored factorizations.
//
// Exit codes: 0 ok, 2 bad arguments, 3 I/O, 4 breakdown, 5 bad dimensions,
// 6 structure check failed.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jhess/experiments.hpp"
#include "jhess/matrix_io.hpp"
#include "jhess/reduction.hpp"
#include "jhess/symplectic.hpp"

namespace {

using namespace jhess;

enum Exit : int {
  kOk = 0,
  kBadArgs = 2,
  kIo = 3,
  kBreakdown = 4,
  kBadDims = 5,
  kStructure = 6,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_value(const char* key, double v) { std::printf("%s=%.6e\n", key, v); }

ParamStrategy parse_strategy(const std::string& spec) {
  if (spec == "optimal") return OptimalParams{};
  if (spec.rfind("seeded:", 0) == 0) {
    const std::string digits = spec.substr(7);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
      throw UsageError("bad seed in strategy '" + spec + "'");
    return SeededParams{seed};
  }
  if (spec.rfind("fixed:", 0) == 0) {
    const std::string path = spec.substr(6);
    if (path.empty()) throw UsageError("missing file in strategy '" + spec + "'");
    return load_fixed_params(path);
  }
  throw UsageError("unknown strategy '" + spec + "'");
}

std::vector<Variant> parse_variant_list(const std::string& csv) {
  std::vector<Variant> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(parse_variant(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("no variants given");
  return out;
}

void require_even_square(const DenseMatrix& m, const char* what) {
  if (!m.square() || m.rows() % 2 != 0)
    throw DimensionError(std::string(what) + " must be square with even size, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

int cmd_gen(int family, Index n, const std::string& out) {
  if (family != 1 && family != 2) throw UsageError("family must be 1 or 2");
  if (n < 2) throw UsageError("n must be at least 2");
  save_matrix(out, gen_family(family, n));
  return kOk;
}

struct ReduceArgs {
  std::string input;
  std::string algo = "jhmsh";
  std::string strategy = "optimal";
  std::string fallback = "on";
  double pivot_tol = kDefaultPivotTol;
  std::string out_h;
  std::string out_s;
};

int cmd_reduce(const ReduceArgs& args) {
  Variant variant;
  try {
    variant = parse_variant(args.algo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.pivot_tol < 0.0) throw UsageError("pivot tolerance must be non-negative");

  ReductionOptions opts;
  opts.strategy = parse_strategy(args.strategy);
  opts.breakdown_fallback = args.fallback == "on";
  opts.pivot_tol = args.pivot_tol;

  const DenseMatrix a = load_matrix(args.input);
  require_even_square(a, "input matrix");
  if (!all_finite(a)) throw UsageError("input matrix has non-finite entries");

  ReductionResult r;
  try {
    r = reduce(a, variant, opts);
  } catch (const BreakdownError& e) {
    std::printf("status=breakdown\nstep=%d\nsubstep=%s\nkind=%s\npivot=%.6e\n", e.step(),
                to_string(e.substep()), to_string(e.kind()), e.pivot_value());
    return kBreakdown;
  } catch (const std::invalid_argument& e) {
    // fixed strategy shorter than the reduction
    throw UsageError(e.what());
  }
  if (!args.out_h.empty()) save_matrix(args.out_h, r.h);
  if (!args.out_s.empty()) save_matrix(args.out_s, r.s);

  std::printf("status=ok\nalgo=%s\nn=%td\n", to_string(variant), a.rows() / 2);
  print_value("orth_loss", r.orth_loss);
  print_value("red_err", r.red_err);
  std::printf("fallbacks=%zu\n", r.fallbacks_used.size());
  return kOk;
}

int cmd_experiment(int family, Index n_min, Index n_max, const std::string& algos,
                   const std::string& format, const std::string& out, bool verbose) {
  if (family != 1 && family != 2) throw UsageError("family must be 1 or 2");
  if (n_min < 2 || n_max < n_min) throw UsageError("need 2 <= n-min <= n-max");
  const auto variants = parse_variant_list(algos);
  TableFormat fmt;
  try {
    fmt = parse_table_format(format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string table = emit_table(run_sweep(family, n_min, n_max, variants), fmt, verbose);
  if (out.empty() || out == "-") {
    std::fputs(table.c_str(), stdout);
  } else {
    std::ofstream f(out);
    if (!(f << table)) throw MatrixIoError("cannot write '" + out + "'");
  }
  return kOk;
}

int cmd_check(const std::string& a_path, const std::string& s_path, const std::string& h_path) {
  const DenseMatrix a = load_matrix(a_path);
  const DenseMatrix s = load_matrix(s_path);
  const DenseMatrix h = load_matrix(h_path);
  require_even_square(a, "A");
  require_even_square(s, "S");
  require_even_square(h, "H");
  if (s.rows() != a.rows() || h.rows() != a.rows())
    throw DimensionError("A, S and H must have the same size");

  const double orth_loss = symplecticity_residual(s);
  const double red_err = spectral_norm(h - adjoint_mat(s) * a * s);
  const double tol = 1e-10 * frobenius_norm(h);
  const StructureReport rep = structure_report(h, tol);

  print_value("orth_loss", orth_loss);
  print_value("red_err", red_err);
  print_value("h11_max_below_diag", rep.h11_max_below_diag);
  print_value("h21_max_below_diag", rep.h21_max_below_diag);
  print_value("h22_max_below_diag", rep.h22_max_below_diag);
  print_value("h12_max_below_subdiag", rep.h12_max_below_subdiag);
  std::printf("upper_j_hessenberg=%s\nunreduced=%s\n", rep.is_upper_j_hessenberg ? "true" : "false",
              rep.is_unreduced ? "true" : "false");
  return rep.is_upper_j_hessenberg ? kOk : kStructure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic reduction to upper J-Hessenberg form"};
  app.require_subcommand(1);

  int gen_family_id = 0;
  Index gen_n = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a test matrix");
  gen->add_option("--family", gen_family_id, "1 or 2")->required();
  gen->add_option("--n", gen_n, "half dimension")->required();
  gen->add_option("--out", gen_out, "output file")->required();

  ReduceArgs rargs;
  auto* red = app.add_subcommand("reduce", "Reduce a matrix to J-Hessenberg form");
  red->add_option("--input", rargs.input, "matrix file")->required();
  red->add_option("--algo", rargs.algo, "jhsh|jhosh|jhmsh|jhmsh2")->capture_default_str();
  red->add_option("--strategy", rargs.strategy, "optimal|seeded:<u64>|fixed:<file>")
      ->capture_default_str();
  red->add_option("--fallback", rargs.fallback, "on|off")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  red->add_option("--pivot-tol", rargs.pivot_tol, "relative breakdown threshold")
      ->capture_default_str();
  red->add_option("--out-h", rargs.out_h, "write H here");
  red->add_option("--out-s", rargs.out_s, "write S here");

  int exp_family = 0;
  Index n_min = 2;
  Index n_max = 0;
  std::string algos = "jhmsh,jhmsh2";
  std::string format = "csv";
  std::string exp_out;
  bool verbose = false;
  auto* exp = app.add_subcommand("experiment", "Sweep n for one matrix family");
  exp->add_option("--family", exp_family, "1 or 2")->required();
  exp->add_option("--n-min", n_min)->capture_default_str();
  exp->add_option("--n-max", n_max)->required();
  exp->add_option("--algos", algos, "comma-separated variants")->capture_default_str();
  exp->add_option("--format", format, "csv|markdown")->capture_default_str();
  exp->add_option("--out", exp_out, "output file, stdout if omitted");
  exp->add_flag("--verbose", verbose, "add Frobenius-norm columns");

  std::string a_path;
  std::string s_path;
  std::string h_path;
  auto* chk = app.add_subcommand("check", "Verify a stored factorization H = S^J A S");
  chk->set_help_flag("--help", "Print this help message and exit");
  chk->add_option("--a", a_path)->required();
  chk->add_option("--s", s_path)->required();
  chk->add_option("--h", h_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (*gen) return cmd_gen(gen_family_id, gen_n, gen_out);
    if (*red) return cmd_reduce(rargs);
    if (*exp) return cmd_experiment(exp_family, n_min, n_max, algos, format, exp_out, verbose);
    if (*chk) return cmd_check(a_path, s_path, h_path);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadArgs;
  } catch (const MatrixIoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const MatrixFormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  } catch (const DimensionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadDims;
  }
  return kBadArgs;
}
