#include "jhess/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "jhess/symplectic.hpp"

namespace jhess {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::JHSH: return "jhsh";
    case Variant::JHOSH: return "jhosh";
    case Variant::JHMSH: return "jhmsh";
    case Variant::JHMSH2: return "jhmsh2";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Variant v : {Variant::JHSH, Variant::JHOSH, Variant::JHMSH, Variant::JHMSH2})
    if (lower == to_string(v)) return v;
  throw std::invalid_argument("unknown reduction variant '" + std::string(name) + "'");
}

std::vector<Index> ReductionStep::odd_rows() const {
  std::vector<Index> rows;
  for (Index i = j; i < n; ++i) rows.push_back(i);
  for (Index i = n + j; i < 2 * n; ++i) rows.push_back(i);
  return rows;
}

std::vector<Index> ReductionStep::even_rows() const {
  std::vector<Index> rows;
  for (Index i = j + 1; i < n; ++i) rows.push_back(i);
  for (Index i = n + j + 1; i < 2 * n; ++i) rows.push_back(i);
  return rows;
}

std::optional<TransformGivens> breakdown_fallback(const DenseMatrix& work, Index j,
                                                  double pivot_tol) {
  if (!work.square() || work.rows() % 2 != 0 || work.rows() == 0)
    throw std::invalid_argument("breakdown_fallback: matrix must be square with even size");
  const Index n = work.rows() / 2;
  if (j < 0 || j >= n) throw std::invalid_argument("breakdown_fallback: step out of range");

  // Reduced columns 0..j-1 and n..n+j-1 must vanish on the active rows.
  const double tol = pivot_tol * frobenius_norm(work);
  const auto rows = ReductionStep{n, j}.odd_rows();
  for (Index c = 0; c < j; ++c)
    for (Index col : {c, n + c})
      for (Index r : rows)
        if (std::abs(work(r, col)) > tol) return std::nullopt;

  // nu(c, s) = [c s] B [c s]^T for the rotated matrix
  const double b11 = work(n + j, j);
  const double b22 = -work(j, n + j);
  const double b12 = 0.5 * (work(n + j, n + j) - work(j, j));
  const double mean = 0.5 * (b11 + b22);
  const double radius = std::hypot(0.5 * (b11 - b22), b12);
  const double lambda = mean >= 0.0 ? mean + radius : mean - radius;
  if (lambda == 0.0) return std::nullopt;

  // eigenvector for lambda; take the better conditioned of the two forms
  double c = b12;
  double s = lambda - b11;
  if (std::hypot(lambda - b22, b12) > std::hypot(c, s)) {
    c = lambda - b22;
    s = b12;
  }
  const double r = std::hypot(c, s);
  if (r == 0.0) return std::nullopt;  // B = lambda I, no angle helps
  return TransformGivens{j, c / r, s / r, n};
}

namespace {

Vector gather(const DenseMatrix& m, Index col, const std::vector<Index>& rows) {
  Vector out;
  out.reserve(rows.size());
  for (Index r : rows) out.push_back(m(r, col));
  return out;
}

class Reducer {
 public:
  Reducer(const DenseMatrix& a, Variant variant, const ReductionOptions& opts)
      : variant_(variant), opts_(opts) {
    if (!a.square()) throw std::invalid_argument("reduction: matrix must be square");
    if (a.rows() == 0 || a.rows() % 2 != 0)
      throw std::invalid_argument("reduction: dimension must be even and positive");
    if (!all_finite(a)) throw std::invalid_argument("reduction: matrix has non-finite entries");
    if (opts.pivot_tol < 0.0) throw std::invalid_argument("reduction: pivot_tol must be >= 0");
    n_ = a.rows() / 2;
    work_ = a;
    s_ = DenseMatrix::identity(a.rows());
    if (const auto* seeded = std::get_if<SeededParams>(&opts.strategy)) rng_.emplace(seeded->seed);
  }

  ReductionResult run() {
    for (Index j = 0; j + 1 < n_; ++j) {
      const ReductionStep step{n_, j};
      odd_substep(step);
      even_substep(step);
      if (opts_.on_step) opts_.on_step(static_cast<int>(j + 1), work_);
    }
    ReductionResult r;
    r.s = std::move(s_);
    r.h = std::move(work_);
    r.transcript = std::move(transcript_);
    r.fallbacks_used = std::move(fallbacks_);
    return r;
  }

 private:
  void apply(SymplecticTransform t, Index j, SubStep sub) {
    apply_left(t, work_);
    apply_right_adjoint(t, work_);
    apply_right_adjoint(t, s_);
    transcript_.push_back({static_cast<int>(j + 1), sub, std::move(t)});
  }

  void zero(Index col, Index row_begin, Index row_end) {
    if (!opts_.set_exact_zeros) return;
    for (Index r = row_begin; r < row_end; ++r) work_(r, col) = 0.0;
  }

  void zero_odd_column(Index j) {
    zero(j, j + 1, n_);
    zero(j, n_ + j + 1, 2 * n_);
  }

  // Free parameters for JHSH; the other drivers use the optimal constructors.
  double next_mu(Index j) {
    if (const auto* f = std::get_if<FixedParams>(&opts_.strategy)) {
      if (j >= static_cast<Index>(f->mu.size())) throw std::invalid_argument("fixed strategy: too few mu values");
      return f->mu[static_cast<std::size_t>(j)];
    }
    return rng_->uniform(0.5, 1.5);
  }

  double next_rho(Index j) {
    if (const auto* f = std::get_if<FixedParams>(&opts_.strategy)) {
      if (j >= static_cast<Index>(f->rho.size())) throw std::invalid_argument("fixed strategy: too few rho values");
      return f->rho[static_cast<std::size_t>(j)];
    }
    return rng_->uniform(0.5, 1.5);
  }

  bool uses_optimal_params() const {
    return variant_ != Variant::JHSH || std::holds_alternative<OptimalParams>(opts_.strategy);
  }


  bool tail_is_zero(Index col, Index first_upper, Index first_lower) const {
    for (Index r = first_upper; r < n_; ++r)
      if (work_(r, col) != 0.0) return false;
    for (Index r = first_lower; r < 2 * n_; ++r)
      if (work_(r, col) != 0.0) return false;
    return true;
  }

  void odd_substep(const ReductionStep& step) {
    const Index j = step.j;
    const auto rows = step.odd_rows();
    // Seeded/fixed draws happen once per sub-step even if a retry follows.
    std::optional<double> mu;
    if (!uses_optimal_params()) mu = next_mu(j);
    if (tail_is_zero(j, j + 1, n_ + j + 1)) return;  // already reduced
    auto build = [&] {
      const Vector a = gather(work_, j, rows);
      return mu ? sh2(a, *mu, opts_.pivot_tol) : osh2(a, opts_.pivot_tol);
    };

    TransformSH t;
    try {
      t = build();
    } catch (const BreakdownError& e) {
      const int step_no = static_cast<int>(j + 1);
      if (!opts_.breakdown_fallback) throw e.at(step_no, SubStep::Odd);
      const auto rotation = breakdown_fallback(work_, j, opts_.pivot_tol);
      if (!rotation) throw e.at(step_no, SubStep::Odd);
      apply(*rotation, j, SubStep::Odd);
      fallbacks_.push_back({step_no, e.pivot_value(), work_(n_ + j, j)});
      try {
        t = build();
      } catch (const BreakdownError& retry) {
        throw retry.at(step_no, SubStep::Odd);
      }
    }
    apply(embed(t, j, Dim(n_)), j, SubStep::Odd);
    zero_odd_column(j);
  }

  void even_substep(const ReductionStep& step) {
    switch (variant_) {
      case Variant::JHSH:
      case Variant::JHOSH: return even_householder(step);
      case Variant::JHMSH: return even_givens_sweep(step);
      case Variant::JHMSH2: return even_compact(step);
    }
  }

  void zero_even_column(Index j) {
    const Index col = n_ + j;
    zero(col, j + 2, n_);
    zero(col, n_ + j + 1, 2 * n_);
  }

  void even_householder(const ReductionStep& step) {
    const Index j = step.j;
    const Index col = n_ + j;
    std::optional<double> rho;
    if (!uses_optimal_params()) rho = next_rho(j);
    const Vector a = gather(work_, col, step.even_rows());
    if (std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0; })) return;
    TransformSH t;
    try {
      t = rho ? sh1(a, *rho, opts_.pivot_tol) : osh1(a, opts_.pivot_tol);
    } catch (const BreakdownError& e) {
      throw e.at(static_cast<int>(j + 1), SubStep::Even);
    }
    apply(embed(t, j + 1, Dim(n_)), j, SubStep::Even);
    zero_even_column(j);
  }

  void even_givens_sweep(const ReductionStep& step) {
    const Index j = step.j;
    const Index col = n_ + j;
    for (Index k = n_ - 1; k >= j + 1; --k) {
      apply(vlg(k, work_.col(col)), j, SubStep::Even);
      zero(col, n_ + k, n_ + k + 1);
    }
    if (step.beta() >= 2) apply(vlh(j + 1, work_.col(col)), j, SubStep::Even);
    zero_even_column(j);
  }

  void even_compact(const ReductionStep& step) {
    const Index j = step.j;
    const Index col = n_ + j;
    if (step.beta() >= 2) {
      apply(vlh_lower(j + 1, work_.col(col)), j, SubStep::Even);
      zero(col, n_ + j + 2, 2 * n_);
    }
    apply(vlg(j + 1, work_.col(col)), j, SubStep::Even);
    zero(col, n_ + j + 1, n_ + j + 2);
    if (step.beta() >= 2) apply(vlh(j + 1, work_.col(col)), j, SubStep::Even);
    zero_even_column(j);
  }

  Variant variant_;
  const ReductionOptions& opts_;
  Index n_ = 0;
  DenseMatrix work_;
  DenseMatrix s_;
  std::vector<TranscriptEntry> transcript_;
  std::vector<FallbackRecord> fallbacks_;
  std::optional<Lcg64> rng_;
};

ReductionResult run_variant(const DenseMatrix& a, Variant variant, const ReductionOptions& opts) {
  ReductionResult r = Reducer(a, variant, opts).run();
  if (opts.compute_diagnostics) compute_diagnostics(a, r);
  return r;
}

}  // namespace

void compute_diagnostics(const DenseMatrix& a, ReductionResult& r) {
  r.orth_loss = symplecticity_residual(r.s);
  r.red_err = spectral_norm(r.h - adjoint_mat(r.s) * a * r.s);
}

ReductionResult jhsh(const DenseMatrix& a, const ReductionOptions& opts) {
  return run_variant(a, Variant::JHSH, opts);
}

ReductionResult jhosh(const DenseMatrix& a, const ReductionOptions& opts) {
  return run_variant(a, Variant::JHOSH, opts);
}

ReductionResult jhmsh(const DenseMatrix& a, const ReductionOptions& opts) {
  return run_variant(a, Variant::JHMSH, opts);
}

ReductionResult jhmsh2(const DenseMatrix& a, const ReductionOptions& opts) {
  return run_variant(a, Variant::JHMSH2, opts);
}

ReductionResult reduce(const DenseMatrix& a, Variant variant, const ReductionOptions& opts) {
  return run_variant(a, variant, opts);
}

}  // namespace jhess
