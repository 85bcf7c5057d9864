#pragma once

// Reduction of a 2n x 2n matrix to upper J-Hessenberg form H = S^J A S.
//
// Every step j (0-based, j = 0 .. n-2) has two sub-steps:
//   odd   zero rows j+1..n-1 and n+j+1..2n-1 of column j, keeping row n+j;
//   even  zero rows j+2..n-1 and n+j+1..2n-1 of column n+j.
// The drivers differ in which elementary transforms realize them:
//
//   JHSH    sh2 / sh1 with free parameters from a ParamStrategy
//   JHOSH   osh2 / osh1 (condition-number-optimal parameters)
//   JHMSH   osh2 / Van Loan Givens sweep + one Van Loan reflector
//   JHMSH2  osh2 / reflector on the lower segment, one Givens, one reflector
//
// Step numbers reported in errors and records are 1-based.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "jhess/dense_matrix.hpp"
#include "jhess/errors.hpp"
#include "jhess/transforms.hpp"

namespace jhess {

enum class Variant { JHSH, JHOSH, JHMSH, JHMSH2 };

const char* to_string(Variant v);
/// Case-insensitive; throws std::invalid_argument on unknown names.
Variant parse_variant(std::string_view name);

struct OptimalParams {};

/// Per-step lists, consulted by 0-based step index.
struct FixedParams {
  std::vector<double> rho;
  std::vector<double> mu;
};

/// Parameters drawn uniformly from [0.5, 1.5] by a 64-bit LCG; mu then rho per step.
struct SeededParams {
  std::uint64_t seed = 0;
};

using ParamStrategy = std::variant<OptimalParams, FixedParams, SeededParams>;

/// Knuth MMIX linear congruential generator.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  /// Uniform in [lo, hi) from the top 53 bits.
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

struct ReductionOptions {
  ParamStrategy strategy = OptimalParams{};
  bool breakdown_fallback = true;
  double pivot_tol = kDefaultPivotTol;
  bool set_exact_zeros = true;
  bool compute_diagnostics = true;
  /// Called with the 1-based step number and the working matrix after each step.
  std::function<void(int, const DenseMatrix&)> on_step;
};

/// Index bookkeeping for step j (0-based) of an n-half-dimensional reduction.
struct ReductionStep {
  Index n;
  Index j;

  Index alpha() const { return n - j; }      // half-length of the odd active set
  Index beta() const { return n - j - 1; }   // half-length of the even active set
  std::vector<Index> odd_rows() const;       // {j..n-1, n+j..2n-1}
  std::vector<Index> even_rows() const;      // {j+1..n-1, n+j+1..2n-1}
};

struct TranscriptEntry {
  int step = 0;  // 1-based
  SubStep substep = SubStep::None;
  SymplecticTransform transform;
};

/// A zero odd-sub-step pivot repaired by a rotation in plane (j, n+j).
struct FallbackRecord {
  int step = 0;  // 1-based
  double pivot_before = 0.0;
  double pivot_after = 0.0;
};

/// Repair for a negligible odd-sub-step pivot nu = A(n+j, j) of the working
/// matrix: a Van Loan rotation in plane (j, n+j) whose angle maximizes the new
/// |A(n+j, j)| after the similarity A <- G A G^T. The new pivot is the
/// dominant eigenvalue of [[A(n+j,j), d], [d, -A(j,n+j)]], d = (A(n+j,n+j) - A(j,j)) / 2.
///
/// Returns nullopt when no repair exists: either the already reduced columns
/// do not vanish on the active rows (any transform that moves the pivot would
/// refill them), or every rotation angle leaves the pivot at zero.
std::optional<TransformGivens> breakdown_fallback(const DenseMatrix& work, Index j,
                                                  double pivot_tol = kDefaultPivotTol);

struct ReductionResult {
  DenseMatrix s;
  DenseMatrix h;
  std::vector<TranscriptEntry> transcript;
  double orth_loss = 0.0;  // ||S^J S - I||_2
  double red_err = 0.0;    // ||H - S^J A S||_2
  std::vector<FallbackRecord> fallbacks_used;
};

ReductionResult jhsh(const DenseMatrix& a, const ReductionOptions& opts = {});
ReductionResult jhosh(const DenseMatrix& a, const ReductionOptions& opts = {});
ReductionResult jhmsh(const DenseMatrix& a, const ReductionOptions& opts = {});
ReductionResult jhmsh2(const DenseMatrix& a, const ReductionOptions& opts = {});

/// Dispatch on `variant`; throws BreakdownError on an unrecoverable pivot.
ReductionResult reduce(const DenseMatrix& a, Variant variant, const ReductionOptions& opts = {});

/// Fill orth_loss and red_err of `r` against the input matrix `a`.
void compute_diagnostics(const DenseMatrix& a, ReductionResult& r);

}  // namespace jhess
