#pragma once

// Test-matrix families and the sweep harness that regenerates the two
// reduction tables (loss of J-orthogonality and reduction error versus n).

#include <string>
#include <vector>

#include "jhess/dense_matrix.hpp"
#include "jhess/reduction.hpp"

namespace jhess {

/// General family: M11 lower bidiagonal (1, 2), M12 tridiagonal (1; 2, 2),
/// M21 upper bidiagonal with diagonal (0, 1, ..., 1) and superdiagonal 2,
/// M22 lower bidiagonal (1, 3). Column 1 of M21 is zero.
DenseMatrix gen_family1(Index n);

/// Hamiltonian family: M11 and M12 as in family 1, M21 symmetric with zero
/// first row/column and tridiagonal (1; 3, 3) on indices 2..n, M22 = -M11^T.
DenseMatrix gen_family2(Index n);

DenseMatrix gen_family(int family, Index n);

enum class RowStatus { Ok, Breakdown };

struct SweepRow {
  Index n = 0;
  Variant variant = Variant::JHMSH;
  double orth_loss = 0.0;
  double red_err = 0.0;
  double orth_loss_fro = 0.0;  // Frobenius cross-checks, upper bounds of the above
  double red_err_fro = 0.0;
  int fallback_count = 0;
  RowStatus status = RowStatus::Ok;
};

/// One row per (n, variant), n ascending, variants in the given order. The
/// fallback is always enabled; a remaining breakdown is recorded in the row.
std::vector<SweepRow> run_sweep(int family, Index n_min, Index n_max,
                                const std::vector<Variant>& variants, ReductionOptions opts = {});

enum class TableFormat { Csv, Markdown };

TableFormat parse_table_format(const std::string& name);

/// Columns: n, variant, orth_loss, red_err, fallbacks, status (verbose adds the
/// two Frobenius columns). Floats use 5 significant digits; breakdown rows
/// print "fail" for every metric.
std::string emit_table(const std::vector<SweepRow>& rows, TableFormat format, bool verbose = false);

}  // namespace jhess
