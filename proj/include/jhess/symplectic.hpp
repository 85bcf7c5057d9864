#pragma once

// J-space algebra: the matrix J, the skew-symmetric inner product, symplectic
// adjoints, norms, and the upper J-Hessenberg structure check.

#include <span>

#include "jhess/dense_matrix.hpp"

namespace jhess {

/// J = [0 I; -I 0] of size 2n.
DenseMatrix make_j(Dim dim);

/// x^T J y, evaluated without forming J.
double j_inner(std::span<const double> x, std::span<const double> y);

/// M^J = J_{2k}^T M^T J_{2n} for M of size 2n x 2k.
DenseMatrix adjoint_mat(const DenseMatrix& m);

/// ||S^J S - I||_2.
double symplecticity_residual(const DenseMatrix& s);

struct NormEstimate {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

struct PowerIterationConfig {
  double rel_tol = 1e-12;
  int max_iter = 5000;
};

/// Largest singular value by power iteration on M^T M, started from the
/// normalized all-ones vector. Returns the last estimate if the cap is hit.
NormEstimate spectral_norm_estimate(const DenseMatrix& m, PowerIterationConfig cfg = {});

inline double spectral_norm(const DenseMatrix& m) { return spectral_norm_estimate(m).value; }

struct StructureReport {
  double h11_max_below_diag = 0.0;
  double h21_max_below_diag = 0.0;
  double h22_max_below_diag = 0.0;
  double h12_max_below_subdiag = 0.0;
  bool is_upper_j_hessenberg = false;
  bool is_unreduced = false;
};

/// Blockwise upper J-Hessenberg check. Entries with magnitude <= tol count as
/// zero; unreducedness additionally needs every diagonal entry of H21 and every
/// subdiagonal entry of H12 to exceed tol in magnitude.
StructureReport structure_report(const DenseMatrix& h, double tol);

/// Default tolerance for user-supplied matrices: 1e-12 ||H||_F.
double default_structure_tol(const DenseMatrix& h);

}  // namespace jhess
