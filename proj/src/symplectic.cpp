#include "jhess/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jhess/kernels.hpp"

namespace jhess {

namespace {

Index half_of(Index size, const char* who) {
  if (size <= 0 || size % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": dimension must be even and positive");
  return size / 2;
}

}  // namespace

DenseMatrix make_j(Dim dim) {
  const Index n = dim.n;
  DenseMatrix j(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

double j_inner(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("j_inner: length mismatch");
  const Index n = half_of(static_cast<Index>(x.size()), "j_inner");
  double s = 0.0;
  for (Index i = 0; i < n; ++i) s += x[i] * y[n + i] - x[n + i] * y[i];
  return s;
}

DenseMatrix adjoint_mat(const DenseMatrix& m) {
  // (J_{2k}^T M^T J_{2n})(p, q): J^T permutes rows of M^T, J permutes its columns.
  const Index n = half_of(m.rows(), "adjoint_mat");
  const Index k = half_of(m.cols(), "adjoint_mat");
  DenseMatrix out(m.cols(), m.rows());
  for (Index q = 0; q < 2 * n; ++q) {
    const Index src_row = q < n ? q + n : q - n;  // row of M feeding column q
    const double qs = q < n ? -1.0 : 1.0;
    for (Index p = 0; p < 2 * k; ++p) {
      const Index src_col = p < k ? p + k : p - k;
      const double ps = p < k ? -1.0 : 1.0;
      out(p, q) = ps * qs * m(src_row, src_col);
    }
  }
  return out;
}

double symplecticity_residual(const DenseMatrix& s) {
  if (!s.square()) throw std::invalid_argument("symplecticity_residual: matrix must be square");
  half_of(s.rows(), "symplecticity_residual");
  DenseMatrix r = adjoint_mat(s) * s;
  for (Index i = 0; i < r.rows(); ++i) r(i, i) -= 1.0;
  return spectral_norm(r);
}

NormEstimate spectral_norm_estimate(const DenseMatrix& m, PowerIterationConfig cfg) {
  NormEstimate est;
  if (m.empty()) throw std::invalid_argument("spectral_norm: empty matrix");
  if (max_abs(m) == 0.0) {
    est.converged = true;
    return est;
  }

  const Index cols = m.cols();
  Vector x(static_cast<std::size_t>(cols), 1.0 / std::sqrt(static_cast<double>(cols)));
  Vector y(static_cast<std::size_t>(m.rows()));
  Vector z(static_cast<std::size_t>(cols));
  bool restarted = false;
  double sigma2 = 0.0;

  for (int it = 1; it <= cfg.max_iter; ++it) {
    kernels::parallel::gemv(m, x, y);
    kernels::parallel::gemv_t(m, y, z);
    const double zn = norm2(z);
    est.iterations = it;
    if (zn == 0.0) {
      // start vector in the null space of M^T M; retry from the heaviest column
      if (restarted) break;
      restarted = true;
      Index best = 0;
      double best_norm = -1.0;
      for (Index j = 0; j < cols; ++j) {
        const double cn = norm2(m.col(j));
        if (cn > best_norm) best_norm = cn, best = j;
      }
      std::fill(x.begin(), x.end(), 0.0);
      x[best] = 1.0;
      continue;
    }
    // Rayleigh quotient x^T M^T M x with ||x|| = 1
    double next = 0.0;
    for (Index j = 0; j < cols; ++j) next += x[j] * z[j];
    for (Index j = 0; j < cols; ++j) x[j] = z[j] / zn;
    if (it > 1 && std::abs(next - sigma2) <= cfg.rel_tol * next) {
      sigma2 = next;
      est.converged = true;
      break;
    }
    sigma2 = next;
  }
  est.value = std::sqrt(std::max(sigma2, 0.0));
  return est;
}

StructureReport structure_report(const DenseMatrix& h, double tol) {
  if (!h.square()) throw std::invalid_argument("structure_report: matrix must be square");
  const Index n = half_of(h.rows(), "structure_report");
  if (tol < 0.0) throw std::invalid_argument("structure_report: negative tolerance");

  StructureReport rep;
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      rep.h11_max_below_diag = std::max(rep.h11_max_below_diag, std::abs(h(i, j)));
      rep.h21_max_below_diag = std::max(rep.h21_max_below_diag, std::abs(h(n + i, j)));
      rep.h22_max_below_diag = std::max(rep.h22_max_below_diag, std::abs(h(n + i, n + j)));
    }
    for (Index i = j + 2; i < n; ++i)
      rep.h12_max_below_subdiag = std::max(rep.h12_max_below_subdiag, std::abs(h(i, n + j)));
  }
  rep.is_upper_j_hessenberg = rep.h11_max_below_diag <= tol && rep.h21_max_below_diag <= tol &&
                              rep.h22_max_below_diag <= tol && rep.h12_max_below_subdiag <= tol;

  bool nonzero_pivots = true;
  for (Index i = 0; i < n; ++i) nonzero_pivots = nonzero_pivots && std::abs(h(n + i, i)) > tol;
  for (Index i = 1; i < n; ++i) nonzero_pivots = nonzero_pivots && std::abs(h(i, n + i - 1)) > tol;
  rep.is_unreduced = rep.is_upper_j_hessenberg && nonzero_pivots;
  return rep;
}

double default_structure_tol(const DenseMatrix& h) { return 1e-12 * frobenius_norm(h); }

}  // namespace jhess
