#pragma once

// Per-column and per-row bodies shared by the serial and OpenMP kernels. The
// two translation units differ only in how they iterate over these.

#include <span>

#include "jhess/dense_matrix.hpp"

namespace jhess::kernels::detail {

// Matrices smaller than this (rows * cols) are not worth a parallel region.
inline constexpr Index kParallelWork = 8192;

inline void sh_left_column(double c, std::span<const double> v, Index offset, Index h,
                           double* col) {
  double s = 0.0;
  for (Index i = offset; i < h; ++i) s += v[i] * col[h + i] - v[h + i] * col[i];
  if (s == 0.0) return;
  const double f = c * s;
  for (Index i = offset; i < h; ++i) {
    col[i] += f * v[i];
    col[h + i] += f * v[h + i];
  }
}

// p(r) = sum over the support of M(r, k) v(k)
inline double sh_row_dot(const DenseMatrix& m, std::span<const double> v, Index offset, Index h,
                         Index r) {
  double p = 0.0;
  for (Index k = offset; k < h; ++k) p += m(r, k) * v[k];
  for (Index k = h + offset; k < 2 * h; ++k) p += m(r, k) * v[k];
  return p;
}

// (v^T J)(k)
inline double sh_adjoint_row_entry(std::span<const double> v, Index h, Index k) {
  return k < h ? -v[h + k] : v[k - h];
}

inline void axpy_column(double alpha, std::span<const double> x, double* y, Index rows) {
  if (alpha == 0.0) return;
  for (Index r = 0; r < rows; ++r) y[r] += alpha * x[r];
}

inline void givens_left_column(Index k, double c, double s, Index h, double* col) {
  const double x = col[k];
  const double y = col[h + k];
  col[k] = c * x + s * y;
  col[h + k] = -s * x + c * y;
}

inline void reflect_segment(double beta, std::span<const double> w, double* seg) {
  double d = 0.0;
  const auto len = static_cast<Index>(w.size());
  for (Index i = 0; i < len; ++i) d += w[i] * seg[i];
  if (d == 0.0) return;
  const double f = beta * d;
  for (Index i = 0; i < len; ++i) seg[i] -= f * w[i];
}

inline void reflector_left_column(Index k, double beta, std::span<const double> w, Index h,
                                  double* col) {
  reflect_segment(beta, w, col + k);
  reflect_segment(beta, w, col + h + k);
}

inline void reflector_right_row(Index k, double beta, std::span<const double> w, Index h,
                                DenseMatrix& m, Index r) {
  const auto len = static_cast<Index>(w.size());
  for (Index base : {k, h + k}) {
    double d = 0.0;
    for (Index i = 0; i < len; ++i) d += m(r, base + i) * w[i];
    if (d == 0.0) continue;
    const double f = beta * d;
    for (Index i = 0; i < len; ++i) m(r, base + i) -= f * w[i];
  }
}

inline void gemm_column(const DenseMatrix& a, const DenseMatrix& b, Index j, double* out) {
  for (Index l = 0; l < a.cols(); ++l) axpy_column(b(l, j), a.col(l), out, a.rows());
}

inline double row_dot(const DenseMatrix& a, std::span<const double> x, Index r) {
  double s = 0.0;
  for (Index k = 0; k < a.cols(); ++k) s += a(r, k) * x[k];
  return s;
}

inline double col_dot(const DenseMatrix& a, std::span<const double> x, Index j) {
  double s = 0.0;
  const auto col = a.col(j);
  for (Index r = 0; r < a.rows(); ++r) s += col[r] * x[r];
  return s;
}

void check_sh(std::span<const double> v, Index offset, Index extent, const char* who);
void check_half(Index k, Index extent, const char* who);
void check_reflector(Index k, std::span<const double> w, Index extent, const char* who);

}  // namespace jhess::kernels::detail
