#pragma once

// Low-level in-place update kernels used by the reduction drivers.
//
// Two implementations share one signature set: `serial` is the plain reference
// loop nest, `parallel` distributes independent columns (or rows) over OpenMP
// threads. Each output entry is accumulated in the same order by both, so their
// results are bit-identical; the unit tests rely on that.
//
// Matrices passed here have 2h rows (left kernels) or 2h columns (right
// kernels). A symplectic Householder direction `v` has length 2h and is
// treated as zero outside the support [offset, h) U [h + offset, 2h).

#include <span>

#include "jhess/dense_matrix.hpp"

namespace jhess::kernels {

#define JHESS_KERNEL_DECLS                                                                   \
  /* m <- (I + c v v^J) m */                                                                 \
  void sh_left(double c, std::span<const double> v, Index offset, DenseMatrix& m);           \
  /* m <- m (I - c v v^J) */                                                                 \
  void sh_right_adjoint(double c, std::span<const double> v, Index offset, DenseMatrix& m);  \
  /* rows k and h+k rotated by [[c, s], [-s, c]] */                                          \
  void givens_left(Index k, double c, double s, DenseMatrix& m);                             \
  /* columns k and h+k multiplied on the right by [[c, -s], [s, c]] */                       \
  void givens_right_adjoint(Index k, double c, double s, DenseMatrix& m);                    \
  /* P = I - beta w w^T applied to row blocks [k, h) and [h+k, 2h) */                        \
  void reflector_left(Index k, double beta, std::span<const double> w, DenseMatrix& m);      \
  /* same reflector applied to column blocks [k, h) and [h+k, 2h) */                         \
  void reflector_right(Index k, double beta, std::span<const double> w, DenseMatrix& m);     \
  DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b);                              \
  /* y = a x */                                                                              \
  void gemv(const DenseMatrix& a, std::span<const double> x, std::span<double> y);           \
  /* y = a^T x */                                                                            \
  void gemv_t(const DenseMatrix& a, std::span<const double> x, std::span<double> y);

namespace serial {
JHESS_KERNEL_DECLS
}  // namespace serial

namespace parallel {
JHESS_KERNEL_DECLS
}  // namespace parallel

#undef JHESS_KERNEL_DECLS

}  // namespace jhess::kernels
