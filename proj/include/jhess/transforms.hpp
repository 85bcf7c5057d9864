#pragma once

// Elementary symplectic transformations.
//
//  * TransformSH      T = I + c v v^J, symplectic but not orthogonal in general.
//  * TransformGivens  Van Loan rotation in the plane (k, n+k).
//  * TransformVLH     Van Loan reflector diag(I_k, P) (+) diag(I_k, P), P = I - beta w w^T.
//
// All plane/start indices (k) are 0-based.

#include <optional>
#include <span>
#include <variant>

#include "jhess/dense_matrix.hpp"
#include "jhess/errors.hpp"

namespace jhess {

/// Relative pivot threshold, 2^-26 (about sqrt of machine epsilon).
inline constexpr double kDefaultPivotTol = 1.0 / 67108864.0;

struct TransformSH {
  double c = 0.0;
  Vector v;           // length 2m
  Index m = 0;        // half-dimension of the space T acts on
  Index offset = 0;   // v vanishes on [0, offset) and [m, m + offset)

  bool is_identity() const { return c == 0.0; }
};

struct TransformGivens {
  Index k = 0;
  double c = 1.0;
  double s = 0.0;
  Index n = 0;
};

struct TransformVLH {
  Index k = 0;
  double beta = 0.0;
  Vector w;  // length n - k
  Index n = 0;
};

using SymplecticTransform = std::variant<TransformSH, TransformGivens, TransformVLH>;

/// Free parameters of one sh1/sh2 pair of choices for a vector a.
struct FreeParams {
  double rho = 0.0;
  double mu = 0.0;
  double nu = 0.0;               // always a(n+1)
  std::optional<double> xi;      // set only for the optimal choice
};

/// Optimal parameters: rho = sign(a1) ||a||, mu = a1 + xi, nu = a(n+1).
FreeParams optimal_params(std::span<const double> a);

/// Symplectic Householder T with T x = y (identity when x == y).
TransformSH general_mapping(std::span<const double> x, std::span<const double> y,
                            double pivot_tol = kDefaultPivotTol);

/// T a = rho e1.
TransformSH sh1(std::span<const double> a, double rho, double pivot_tol = kDefaultPivotTol);
/// T e1 = e1 and T a = mu e1 + a(n+1) e_{n+1}.
TransformSH sh2(std::span<const double> a, double mu, double pivot_tol = kDefaultPivotTol);
/// sh1 with the condition-number-optimal rho.
TransformSH osh1(std::span<const double> a, double pivot_tol = kDefaultPivotTol);
/// sh2 with the condition-number-optimal mu = a1 + xi.
TransformSH osh2(std::span<const double> a, double pivot_tol = kDefaultPivotTol);

/// Rotation in plane (k, n+k) zeroing a(n+k) and leaving r = hypot(a(k), a(n+k)) in a(k).
TransformGivens vlg(Index k, std::span<const double> a);
/// Reflector built from a(k..n-1); zeroes a(k+1..n-1).
TransformVLH vlh(Index k, std::span<const double> a);
/// Reflector built from the lower half a(n+k..2n-1); zeroes a(n+k+1..2n-1).
TransformVLH vlh_lower(Index k, std::span<const double> a);

/// Lift a transform acting on 2(n - offset) vectors into the 2n space; the
/// leading `offset` coordinates of each half are left untouched.
TransformSH embed(const TransformSH& t, Index offset, Dim dim);

/// The symplectic adjoint T^J as a transform of the same kind.
SymplecticTransform adjoint(const SymplecticTransform& t);

bool is_orthogonal(const SymplecticTransform& t);
Index half_dim(const SymplecticTransform& t);

/// m <- T m
void apply_left(const SymplecticTransform& t, DenseMatrix& m);
/// m <- m T^J
void apply_right_adjoint(const SymplecticTransform& t, DenseMatrix& m);

Vector apply(const SymplecticTransform& t, std::span<const double> x);
Vector apply_adjoint(const SymplecticTransform& t, std::span<const double> x);

DenseMatrix densify(const SymplecticTransform& t, Dim dim);
DenseMatrix densify_adjoint(const SymplecticTransform& t, Dim dim);

/// ||T||_2 ||T^J||_2 of the densified transform.
double cond2(const TransformSH& t, Dim dim);

}  // namespace jhess
