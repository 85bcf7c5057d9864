#include "jhess/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jhess/kernels.hpp"
#include "jhess/symplectic.hpp"

namespace jhess {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Index half_length(std::span<const double> a, const char* who) {
  if (a.empty() || a.size() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": vector length must be even and positive");
  return static_cast<Index>(a.size()) / 2;
}

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

TransformSH identity_sh(Index m) { return TransformSH{0.0, Vector(static_cast<std::size_t>(2 * m), 0.0), m, 0}; }

bool tail_is_zero(std::span<const double> a) {
  return std::all_of(a.begin() + 1, a.end(), [](double x) { return x == 0.0; });
}

TransformVLH reflector_from(Index k, Index n, std::span<const double> segment) {
  TransformVLH t{k, 0.0, Vector(segment.begin(), segment.end()), n};
  double r1 = 0.0;
  for (std::size_t i = 1; i < segment.size(); ++i) r1 += segment[i] * segment[i];
  const double r = std::sqrt(segment[0] * segment[0] + r1);
  if (r == 0.0) return t;
  t.w[0] = segment[0] + sign_of(segment[0]) * r;
  t.beta = 2.0 / (t.w[0] * t.w[0] + r1);
  return t;
}

}  // namespace

FreeParams optimal_params(std::span<const double> a) {
  const Index n = half_length(a, "optimal_params");
  double xi2 = 0.0;
  for (Index i = 1; i < n; ++i) xi2 += a[i] * a[i] + a[n + i] * a[n + i];
  FreeParams p;
  p.rho = sign_of(a[0]) * norm2(a);
  p.xi = std::sqrt(xi2);
  p.mu = a[0] + *p.xi;
  p.nu = a[n];
  return p;
}

TransformSH general_mapping(std::span<const double> x, std::span<const double> y, double pivot_tol) {
  if (x.size() != y.size()) throw std::invalid_argument("general_mapping: length mismatch");
  const Index m = half_length(x, "general_mapping");
  if (std::equal(x.begin(), x.end(), y.begin())) return identity_sh(m);
  const double d = j_inner(x, y);
  if (std::abs(d) <= pivot_tol * norm2(x) * norm2(y)) throw BreakdownError(BreakdownKind::Mapping, d);
  TransformSH t{-1.0 / d, Vector(x.size()), m, 0};
  for (std::size_t i = 0; i < x.size(); ++i) t.v[i] = y[i] - x[i];
  return t;
}

TransformSH sh1(std::span<const double> a, double rho, double pivot_tol) {
  const Index n = half_length(a, "sh1");
  if (rho == 0.0) throw std::invalid_argument("sh1: rho must be nonzero");
  const double aux = a[0] - rho;
  if (aux == 0.0 && tail_is_zero(a)) return identity_sh(n);
  const double pivot = a[n];
  if (std::abs(pivot) <= pivot_tol * norm2(a)) throw BreakdownError(BreakdownKind::ZeroPivot, pivot);

  TransformSH t{0.0, Vector(a.begin(), a.end()), n, 0};
  if (aux == 0.0) {
    // a(1) already equals rho but the tail does not vanish: unscaled form
    // v = rho e1 - a, c = 1 / (rho a(n+1)).
    for (double& x : t.v) x = -x;
    t.v[0] = 0.0;
    t.c = 1.0 / (rho * pivot);
    return t;
  }
  for (double& x : t.v) x /= aux;
  t.v[0] = 1.0;
  t.c = aux * aux / (rho * pivot);
  return t;
}

TransformSH sh2(std::span<const double> a, double mu, double pivot_tol) {
  const Index n = half_length(a, "sh2");
  if (n == 1) return identity_sh(n);
  if (mu == a[0]) throw std::invalid_argument("sh2: mu must differ from a(1)");
  const double nu = a[n];
  if (std::abs(nu) <= pivot_tol * norm2(a)) throw BreakdownError(BreakdownKind::ZeroNu, nu);

  TransformSH t{0.0, Vector(a.size()), n, 0};
  for (std::size_t i = 0; i < a.size(); ++i) t.v[i] = -a[i];
  t.v[0] = mu - a[0];
  t.v[n] = 0.0;
  t.c = -1.0 / (nu * (a[0] - mu));
  return t;
}

TransformSH osh1(std::span<const double> a, double pivot_tol) {
  half_length(a, "osh1");
  const double norm = norm2(a);
  if (norm == 0.0) throw std::invalid_argument("osh1: vector must be nonzero");
  return sh1(a, sign_of(a[0]) * norm, pivot_tol);
}

TransformSH osh2(std::span<const double> a, double pivot_tol) {
  const Index n = half_length(a, "osh2");
  if (n == 1) return identity_sh(n);
  const double xi = *optimal_params(a).xi;
  if (xi == 0.0) return identity_sh(n);
  const double nu = a[n];
  if (std::abs(nu) <= pivot_tol * norm2(a)) throw BreakdownError(BreakdownKind::ZeroNu, nu);

  TransformSH t{xi / nu, Vector(a.size()), n, 0};
  for (std::size_t i = 0; i < a.size(); ++i) t.v[i] = -a[i] / xi;
  t.v[0] = 1.0;
  t.v[n] = 0.0;
  return t;
}

TransformGivens vlg(Index k, std::span<const double> a) {
  const Index n = half_length(a, "vlg");
  if (k < 0 || k >= n) throw std::invalid_argument("vlg: k out of range");
  const double r = std::hypot(a[k], a[n + k]);
  if (r == 0.0) return {k, 1.0, 0.0, n};
  return {k, a[k] / r, a[n + k] / r, n};
}

TransformVLH vlh(Index k, std::span<const double> a) {
  const Index n = half_length(a, "vlh");
  if (k < 0 || k >= n) throw std::invalid_argument("vlh: k out of range");
  return reflector_from(k, n, a.subspan(static_cast<std::size_t>(k), static_cast<std::size_t>(n - k)));
}

TransformVLH vlh_lower(Index k, std::span<const double> a) {
  const Index n = half_length(a, "vlh_lower");
  if (k < 0 || k >= n) throw std::invalid_argument("vlh_lower: k out of range");
  return reflector_from(k, n,
                        a.subspan(static_cast<std::size_t>(n + k), static_cast<std::size_t>(n - k)));
}

TransformSH embed(const TransformSH& t, Index offset, Dim dim) {
  const Index n = dim.n;
  if (offset < 0 || offset > n - 1) throw std::invalid_argument("embed: offset out of range");
  if (t.m != n - offset || static_cast<Index>(t.v.size()) != 2 * t.m)
    throw std::invalid_argument("embed: transform size does not match n - offset");
  TransformSH out{t.c, Vector(static_cast<std::size_t>(2 * n), 0.0), n, t.offset + offset};
  for (Index i = 0; i < t.m; ++i) {
    out.v[offset + i] = t.v[i];
    out.v[n + offset + i] = t.v[t.m + i];
  }
  return out;
}

SymplecticTransform adjoint(const SymplecticTransform& t) {
  return std::visit(overloaded{
                        [](const TransformSH& s) -> SymplecticTransform {
                          TransformSH a = s;
                          a.c = -s.c;
                          return a;
                        },
                        [](const TransformGivens& g) -> SymplecticTransform {
                          return TransformGivens{g.k, g.c, -g.s, g.n};
                        },
                        [](const TransformVLH& h) -> SymplecticTransform { return h; },
                    },
                    t);
}

bool is_orthogonal(const SymplecticTransform& t) {
  if (const auto* s = std::get_if<TransformSH>(&t)) return s->is_identity();
  return true;
}

Index half_dim(const SymplecticTransform& t) {
  return std::visit(overloaded{
                        [](const TransformSH& s) { return s.m; },
                        [](const TransformGivens& g) { return g.n; },
                        [](const TransformVLH& h) { return h.n; },
                    },
                    t);
}

void apply_left(const SymplecticTransform& t, DenseMatrix& m) {
  if (m.rows() != 2 * half_dim(t)) throw std::invalid_argument("apply_left: size mismatch");
  std::visit(overloaded{
                 [&](const TransformSH& s) { kernels::parallel::sh_left(s.c, s.v, s.offset, m); },
                 [&](const TransformGivens& g) { kernels::parallel::givens_left(g.k, g.c, g.s, m); },
                 [&](const TransformVLH& h) { kernels::parallel::reflector_left(h.k, h.beta, h.w, m); },
             },
             t);
}

void apply_right_adjoint(const SymplecticTransform& t, DenseMatrix& m) {
  if (m.cols() != 2 * half_dim(t)) throw std::invalid_argument("apply_right_adjoint: size mismatch");
  std::visit(overloaded{
                 [&](const TransformSH& s) { kernels::parallel::sh_right_adjoint(s.c, s.v, s.offset, m); },
                 [&](const TransformGivens& g) {
                   kernels::parallel::givens_right_adjoint(g.k, g.c, g.s, m);
                 },
                 [&](const TransformVLH& h) { kernels::parallel::reflector_right(h.k, h.beta, h.w, m); },
             },
             t);
}

Vector apply(const SymplecticTransform& t, std::span<const double> x) {
  DenseMatrix m(static_cast<Index>(x.size()), 1);
  m.set_column(0, x);
  apply_left(t, m);
  return m.column(0);
}

Vector apply_adjoint(const SymplecticTransform& t, std::span<const double> x) {
  return jhess::apply(adjoint(t), x);
}

DenseMatrix densify(const SymplecticTransform& t, Dim dim) {
  const Index n = dim.n;
  if (half_dim(t) != n) throw std::invalid_argument("densify: dimension mismatch");
  DenseMatrix out = DenseMatrix::identity(2 * n);
  std::visit(overloaded{
                 [&](const TransformSH& s) {
                   // I + c v (v^T J), with (v^T J) = [-v_lower, v_upper]
                   for (Index q = 0; q < 2 * n; ++q) {
                     const double row = q < n ? -s.v[n + q] : s.v[q - n];
                     for (Index p = 0; p < 2 * n; ++p) out(p, q) += s.c * s.v[p] * row;
                   }
                 },
                 [&](const TransformGivens& g) {
                   out(g.k, g.k) = g.c;
                   out(n + g.k, n + g.k) = g.c;
                   out(g.k, n + g.k) = g.s;
                   out(n + g.k, g.k) = -g.s;
                 },
                 [&](const TransformVLH& h) {
                   const Index len = n - h.k;
                   for (Index base : {h.k, n + h.k})
                     for (Index i = 0; i < len; ++i)
                       for (Index j = 0; j < len; ++j) out(base + i, base + j) -= h.beta * h.w[i] * h.w[j];
                 },
             },
             t);
  return out;
}

DenseMatrix densify_adjoint(const SymplecticTransform& t, Dim dim) { return densify(adjoint(t), dim); }

double cond2(const TransformSH& t, Dim dim) {
  return spectral_norm(densify(t, dim)) * spectral_norm(densify_adjoint(t, dim));
}

}  // namespace jhess
