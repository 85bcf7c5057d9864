#include "jhess/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "jhess/kernels.hpp"

namespace jhess {

DenseMatrix::DenseMatrix(Index rows, Index cols, double fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows * cols), fill);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<Index>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  data_.assign(static_cast<std::size_t>(rows_ * cols_), 0.0);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != cols_)
      throw std::invalid_argument("DenseMatrix: ragged initializer");
    Index j = 0;
    for (double x : row) (*this)(i, j++) = x;
    ++i;
  }
}

DenseMatrix DenseMatrix::identity(Index size) {
  DenseMatrix m(size, size);
  for (Index i = 0; i < size; ++i) m(i, i) = 1.0;
  return m;
}

Vector DenseMatrix::column(Index j) const {
  const auto c = col(j);
  return {c.begin(), c.end()};
}

void DenseMatrix::set_column(Index j, std::span<const double> values) {
  if (static_cast<Index>(values.size()) != rows_)
    throw std::invalid_argument("set_column: length mismatch");
  std::copy(values.begin(), values.end(), col(j).begin());
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  return kernels::parallel::gemm(a, b);
}

namespace {

template <typename Op>
DenseMatrix elementwise(const DenseMatrix& a, const DenseMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("elementwise: shape mismatch");
  DenseMatrix out(a.rows(), a.cols());
  const auto n = static_cast<Index>(a.values().size());
  for (Index i = 0; i < n; ++i) out.data()[i] = op(a.data()[i], b.data()[i]);
  return out;
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  return elementwise(a, b, [](double x, double y) { return x + y; });
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  return elementwise(a, b, [](double x, double y) { return x - y; });
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (Index i = 0; i < static_cast<Index>(a.values().size()); ++i) out.data()[i] *= s;
  return out;
}

Vector operator*(const DenseMatrix& a, std::span<const double> x) {
  Vector y(static_cast<std::size_t>(a.rows()));
  kernels::parallel::gemv(a, x, y);
  return y;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
  return t;
}

double frobenius_norm(const DenseMatrix& a) { return norm2(a.values()); }

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (double x : a.values()) m = std::max(m, std::abs(x));
  return m;
}

bool all_finite(const DenseMatrix& a) {
  return std::all_of(a.values().begin(), a.values().end(), [](double x) { return std::isfinite(x); });
}

double norm2(std::span<const double> x) {
  // scaled accumulation so large entries don't overflow the sum of squares
  double scale = 0.0;
  double ssq = 1.0;
  for (double v : x) {
    if (v == 0.0) continue;
    const double a = std::abs(v);
    if (scale < a) {
      ssq = 1.0 + ssq * (scale / a) * (scale / a);
      scale = a;
    } else {
      ssq += (a / scale) * (a / scale);
    }
  }
  return scale * std::sqrt(ssq);
}

}  // namespace jhess
