#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace jhess {

using Index = std::ptrdiff_t;
using Vector = std::vector<double>;

/// Half-dimension of a symplectic space: every ambient object has size 2n.
struct Dim {
  Index n;

  explicit Dim(Index half) : n(half) {
    if (half < 1) throw std::invalid_argument("Dim: half-dimension must be >= 1");
  }

  Index full() const { return 2 * n; }
};

/// Column-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Index rows, Index cols, double fill = 0.0);

  /// Row-wise literal, mainly for tests: {{1, 2}, {3, 4}}.
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(Index size);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  double& operator()(Index i, Index j) { return data_[static_cast<std::size_t>(j * rows_ + i)]; }
  double operator()(Index i, Index j) const { return data_[static_cast<std::size_t>(j * rows_ + i)]; }

  std::span<double> col(Index j) {
    return {data_.data() + j * rows_, static_cast<std::size_t>(rows_)};
  }
  std::span<const double> col(Index j) const {
    return {data_.data() + j * rows_, static_cast<std::size_t>(rows_)};
  }

  Vector column(Index j) const;
  void set_column(Index j, std::span<const double> values);

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<const double> values() const { return data_; }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);
Vector operator*(const DenseMatrix& a, std::span<const double> x);

DenseMatrix transpose(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);
bool all_finite(const DenseMatrix& a);

double norm2(std::span<const double> x);

}  // namespace jhess
