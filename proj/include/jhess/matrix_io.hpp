#pragma once

// Plain-text matrix files: a "rows cols" header line followed by `rows` lines
// of `cols` whitespace-separated numbers. Values are written with 17
// significant digits, so a write/read cycle reproduces every finite double.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "jhess/dense_matrix.hpp"
#include "jhess/reduction.hpp"

namespace jhess {

/// Malformed file contents (as opposed to an I/O failure).
class MatrixFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The file could not be opened, read or written.
class MatrixIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_matrix(std::ostream& out, const DenseMatrix& m);
DenseMatrix read_matrix(std::istream& in);

void save_matrix(const std::string& path, const DenseMatrix& m);
DenseMatrix load_matrix(const std::string& path);

/// One float per line; alternating rho, mu for each step.
FixedParams load_fixed_params(const std::string& path);

}  // namespace jhess
