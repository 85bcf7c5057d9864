#include "jhess/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace jhess {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

double parse_double(std::string_view tok) {
  // from_chars rejects a leading '+', which is still a valid decimal token
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value))
    throw MatrixFormatError("invalid matrix entry '" + std::string(tok) + "'");
  return value;
}

Index parse_dim(std::string_view tok) {
  Index value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw MatrixFormatError("invalid dimension '" + std::string(tok) + "'");
  return value;
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line))
    if (!split_ws(line).empty()) return true;
  return false;
}

}  // namespace

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  char buf[40];
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << (j ? " " : "") << buf;
    }
    out << '\n';
  }
}

DenseMatrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw MatrixFormatError("missing header line");
  const auto header = split_ws(line);
  if (header.size() != 2) throw MatrixFormatError("header must be 'rows cols'");
  const Index rows = parse_dim(header[0]);
  const Index cols = parse_dim(header[1]);

  DenseMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    if (!next_content_line(in, line))
      throw MatrixFormatError("expected " + std::to_string(rows) + " rows, got " + std::to_string(i));
    const auto tokens = split_ws(line);
    if (static_cast<Index>(tokens.size()) != cols)
      throw MatrixFormatError("row " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) +
                              " entries, expected " + std::to_string(cols));
    for (Index j = 0; j < cols; ++j) m(i, j) = parse_double(tokens[static_cast<std::size_t>(j)]);
  }
  if (next_content_line(in, line)) throw MatrixFormatError("trailing data after last row");
  return m;
}

void save_matrix(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MatrixIoError("cannot open '" + path + "' for writing");
  write_matrix(out, m);
  out.flush();
  if (!out) throw MatrixIoError("failed writing '" + path + "'");
}

DenseMatrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatrixIoError("cannot open '" + path + "'");
  return read_matrix(in);
}

FixedParams load_fixed_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixIoError("cannot open '" + path + "'");
  FixedParams p;
  std::string line;
  std::size_t count = 0;
  while (next_content_line(in, line)) {
    const auto tokens = split_ws(line);
    if (tokens.size() != 1) throw MatrixFormatError("parameter file: one value per line");
    const double x = parse_double(tokens[0]);
    (count++ % 2 == 0 ? p.rho : p.mu).push_back(x);
  }
  return p;
}

}  // namespace jhess
