#include "jhess/experiments.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "jhess/symplectic.hpp"

namespace jhess {

namespace {

void require_family_size(Index n) {
  if (n < 2) throw std::invalid_argument("test family needs n >= 2");
}

// M11 and M12 are shared by both families.
void fill_upper_blocks(DenseMatrix& a, Index n) {
  for (Index i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    a(i, n + i) = 1.0;
    if (i + 1 < n) {
      a(i + 1, i) = 2.0;
      a(i, n + i + 1) = 2.0;
      a(i + 1, n + i) = 2.0;
    }
  }
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", x);
  return buf;
}

}  // namespace

DenseMatrix gen_family1(Index n) {
  require_family_size(n);
  DenseMatrix a(2 * n, 2 * n);
  fill_upper_blocks(a, n);
  for (Index i = 0; i < n; ++i) {
    if (i > 0) a(n + i, i) = 1.0;
    if (i + 1 < n) a(n + i, i + 1) = 2.0;
    a(n + i, n + i) = 1.0;
    if (i + 1 < n) a(n + i + 1, n + i) = 3.0;
  }
  return a;
}

DenseMatrix gen_family2(Index n) {
  require_family_size(n);
  DenseMatrix a(2 * n, 2 * n);
  fill_upper_blocks(a, n);
  for (Index i = 1; i < n; ++i) {
    a(n + i, i) = 1.0;
    if (i + 1 < n) {
      a(n + i, i + 1) = 3.0;
      a(n + i + 1, i) = 3.0;
    }
  }
  // M22 = -M11^T
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(n + i, n + j) = -a(j, i);
  return a;
}

DenseMatrix gen_family(int family, Index n) {
  switch (family) {
    case 1: return gen_family1(n);
    case 2: return gen_family2(n);
    default: throw std::invalid_argument("family must be 1 or 2");
  }
}

std::vector<SweepRow> run_sweep(int family, Index n_min, Index n_max,
                                const std::vector<Variant>& variants, ReductionOptions opts) {
  if (family != 1 && family != 2) throw std::invalid_argument("family must be 1 or 2");
  if (n_min < 2 || n_max < n_min) throw std::invalid_argument("need 2 <= n_min <= n_max");
  opts.breakdown_fallback = true;
  opts.compute_diagnostics = true;
  opts.on_step = nullptr;

  const auto nv = static_cast<Index>(variants.size());
  const Index count = (n_max - n_min + 1) * nv;
  std::vector<SweepRow> rows(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic)
  for (Index idx = 0; idx < count; ++idx) {
    SweepRow& row = rows[static_cast<std::size_t>(idx)];
    row.n = n_min + idx / nv;
    row.variant = variants[static_cast<std::size_t>(idx % nv)];
    const DenseMatrix a = gen_family(family, row.n);
    try {
      const ReductionResult r = reduce(a, row.variant, opts);
      row.orth_loss = r.orth_loss;
      row.red_err = r.red_err;
      DenseMatrix loss = adjoint_mat(r.s) * r.s;
      for (Index i = 0; i < loss.rows(); ++i) loss(i, i) -= 1.0;
      row.orth_loss_fro = frobenius_norm(loss);
      row.red_err_fro = frobenius_norm(r.h - adjoint_mat(r.s) * a * r.s);
      row.fallback_count = static_cast<int>(r.fallbacks_used.size());
      row.status = RowStatus::Ok;
    } catch (const BreakdownError&) {
      row.status = RowStatus::Breakdown;
    }
  }
  return rows;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "markdown" || name == "md") return TableFormat::Markdown;
  throw std::invalid_argument("unknown table format '" + name + "'");
}

std::string emit_table(const std::vector<SweepRow>& rows, TableFormat format, bool verbose) {
  std::vector<std::string> header = {"n", "variant", "orth_loss", "red_err", "fallbacks", "status"};
  if (verbose) {
    header.push_back("orth_loss_fro");
    header.push_back("red_err_fro");
  }

  std::ostringstream out;
  auto emit_line = [&](const std::vector<std::string>& cells) {
    if (format == TableFormat::Csv) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    } else {
      out << "|";
      for (const auto& c : cells) out << ' ' << c << " |";
    }
    out << '\n';
  };

  emit_line(header);
  if (format == TableFormat::Markdown) emit_line(std::vector<std::string>(header.size(), "---"));

  for (const SweepRow& r : rows) {
    const bool ok = r.status == RowStatus::Ok;
    auto metric = [&](double x) { return ok ? sci(x) : std::string("fail"); };
    std::vector<std::string> cells = {std::to_string(r.n), to_string(r.variant), metric(r.orth_loss),
                                      metric(r.red_err), std::to_string(r.fallback_count),
                                      ok ? "ok" : "breakdown"};
    if (verbose) {
      cells.push_back(metric(r.orth_loss_fro));
      cells.push_back(metric(r.red_err_fro));
    }
    emit_line(cells);
  }
  return out.str();
}

}  // namespace jhess
