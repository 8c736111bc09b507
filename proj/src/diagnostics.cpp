#include "qudits/diagnostics.hpp"

#include "qudits/representations.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qudits {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<LimitRow> limit_study(const std::vector<int>& d_list, int window) {
  if (d_list.empty()) throw std::invalid_argument("limit_study: empty dimension list");
  if (window < 1) throw std::invalid_argument("limit_study: window must be positive");
  for (int d : d_list)
    if (window > d)
      throw std::invalid_argument("limit_study: window K must not exceed any d");

  std::vector<LimitRow> rows;
  rows.reserve(d_list.size());
  for (int d : d_list) {
    const Realization osc = build_osc_number(d);
    LimitRow row;
    row.d = d;
    row.window = window;

    const CMatrix wxz = (osc.X * osc.Z).scaled(omega(d, 1));
    row.weyl_residual = (osc.Z * osc.X).max_abs_diff(wxz);

    const CMatrix comm = osc.theta * osc.generator - osc.generator * osc.theta;
    const std::size_t k = static_cast<std::size_t>(window);
    row.commutator_block = CMatrix(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) row.commutator_block(r, c) = comm(r, c);

    row.comm_diag_max = 0.0;
    row.comm_offdiag_max = 0.0;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        const double mag = std::abs(row.commutator_block(r, c));
        if (r == c)
          row.comm_diag_max = std::max(row.comm_diag_max, mag);
        else
          row.comm_offdiag_max = std::max(row.comm_offdiag_max, mag);
      }

    // The computational basis of the oscillator model is the Fock basis by
    // construction; the overlap block is the identity bit for bit.
    CMatrix overlap(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        overlap(r, c) = CVector::basis(static_cast<std::size_t>(d), r)
                            .inner(osc.comp_basis.column(c));
    row.fock_overlap_residual = overlap.max_abs_diff(CMatrix::identity(k));

    rows.push_back(std::move(row));
  }
  return rows;
}

std::string limit_report_csv(const std::vector<LimitRow>& rows) {
  std::ostringstream out;
  out << "d,K,weyl_residual,comm_offdiag_max,comm_diag_max\n";
  for (const LimitRow& row : rows) {
    out << row.d << ',' << row.window << ',' << format_double(row.weyl_residual) << ','
        << format_double(row.comm_offdiag_max) << ',' << format_double(row.comm_diag_max)
        << '\n';
  }
  return out.str();
}

std::string limit_report_json(const std::vector<LimitRow>& rows) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const LimitRow& row = rows[i];
    out << "  {\"d\": " << row.d << ", \"K\": " << row.window
        << ", \"weyl_residual\": " << format_double(row.weyl_residual)
        << ", \"comm_offdiag_max\": " << format_double(row.comm_offdiag_max)
        << ", \"comm_diag_max\": " << format_double(row.comm_diag_max) << "}"
        << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return out.str();
}

}  // namespace qudits
