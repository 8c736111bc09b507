#pragma once

#include "qudits/linalg.hpp"

#include <string>
#include <vector>

namespace qudits {

// One row of the number-phase commutator study at dimension d: the commutator
// [theta_z, N] of the oscillator number model, restricted to the lowest K Fock
// states, with the Weyl relation residual ||ZX - w XZ||_max as a cross-check
// (exact at every finite d). The report is descriptive; no convergence claim
// is asserted or implied.
struct LimitRow {
  int d = 0;
  int window = 0;
  double weyl_residual = 0.0;
  double comm_offdiag_max = 0.0;
  double comm_diag_max = 0.0;
  CMatrix commutator_block;          // K x K, [theta_z, N] on the window
  double fock_overlap_residual = 0.0;  // ||<comp|Fock> - I_K||_max, identically 0
};

std::vector<LimitRow> limit_study(const std::vector<int>& d_list, int window);

// CSV with header d,K,weyl_residual,comm_offdiag_max,comm_diag_max; byte
// deterministic for a given input.
std::string limit_report_csv(const std::vector<LimitRow>& rows);
// JSON mirror of the CSV columns.
std::string limit_report_json(const std::vector<LimitRow>& rows);

}  // namespace qudits
