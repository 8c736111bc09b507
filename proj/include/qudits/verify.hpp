#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qudits {

struct VerifyOptions {
  int d_min = 2;
  int d_max = 16;
  double tol_unit = 1e-10;    // unitarity / reconstruction residuals
  double tol_action = 1e-10;  // basis-action and relation residuals
  std::uint64_t seed = 12345;
  // Test hook: corrupt a single operator entry by 1e-6 before checking, to
  // prove the sweep actually fails on bad input.
  bool inject_perturbation = false;
};

struct InvariantResult {
  std::string name;   // e.g. "weyl_relation"
  std::string scope;  // e.g. "spin-phase d=7"
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Runs the full invariant suite (realizations, exact Pauli homomorphism,
// Hilbert-Schmidt orthogonality, phase states, SUM calibration) over
// d in [d_min, d_max]. Deterministic for a fixed seed. Coupling-calibration
// checks are limited to d <= 16 inside the sweep; everything else covers the
// whole range.
std::vector<InvariantResult> run_verification(const VerifyOptions& options);

// Aggregated view: one row per invariant name with the worst residual and the
// scope where it occurred.
std::vector<InvariantResult> summarize(const std::vector<InvariantResult>& rows);

bool all_passed(const std::vector<InvariantResult>& rows);

}  // namespace qudits
