#pragma once

#include "qudits/linalg.hpp"

#include <utility>

namespace qudits {

// Interaction phase for the two-qudit coupling exp(-i tau N1 N2). Only the
// dimensionless product tau = chi*t is tracked. The constructor searches
// tau in {2 pi k/d : k = 0..d-1} for the unique value whose Fourier-dressed
// evolution reproduces the SUM permutation (k = d-1, i.e. tau = 2 pi (d-1)/d
// with our omega^{+ns} phase-state kernel), so the convention verifies itself.
struct SumCalibration {
  int d = 0;
  double tau = 0.0;          // 2 pi k / d
  int phase_steps = 0;       // k
  char sign_convention = '+';  // phase-state kernel sign of the target encoding
};

// SUM: |s1,s2> -> |s1, s1+s2 mod d>, control first, as a d^2 x d^2 permutation.
CMatrix sum_gate_matrix(int d);

// |s1,s2> -> |s1, s2-s1 mod d>.
CMatrix inverse_sum(int d);

// Hybrid-encoding SUM from the number-number coupling exp(-i tau N1 N2):
// returns G = B' exp(-i tau N (x) N) B with B = I (x) F, in index labels,
// together with the calibration that made G equal the SUM permutation.
// Throws std::logic_error if no (or more than one) candidate tau works.
std::pair<CMatrix, SumCalibration> sum_via_number_coupling(int d);

// Same contract with the coupling built from the spin-number generator
// j*I - Jz (spectrum 0..d-1), exp(-i tau (jI-Jz) (x) (jI-Jz)).
std::pair<CMatrix, SumCalibration> sum_via_spin_coupling(int d);

}  // namespace qudits
