#pragma once

#include "qudits/linalg.hpp"

#include <string>
#include <vector>

namespace qudits {

// Four concrete matrix models of the clock/shift pair (X_d, Z_d) on a
// d-dimensional space, together with the Hermitian phase operator dual to the
// diagonal generator. Conventions used throughout:
//
//   * omega = exp(2*pi*i/d); Z|s> = omega^s |s>, X|s> = |s+1 mod d>.
//   * DFT kernel: F_{t,s} = omega^{+ts}/sqrt(d). With this sign F'ZF = X holds
//     in the number models, and F|s> is the phase state with X-eigenvalue
//     omega^{-s} (so the phase operator of a number model diagonalizes over
//     the conjugate columns F'|s>, while the phase-model computational bases
//     use the F|s> columns).
//   * Spin models live in the (2j+1)-dimensional su(2) irrep, j = (d-1)/2,
//     z-weight basis ordered m = j, j-1, ..., -j, so |s> = |j, j-s)_z sits at
//     index s. Half-integer weights are tracked as exact integer doubles 2j, 2m.
//   * Spin-phase computational basis: |s> = (1/sqrt d) sum_m K(m,s) |j,m)_x with
//     kernel K = exp(2*pi*i*m*s/d) for odd d and exp(2*pi*i*(m+1/2)*s/d) for
//     even d. The x-weight vectors |j,m)_x are fixed by making their first
//     nonvanishing z-component real positive. The ladder unitary is
//     X = exp(+i*pi/d) * exp(2*pi*i*Jx/d) for even d (no prefactor for odd d);
//     the +i*pi/d scalar is what makes X|s> = |s+1> exact under the kernel
//     above, and X^d = 1 holds for both parities.

enum class RealizationKind { SpinNumber, OscNumber, SpinPhase, OscPhase };

const char* kind_name(RealizationKind kind);  // "spin-number", "osc-number", ...
RealizationKind kind_from_name(const std::string& name);

// Angular momentum matrices for the irrep of highest weight j = (d-1)/2, in the
// z-weight basis ordered m = j..-j. Jplus/Jminus carry the standard real
// non-negative matrix elements sqrt(j(j+1) - m(m+-1)).
struct SpinIrrep {
  int d = 0;
  int two_j = 0;  // 2j, exact
  CMatrix Jz, Jplus, Jminus, Jx;

  double j() const { return two_j / 2.0; }
};

// A concrete matrix model of the Pauli generators. All matrices act on the
// d-dimensional ambient space; comp_basis columns give |s> in that space.
// theta is the Hermitian phase operator with integer spectrum 0..d-1 and
//   X = exp(2*pi*i*theta/d)   for the number kinds,
//   Z = exp(2*pi*i*theta/d)   for the phase kinds.
// generator is the Hermitian operator exponentiating to the other Pauli
// generator (j*I - Jz, N, Jx, N respectively).
struct Realization {
  int d = 0;
  RealizationKind kind = RealizationKind::SpinNumber;
  CMatrix comp_basis;  // columns = |0>, ..., |d-1>
  CMatrix X, Z, theta, generator;

  CVector basis_state(int s) const { return comp_basis.column(static_cast<std::size_t>(s)); }
};

SpinIrrep build_spin_irrep(int d);

Realization build_spin_number(int d);
Realization build_osc_number(int d);
Realization build_spin_phase(int d);
Realization build_osc_phase(int d);
Realization build_realization(RealizationKind kind, int d);

// The d phase states of the spin-phase model, as columns over the z-weight
// ambient basis.
std::vector<CVector> build_phase_states(int d);

// F_{t,s} = omega^{ts}/sqrt(d).
CMatrix fourier_matrix(int d);

}  // namespace qudits
