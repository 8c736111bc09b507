#include "qudits/representations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qudits {

namespace {

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be at least 2");
}

// diag(0, 1, ..., d-1)
CMatrix index_diagonal(int d) {
  std::vector<double> diag(static_cast<std::size_t>(d));
  for (int n = 0; n < d; ++n) diag[static_cast<std::size_t>(n)] = n;
  return CMatrix::diagonal_real(diag);
}

// Cyclic shift on index labels, X e_s = e_{s+1 mod d}.
CMatrix shift_matrix(int d) {
  CMatrix x(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s) x(static_cast<std::size_t>((s + 1) % d), static_cast<std::size_t>(s)) = 1.0;
  return x;
}

// diag(omega^0, ..., omega^{d-1})
CMatrix clock_matrix(int d) {
  std::vector<Complex> diag(static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s) diag[static_cast<std::size_t>(s)] = omega(d, s);
  return CMatrix::diagonal(diag);
}

// sum_s s |cols_s><cols_s| for orthonormal columns.
CMatrix integer_spectrum_operator(const CMatrix& cols) {
  const std::size_t d = cols.cols();
  CMatrix out(d, d);
  for (std::size_t s = 0; s < d; ++s) {
    if (s == 0) continue;  // zero eigenvalue contributes nothing
    const CVector v = cols.column(s);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        out(r, c) += static_cast<double>(s) * v[r] * std::conj(v[c]);
  }
  return out;
}

}  // namespace

const char* kind_name(RealizationKind kind) {
  switch (kind) {
    case RealizationKind::SpinNumber: return "spin-number";
    case RealizationKind::OscNumber: return "osc-number";
    case RealizationKind::SpinPhase: return "spin-phase";
    case RealizationKind::OscPhase: return "osc-phase";
  }
  throw std::logic_error("unreachable realization kind");
}

RealizationKind kind_from_name(const std::string& name) {
  if (name == "spin-number") return RealizationKind::SpinNumber;
  if (name == "osc-number") return RealizationKind::OscNumber;
  if (name == "spin-phase") return RealizationKind::SpinPhase;
  if (name == "osc-phase") return RealizationKind::OscPhase;
  throw std::invalid_argument("unknown realization kind: " + name);
}

SpinIrrep build_spin_irrep(int d) {
  require_dim(d);
  SpinIrrep irrep;
  irrep.d = d;
  irrep.two_j = d - 1;
  const std::size_t n = static_cast<std::size_t>(d);

  irrep.Jz = CMatrix(n, n);
  for (int t = 0; t < d; ++t) {
    const int two_m = irrep.two_j - 2 * t;  // index t holds weight m = j - t
    irrep.Jz(static_cast<std::size_t>(t), static_cast<std::size_t>(t)) = two_m / 2.0;
  }

  // J+|j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>; with 2j, 2m integer bookkeeping
  // the radicand is ((2j)(2j+2) - (2m)(2m+2))/4, exact in small integers.
  irrep.Jplus = CMatrix(n, n);
  irrep.Jminus = CMatrix(n, n);
  for (int t = 1; t < d; ++t) {
    const int two_m = irrep.two_j - 2 * t;  // source weight for J+
    const long long num = static_cast<long long>(irrep.two_j) * (irrep.two_j + 2) -
                          static_cast<long long>(two_m) * (two_m + 2);
    const double amp = std::sqrt(static_cast<double>(num) / 4.0);
    irrep.Jplus(static_cast<std::size_t>(t - 1), static_cast<std::size_t>(t)) = amp;
    irrep.Jminus(static_cast<std::size_t>(t), static_cast<std::size_t>(t - 1)) = amp;
  }

  irrep.Jx = (irrep.Jplus + irrep.Jminus).scaled(0.5);
  return irrep;
}

CMatrix fourier_matrix(int d) {
  require_dim(d);
  const std::size_t n = static_cast<std::size_t>(d);
  CMatrix u(n, n);
  const double root = std::sqrt(static_cast<double>(d));
  for (int t = 0; t < d; ++t)
    for (int s = 0; s < d; ++s)
      u(static_cast<std::size_t>(t), static_cast<std::size_t>(s)) =
          omega(d, static_cast<long long>(t) * s) / root;
  return u;
}

Realization build_spin_number(int d) {
  require_dim(d);
  const SpinIrrep irrep = build_spin_irrep(d);
  const std::size_t n = static_cast<std::size_t>(d);

  Realization r;
  r.d = d;
  r.kind = RealizationKind::SpinNumber;
  r.comp_basis = CMatrix::identity(n);  // |s> = |j, j-s)_z sits at index s

  // Cyclic ladder sum |j,m)(j,m+1| with |j,j+1) = |j,-j): index form e_s -> e_{s+1}.
  r.X = CMatrix(n, n);
  for (int t = 0; t < d; ++t) {
    const int bra = t;                 // weight m+1 at index t
    const int ket = (t + 1) % d;       // weight m, cyclically
    r.X(static_cast<std::size_t>(ket), static_cast<std::size_t>(bra)) = 1.0;
  }

  // Z = exp(2 pi i (j - Jz)/d): diagonal omega^{j-m}, with j - m kept in exact
  // integer halves so the entries are omega^s on the nose.
  r.Z = CMatrix(n, n);
  for (int t = 0; t < d; ++t) {
    const int two_m = irrep.two_j - 2 * t;
    r.Z(static_cast<std::size_t>(t), static_cast<std::size_t>(t)) =
        omega(d, (irrep.two_j - two_m) / 2);
  }

  const CMatrix f = fourier_matrix(d);
  r.theta = f.adjoint() * index_diagonal(d) * f;

  // j*I - Jz, diagonal with exact entries 0..d-1.
  r.generator = CMatrix(n, n);
  for (int t = 0; t < d; ++t)
    r.generator(static_cast<std::size_t>(t), static_cast<std::size_t>(t)) =
        irrep.two_j / 2.0 - (irrep.two_j - 2 * t) / 2.0;
  return r;
}

Realization build_osc_number(int d) {
  require_dim(d);
  Realization r;
  r.d = d;
  r.kind = RealizationKind::OscNumber;
  r.comp_basis = CMatrix::identity(static_cast<std::size_t>(d));  // first d Fock states
  r.X = shift_matrix(d);
  r.generator = index_diagonal(d);  // N restricted to the truncated space

  // Z = exp(2 pi i N/d), diagonal omega^n.
  r.Z = clock_matrix(d);

  // Pegg-Barnett style phase operator: eigenvectors are the conjugate DFT
  // columns F'|s> (the X-eigenvectors with eigenvalue omega^s), so that
  // exp(2 pi i theta/d) = F'ZF = X.
  const CMatrix f = fourier_matrix(d);
  r.theta = f.adjoint() * index_diagonal(d) * f;
  return r;
}

std::vector<CVector> build_phase_states(int d) {
  require_dim(d);
  const SpinIrrep irrep = build_spin_irrep(d);
  const EigResult eig = eig_hermitian(irrep.Jx);
  const std::size_t n = static_cast<std::size_t>(d);

  // Column k of the eigenbasis carries weight m = -j + k (ascending). Fix each
  // |j,m)_x by making its first nonvanishing z-component real positive. The
  // leading components shrink like 2^{-j} (about 3e-10 at d = 64), so the
  // nonzero cutoff sits well below that but above eigensolver noise.
  CMatrix xbasis = eig.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      const Complex lead = xbasis(r, c);
      if (std::abs(lead) > 1e-12) {
        const Complex phase = std::conj(lead) / std::abs(lead);
        for (std::size_t rr = 0; rr < n; ++rr) xbasis(rr, c) *= phase;
        break;
      }
    }
  }

  const double root = std::sqrt(static_cast<double>(d));
  const bool even = (d % 2 == 0);
  std::vector<CVector> states;
  states.reserve(n);
  for (int s = 0; s < d; ++s) {
    CVector state(n);
    for (int k = 0; k < d; ++k) {
      const int two_m = -irrep.two_j + 2 * k;
      // exp(2 pi i m s/d) odd d, exp(2 pi i (m+1/2) s/d) even d; both reduce
      // to pi*(2m + parity)*s/d with an exact integer numerator.
      const long long steps = static_cast<long long>(two_m + (even ? 1 : 0)) * s;
      const Complex coeff = std::polar(1.0, std::numbers::pi * static_cast<double>(steps) / d) / root;
      const CVector xcol = xbasis.column(static_cast<std::size_t>(k));
      for (std::size_t r = 0; r < n; ++r) state[r] += coeff * xcol[r];
    }
    states.push_back(state);
  }
  return states;
}

Realization build_spin_phase(int d) {
  require_dim(d);
  const SpinIrrep irrep = build_spin_irrep(d);
  const std::size_t n = static_cast<std::size_t>(d);

  Realization r;
  r.d = d;
  r.kind = RealizationKind::SpinPhase;

  const std::vector<CVector> states = build_phase_states(d);
  r.comp_basis = CMatrix(n, n);
  for (std::size_t s = 0; s < n; ++s) r.comp_basis.set_column(s, states[s]);

  r.X = exp_i_hermitian(irrep.Jx, 2.0 * std::numbers::pi / d);
  if (d % 2 == 0) r.X = r.X.scaled(std::polar(1.0, std::numbers::pi / d));

  // Z = sum_s omega^s |s><s| and theta = sum_s s |s><s| over the phase states.
  r.Z = r.comp_basis * clock_matrix(d) * r.comp_basis.adjoint();
  r.theta = integer_spectrum_operator(r.comp_basis);
  r.generator = irrep.Jx;
  return r;
}

Realization build_osc_phase(int d) {
  require_dim(d);
  Realization r;
  r.d = d;
  r.kind = RealizationKind::OscPhase;
  r.comp_basis = fourier_matrix(d);  // |s> = F|n=s>, finite-d phase states
  r.X = clock_matrix(d);             // exp(2 pi i N/d) on the truncated space
  r.Z = r.comp_basis * clock_matrix(d) * r.comp_basis.adjoint();
  r.theta = integer_spectrum_operator(r.comp_basis);
  r.generator = index_diagonal(d);
  return r;
}

Realization build_realization(RealizationKind kind, int d) {
  switch (kind) {
    case RealizationKind::SpinNumber: return build_spin_number(d);
    case RealizationKind::OscNumber: return build_osc_number(d);
    case RealizationKind::SpinPhase: return build_spin_phase(d);
    case RealizationKind::OscPhase: return build_osc_phase(d);
  }
  throw std::logic_error("unreachable realization kind");
}

}  // namespace qudits
