#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qudits/representations.hpp"
#include "qudits/serialize.hpp"
#include "test_helpers.hpp"

#include <numbers>

using namespace qudits;
using test_helpers::ref_multiply;
using test_helpers::sigma_x;
using test_helpers::sigma_z;

namespace {

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

void check_realization_invariants(const Realization& r) {
  const int d = r.d;
  CAPTURE(kind_name(r.kind));
  CAPTURE(d);
  CHECK(unitary_residual(r.comp_basis) < 1e-12);
  CHECK(r.X.is_unitary(1e-10));
  CHECK(r.Z.is_unitary(1e-10));
  for (int s = 0; s < d; ++s) {
    CHECK((r.X * r.basis_state(s)).max_abs_diff(r.basis_state((s + 1) % d)) < 1e-10);
    CHECK((r.Z * r.basis_state(s)).max_abs_diff(r.basis_state(s).scaled(omega(d, s))) < 1e-10);
  }
  const CMatrix eye = CMatrix::identity(static_cast<std::size_t>(d));
  CHECK(r.X.pow(static_cast<unsigned>(d)).max_abs_diff(eye) < 1e-10);
  CHECK(r.Z.pow(static_cast<unsigned>(d)).max_abs_diff(eye) < 1e-10);
  CHECK((r.Z * r.X).max_abs_diff((r.X * r.Z).scaled(omega(d, 1))) < 1e-10);
}

}  // namespace

TEST_CASE("spin irrep small cases") {
  const SpinIrrep half = build_spin_irrep(2);
  CHECK(half.Jz.max_abs_diff(CMatrix::diagonal_real({0.5, -0.5})) == 0.0);
  CHECK(half.Jx.max_abs_diff(sigma_x().scaled(0.5)) == 0.0);

  // J+ |1,0> = sqrt(2) |1,1> for d=3 (j=1): entry at (index of m=1, index of m=0).
  const SpinIrrep one = build_spin_irrep(3);
  CHECK(std::abs(one.Jplus(0, 1) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(one.Jplus(1, 2) - std::sqrt(2.0)) < 1e-15);

  CHECK_THROWS_AS(build_spin_irrep(1), std::invalid_argument);
}

TEST_CASE("spin irrep commutation relations and Casimir") {
  for (int d = 2; d <= 10; ++d) {
    const SpinIrrep irrep = build_spin_irrep(d);
    CAPTURE(d);
    CHECK(commutator(irrep.Jz, irrep.Jplus).max_abs_diff(irrep.Jplus) < 1e-12);
    CHECK(commutator(irrep.Jz, irrep.Jminus).max_abs_diff(irrep.Jminus.scaled(-1.0)) < 1e-12);
    CHECK(commutator(irrep.Jplus, irrep.Jminus).max_abs_diff(irrep.Jz.scaled(2.0)) < 1e-12);
    CHECK(hermitian_residual(irrep.Jx) == 0.0);

    const CMatrix jy = (irrep.Jplus - irrep.Jminus).scaled(Complex{0, -0.5});
    const CMatrix casimir = irrep.Jx * irrep.Jx + jy * jy + irrep.Jz * irrep.Jz;
    const double j = irrep.j();
    CHECK(casimir.max_abs_diff(
              CMatrix::identity(static_cast<std::size_t>(d)).scaled(j * (j + 1))) < 1e-12);
  }
}

TEST_CASE("spin-number model reduces to the Pauli matrices at d=2") {
  const Realization r = build_spin_number(2);
  CHECK(r.X.max_abs_diff(sigma_x()) == 0.0);
  CHECK(r.Z.max_abs_diff(sigma_z()) < 1e-15);
}

TEST_CASE("spin-number clock is diag(1, w, w^2) at d=3") {
  const Realization r = build_spin_number(3);
  CHECK(r.Z.max_abs_diff(test_helpers::ref_clock(3)) == 0.0);
}

TEST_CASE("number models: phase operator generates the ladder") {
  for (int d = 2; d <= 16; ++d) {
    for (const Realization& r : {build_spin_number(d), build_osc_number(d)}) {
      CAPTURE(kind_name(r.kind));
      CHECK(exp_i_hermitian(r.theta, 2.0 * std::numbers::pi / d).max_abs_diff(r.X) < 1e-10);
    }
  }
}

TEST_CASE("oscillator model basics") {
  const Realization r2 = build_osc_number(2);
  CHECK(r2.X.max_abs_diff(sigma_x()) == 0.0);

  for (int d : {2, 3, 5, 8}) {
    const Realization r = build_osc_number(d);
    for (int n = 0; n < d; ++n) {
      const CVector fock = CVector::basis(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
      CHECK((r.Z * fock).max_abs_diff(fock.scaled(omega(d, n))) < 1e-15);
    }
    CHECK(r.generator.max_abs_diff(CMatrix::diagonal_real([&] {
            std::vector<double> v(static_cast<std::size_t>(d));
            for (int n = 0; n < d; ++n) v[static_cast<std::size_t>(n)] = n;
            return v;
          }())) == 0.0);
  }
}

TEST_CASE("phase states form an orthonormal basis") {
  for (int d = 2; d <= 16; ++d) {
    const std::vector<CVector> states = build_phase_states(d);
    CAPTURE(d);
    REQUIRE(states.size() == static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t k = 0; k < states.size(); ++k)
        CHECK(std::abs(states[i].inner(states[k]) - (i == k ? 1.0 : 0.0)) < 1e-10);
  }
}

TEST_CASE("d=2 phase states coincide with the z basis up to phase") {
  const std::vector<CVector> states = build_phase_states(2);
  for (std::size_t s = 0; s < 2; ++s)
    CHECK(std::abs(states[s].inner(CVector::basis(2, s))) > 1.0 - 1e-12);
}

TEST_CASE("d=3 phase state Gram matrix from the explicit kernel") {
  // <ph_s|ph_s'> = (1/3) sum_m exp(2 pi i m (s'-s)/3) over m in {-1,0,1}.
  for (int s = 0; s < 3; ++s)
    for (int sp = 0; sp < 3; ++sp) {
      Complex kernel_sum = 0.0;
      for (int m = -1; m <= 1; ++m)
        kernel_sum += std::polar(1.0, 2.0 * std::numbers::pi * m * (sp - s) / 3.0);
      kernel_sum /= 3.0;
      const std::vector<CVector> states = build_phase_states(3);
      CHECK(std::abs(states[static_cast<std::size_t>(s)].inner(
                         states[static_cast<std::size_t>(sp)]) -
                     kernel_sum) < 1e-12);
    }
}

TEST_CASE("spin-phase rotation ladder for both parities") {
  for (int d = 2; d <= 9; ++d) {
    const Realization r = build_spin_phase(d);
    CAPTURE(d);
    for (int s = 0; s < d; ++s)
      CHECK((r.X * r.basis_state(s)).max_abs_diff(r.basis_state((s + 1) % d)) < 1e-10);
    CHECK(r.X.pow(static_cast<unsigned>(d))
              .max_abs_diff(CMatrix::identity(static_cast<std::size_t>(d))) < 1e-10);
  }
}

TEST_CASE("qubit rotation identity |1> = (-i) exp(i pi/2 X) |0>") {
  const Realization r = build_spin_phase(2);
  REQUIRE(hermitian_residual(r.X) < 1e-12);  // X2 is Hermitian as well as unitary
  const CVector rotated =
      (exp_i_hermitian(r.X, std::numbers::pi / 2) * r.basis_state(0)).scaled(Complex{0, -1});
  CHECK(rotated.max_abs_diff(r.basis_state(1)) < 1e-12);
}

TEST_CASE("osc-phase ladder via the DFT identity") {
  for (int d = 2; d <= 16; ++d) {
    const Realization r = build_osc_phase(d);
    CAPTURE(d);
    for (int s = 0; s < d; ++s)
      CHECK((r.X * r.basis_state(s)).max_abs_diff(r.basis_state((s + 1) % d)) < 1e-10);
    CHECK((r.Z * r.X).max_abs_diff((r.X * r.Z).scaled(omega(d, 1))) < 1e-10);
  }
}

TEST_CASE("osc-phase at d=2 is the Hadamard-rotated qubit") {
  const Realization r = build_osc_phase(2);
  const CMatrix h = fourier_matrix(2);
  CHECK(r.X.max_abs_diff(ref_multiply(ref_multiply(h, sigma_x()), h)) < 1e-14);
}

TEST_CASE("fourier matrix") {
  const CMatrix h = fourier_matrix(2);
  CMatrix hadamard(2, 2);
  const double a = 1.0 / std::sqrt(2.0);
  hadamard(0, 0) = a;
  hadamard(0, 1) = a;
  hadamard(1, 0) = a;
  hadamard(1, 1) = -a;
  CHECK(h.max_abs_diff(hadamard) < 1e-15);

  for (int d = 2; d <= 16; ++d) {
    const CMatrix u = fourier_matrix(d);
    CAPTURE(d);
    CHECK(u.is_unitary(1e-12));
    const Realization osc = build_osc_number(d);
    CHECK((u.adjoint() * osc.Z * u).max_abs_diff(osc.X) < 1e-10);
    CHECK(u.pow(4).max_abs_diff(CMatrix::identity(static_cast<std::size_t>(d))) < 1e-10);
  }
}

TEST_CASE("all realizations satisfy the defining relations for d=2..32") {
  for (int d = 2; d <= 32; ++d)
    for (const RealizationKind kind :
         {RealizationKind::SpinNumber, RealizationKind::OscNumber, RealizationKind::SpinPhase,
          RealizationKind::OscPhase})
      check_realization_invariants(build_realization(kind, d));
}

TEST_CASE("duality: the tagged phase operator exponentiates to the ladder") {
  for (int d = 2; d <= 16; ++d)
    for (const RealizationKind kind :
         {RealizationKind::SpinNumber, RealizationKind::OscNumber, RealizationKind::SpinPhase,
          RealizationKind::OscPhase}) {
      const Realization r = build_realization(kind, d);
      const bool number_kind =
          kind == RealizationKind::SpinNumber || kind == RealizationKind::OscNumber;
      const CMatrix& expected = number_kind ? r.X : r.Z;
      CAPTURE(kind_name(kind));
      CHECK(exp_i_hermitian(r.theta, 2.0 * std::numbers::pi / d).max_abs_diff(expected) < 1e-10);
    }
}

TEST_CASE("theta spectrum is exactly 0..d-1") {
  for (int d : {2, 3, 6, 9, 16}) {
    for (const RealizationKind kind :
         {RealizationKind::SpinNumber, RealizationKind::OscNumber, RealizationKind::SpinPhase,
          RealizationKind::OscPhase}) {
      const EigResult eig = eig_hermitian(build_realization(kind, d).theta);
      for (int k = 0; k < d; ++k)
        CHECK(std::abs(eig.eigenvalues[static_cast<std::size_t>(k)] - k) < 1e-10);
    }
  }
}

TEST_CASE("unitary equivalence between the number models") {
  for (int d = 2; d <= 12; ++d) {
    const Realization spin = build_spin_number(d);
    const Realization osc = build_osc_number(d);
    // W columns = osc comp basis expressed in the spin ambient basis; both
    // computational bases are the index basis so W is the identity and the
    // generator matrices agree entry for entry.
    const CMatrix w = spin.comp_basis.adjoint() * osc.comp_basis;
    CHECK((w.adjoint() * spin.X * w).max_abs_diff(osc.X) == 0.0);
    CHECK((w.adjoint() * spin.Z * w).max_abs_diff(osc.Z) == 0.0);
    CHECK(spin.generator.max_abs_diff(osc.generator) == 0.0);
  }
}

TEST_CASE("qubit reduction: every model is sigma_x/sigma_z in its own basis") {
  for (const RealizationKind kind :
       {RealizationKind::SpinNumber, RealizationKind::OscNumber, RealizationKind::SpinPhase,
        RealizationKind::OscPhase}) {
    const Realization r = build_realization(kind, 2);
    const CMatrix& w = r.comp_basis;
    CAPTURE(kind_name(kind));
    CHECK((w.adjoint() * r.X * w).max_abs_diff(sigma_x()) < 1e-12);
    CHECK((w.adjoint() * r.Z * w).max_abs_diff(sigma_z()) < 1e-12);
  }
}

TEST_CASE("realization JSON dump carries explicit re/im pairs") {
  const Realization r = build_spin_phase(3);
  const nlohmann::json doc = realization_to_json(r);
  CHECK(doc["d"] == 3);
  CHECK(doc["kind"] == "spin-phase");
  CHECK(doc["comp_basis"].size() == 3);
  CHECK(doc["X"]["entries"].size() == 9);
  CHECK(doc["X"]["entries"][0].size() == 2);
  // round-trip one matrix
  const auto& entries = doc["Z"]["entries"];
  CMatrix z(3, 3);
  for (std::size_t i = 0; i < 9; ++i)
    z(i / 3, i % 3) = Complex{entries[i][0].get<double>(), entries[i][1].get<double>()};
  CHECK(z.max_abs_diff(r.Z) == 0.0);
}
