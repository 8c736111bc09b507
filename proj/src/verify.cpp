#include "qudits/verify.hpp"

#include "qudits/gates.hpp"
#include "qudits/linalg.hpp"
#include "qudits/pauli.hpp"
#include "qudits/representations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qudits {

namespace {

constexpr int kCouplingSweepCap = 16;  // d^6 conjugations get slow past this
constexpr int kSumSweepCap = 32;
constexpr int kHsSweepCap = 8;
constexpr int kHomomorphismPairs = 100;

std::string scope_of(const Realization& r) {
  return std::string(kind_name(r.kind)) + " d=" + std::to_string(r.d);
}

class Sweep {
 public:
  explicit Sweep(const VerifyOptions& options) : opts_(options) {}

  void record(const std::string& name, const std::string& scope, double residual,
              double tolerance) {
    rows_.push_back(InvariantResult{name, scope, residual, tolerance,
                                    residual < tolerance});
  }

  void check_realization(const Realization& r) {
    const int d = r.d;
    const std::string scope = scope_of(r);
    record("X_unitary", scope, unitary_residual(r.X), opts_.tol_unit);
    record("Z_unitary", scope, unitary_residual(r.Z), opts_.tol_unit);
    record("basis_orthonormal", scope, unitary_residual(r.comp_basis), opts_.tol_unit);
    record("theta_hermitian", scope, hermitian_residual(r.theta), 1e-10);

    double x_action = 0.0, z_action = 0.0;
    for (int s = 0; s < d; ++s) {
      const CVector basis = r.basis_state(s);
      x_action = std::max(x_action,
                          (r.X * basis).max_abs_diff(r.basis_state((s + 1) % d)));
      z_action = std::max(z_action, (r.Z * basis).max_abs_diff(basis.scaled(omega(d, s))));
    }
    record("X_action", scope, x_action, opts_.tol_action);
    record("Z_action", scope, z_action, opts_.tol_action);

    record("weyl_relation", scope,
           (r.Z * r.X).max_abs_diff((r.X * r.Z).scaled(omega(d, 1))), opts_.tol_action);

    const CMatrix eye = CMatrix::identity(static_cast<std::size_t>(d));
    record("X_order", scope, r.X.pow(static_cast<unsigned>(d)).max_abs_diff(eye),
           opts_.tol_action);
    record("Z_order", scope, r.Z.pow(static_cast<unsigned>(d)).max_abs_diff(eye),
           opts_.tol_action);

    const bool number_kind = r.kind == RealizationKind::SpinNumber ||
                             r.kind == RealizationKind::OscNumber;
    const CMatrix& dual = number_kind ? r.X : r.Z;
    record("theta_duality", scope,
           exp_i_hermitian(r.theta, 2.0 * std::numbers::pi / d).max_abs_diff(dual),
           opts_.tol_unit);

    const EigResult theta_eig = eig_hermitian(r.theta);
    double spectrum_residual = 0.0;
    for (int k = 0; k < d; ++k)
      spectrum_residual = std::max(
          spectrum_residual, std::abs(theta_eig.eigenvalues[static_cast<std::size_t>(k)] - k));
    record("theta_spectrum", scope, spectrum_residual, opts_.tol_unit);
  }

  void check_fourier(const Realization& r) {
    const CMatrix u = fourier_matrix(r.d);
    record("fourier_unitary", scope_of(r), unitary_residual(u), opts_.tol_unit);
    record("fourier_conjugation", scope_of(r),
           (u.adjoint() * r.Z * u).max_abs_diff(r.X), opts_.tol_action);
  }

  void check_homomorphism(const Realization& r, std::mt19937_64& rng) {
    // power tables keep the 100-pair check O(d) matrix products overall
    std::vector<CMatrix> xpow{CMatrix::identity(static_cast<std::size_t>(r.d))};
    std::vector<CMatrix> zpow = xpow;
    for (int k = 1; k < r.d; ++k) {
      xpow.push_back(xpow.back() * r.X);
      zpow.push_back(zpow.back() * r.Z);
    }
    auto word = [&](const PauliElement& p) {
      return (xpow[static_cast<std::size_t>(p.x_pow)] * zpow[static_cast<std::size_t>(p.z_pow)])
          .scaled(omega(p.d, p.omega_pow));
    };
    std::uniform_int_distribution<int> dist(0, r.d - 1);
    double worst = 0.0;
    for (int i = 0; i < kHomomorphismPairs; ++i) {
      const PauliElement p = make_pauli(r.d, dist(rng), dist(rng), dist(rng));
      const PauliElement q = make_pauli(r.d, dist(rng), dist(rng), dist(rng));
      worst = std::max(worst, word(multiply(p, q)).max_abs_diff(word(p) * word(q)));
    }
    record("pauli_homomorphism", scope_of(r), worst, opts_.tol_action);
  }

  void check_hs_orthogonality(const Realization& r) {
    std::vector<CMatrix> words;
    words.reserve(static_cast<std::size_t>(r.d) * r.d);
    for (int a = 0; a < r.d; ++a)
      for (int b = 0; b < r.d; ++b) words.push_back(to_matrix(make_pauli(r.d, 0, a, b), r));
    double worst = 0.0;
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t k = 0; k < words.size(); ++k) {
        const Complex value = hs_inner(words[i], words[k]);
        const double expected = (i == k) ? static_cast<double>(r.d) : 0.0;
        worst = std::max(worst, std::abs(value - expected));
      }
    record("hs_orthogonality", scope_of(r), worst, opts_.tol_action);
  }

  void check_phase_states(int d) {
    const std::vector<CVector> states = build_phase_states(d);
    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t k = 0; k < states.size(); ++k) {
        const Complex g = states[i].inner(states[k]);
        worst = std::max(worst, std::abs(g - (i == k ? 1.0 : 0.0)));
      }
    record("phase_states_gram", "spin-phase d=" + std::to_string(d), worst, opts_.tol_unit);
  }

  void check_sum(int d) {
    if (d > kSumSweepCap) return;  // permutation matrices are d^2 x d^2
    const std::string scope = "d=" + std::to_string(d);
    const CMatrix sum = sum_gate_matrix(d);
    const CMatrix inv = inverse_sum(d);
    const CMatrix eye = CMatrix::identity(sum.rows());
    record("sum_inverse", scope, (sum * inv).max_abs_diff(eye), opts_.tol_action);

    const Realization osc = build_osc_number(d);
    const CMatrix zc = tensor_product(osc.Z, CMatrix::identity(static_cast<std::size_t>(d)));
    record("sum_clock_commute", scope, (sum * zc).max_abs_diff(zc * sum), opts_.tol_action);
    const CMatrix xc = tensor_product(osc.X, CMatrix::identity(static_cast<std::size_t>(d)));
    record("sum_propagation", scope,
           (sum * xc * inv).max_abs_diff(tensor_product(osc.X, osc.X)), opts_.tol_action);

    if (d <= kCouplingSweepCap) {
      try {
        const auto [gn, caln] = sum_via_number_coupling(d);
        record("sum_number_coupling", scope, gn.max_abs_diff(sum), opts_.tol_action);
        const auto [gs, cals] = sum_via_spin_coupling(d);
        record("sum_spin_coupling", scope, gs.max_abs_diff(sum), opts_.tol_action);
        const double tau_expected = 2.0 * std::numbers::pi * (d - 1) / d;
        record("sum_calibration_value", scope,
               std::max(std::abs(caln.tau - tau_expected), std::abs(cals.tau - tau_expected)),
               1e-12);
      } catch (const std::logic_error&) {
        record("sum_number_coupling", scope, 1.0, opts_.tol_action);
      }
    }
  }

  std::vector<InvariantResult> take() { return std::move(rows_); }

 private:
  VerifyOptions opts_;
  std::vector<InvariantResult> rows_;
};

}  // namespace

std::vector<InvariantResult> run_verification(const VerifyOptions& options) {
  if (options.d_min < 2 || options.d_min > options.d_max || options.d_max > 64)
    throw std::invalid_argument("verify: need 2 <= d_min <= d_max <= 64");
  if (options.tol_unit <= 0.0 || options.tol_unit > 1e-6 || options.tol_action <= 0.0 ||
      options.tol_action > 1e-6)
    throw std::invalid_argument("verify: tolerances must lie in (0, 1e-6]");

  Sweep sweep(options);
  std::mt19937_64 rng(options.seed);
  bool perturbed = false;

  for (int d = options.d_min; d <= options.d_max; ++d) {
    for (const RealizationKind kind :
         {RealizationKind::SpinNumber, RealizationKind::OscNumber, RealizationKind::SpinPhase,
          RealizationKind::OscPhase}) {
      Realization r = build_realization(kind, d);
      if (options.inject_perturbation && !perturbed) {
        r.X(0, 0) += 1e-6;
        perturbed = true;
      }
      sweep.check_realization(r);
      if (kind == RealizationKind::SpinNumber || kind == RealizationKind::OscNumber)
        sweep.check_fourier(r);
      if (kind == RealizationKind::SpinNumber || kind == RealizationKind::SpinPhase)
        sweep.check_homomorphism(r, rng);
      if (kind == RealizationKind::SpinNumber && d <= kHsSweepCap)
        sweep.check_hs_orthogonality(r);
    }
    sweep.check_phase_states(d);
    sweep.check_sum(d);
  }
  return sweep.take();
}

std::vector<InvariantResult> summarize(const std::vector<InvariantResult>& rows) {
  std::map<std::string, InvariantResult> worst;
  std::vector<std::string> order;
  for (const InvariantResult& row : rows) {
    auto it = worst.find(row.name);
    if (it == worst.end()) {
      worst.emplace(row.name, row);
      order.push_back(row.name);
    } else if (row.residual > it->second.residual) {
      it->second = row;
    }
  }
  std::vector<InvariantResult> out;
  out.reserve(order.size());
  for (const std::string& name : order) out.push_back(worst.at(name));
  return out;
}

bool all_passed(const std::vector<InvariantResult>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const InvariantResult& r) { return r.pass; });
}

}  // namespace qudits
