#include "qudits/gates.hpp"

#include "qudits/representations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qudits {

namespace {

std::size_t pair_index(int d, int s1, int s2) {
  return static_cast<std::size_t>(s1) * d + s2;
}

// Integer diagonal of a generator with exact spectrum {0..d-1}.
std::vector<long long> integer_diagonal(const CMatrix& gen) {
  std::vector<long long> diag(gen.rows());
  for (std::size_t i = 0; i < gen.rows(); ++i) {
    const double v = gen(i, i).real();
    const long long n = std::llround(v);
    if (std::abs(v - static_cast<double>(n)) > 1e-9 || std::abs(gen(i, i).imag()) > 1e-9)
      throw std::invalid_argument("sum coupling: generator spectrum is not integer");
    diag[i] = n;
  }
  return diag;
}

// G = B' E B with B = I (x) F and E = diag(omega^{-k g(n1) g(n2)}): B is block
// diagonal in the control label, so G decomposes into d conjugations
// F' D_c F with D_c = diag(omega^{-k g(c) g(n)}).
CMatrix dressed_evolution(int d, int k, const std::vector<long long>& gdiag) {
  const CMatrix f = fourier_matrix(d);
  const std::size_t n = static_cast<std::size_t>(d);
  CMatrix out(n * n, n * n);
  for (int c = 0; c < d; ++c) {
    CMatrix dc(n, n);
    for (int t = 0; t < d; ++t)
      dc(static_cast<std::size_t>(t), static_cast<std::size_t>(t)) =
          omega(d, -static_cast<long long>(k) * gdiag[static_cast<std::size_t>(c)] *
                       gdiag[static_cast<std::size_t>(t)]);
    const CMatrix block = f.adjoint() * dc * f;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        out(pair_index(d, c, static_cast<int>(r)), pair_index(d, c, static_cast<int>(s))) =
            block(r, s);
  }
  return out;
}

std::pair<CMatrix, SumCalibration> calibrate(int d, const CMatrix& gen) {
  if (d < 2) throw std::invalid_argument("sum coupling: dimension must be at least 2");
  const std::vector<long long> gdiag = integer_diagonal(gen);
  const CMatrix target = sum_gate_matrix(d);

  CMatrix found;
  int found_k = -1;
  for (int k = 0; k < d; ++k) {
    CMatrix g = dressed_evolution(d, k, gdiag);
    if (g.max_abs_diff(target) < 1e-10) {
      if (found_k >= 0)
        throw std::logic_error("sum calibration: multiple evolution phases reproduce SUM");
      found = std::move(g);
      found_k = k;
    }
  }
  if (found_k < 0)
    throw std::logic_error("sum calibration: no candidate evolution phase reproduces SUM");

  SumCalibration cal;
  cal.d = d;
  cal.phase_steps = found_k;
  cal.tau = 2.0 * std::numbers::pi * found_k / d;
  cal.sign_convention = '+';
  return {std::move(found), cal};
}

}  // namespace

CMatrix sum_gate_matrix(int d) {
  if (d < 2) throw std::invalid_argument("sum_gate_matrix: dimension must be at least 2");
  const std::size_t n2 = static_cast<std::size_t>(d) * d;
  CMatrix m(n2, n2);
  for (int s1 = 0; s1 < d; ++s1)
    for (int s2 = 0; s2 < d; ++s2)
      m(pair_index(d, s1, (s1 + s2) % d), pair_index(d, s1, s2)) = 1.0;
  return m;
}

CMatrix inverse_sum(int d) {
  if (d < 2) throw std::invalid_argument("inverse_sum: dimension must be at least 2");
  const std::size_t n2 = static_cast<std::size_t>(d) * d;
  CMatrix m(n2, n2);
  for (int s1 = 0; s1 < d; ++s1)
    for (int s2 = 0; s2 < d; ++s2)
      m(pair_index(d, s1, ((s2 - s1) % d + d) % d), pair_index(d, s1, s2)) = 1.0;
  return m;
}

std::pair<CMatrix, SumCalibration> sum_via_number_coupling(int d) {
  return calibrate(d, build_osc_number(d).generator);
}

std::pair<CMatrix, SumCalibration> sum_via_spin_coupling(int d) {
  return calibrate(d, build_spin_number(d).generator);
}

}  // namespace qudits
