#include "qudits/simulator.hpp"

#include "qudits/representations.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qudits {

namespace {

const SumCalibration& cached_calibration(int d) {
  static std::mutex mu;
  static std::map<int, SumCalibration> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, sum_via_number_coupling(d).second).first;
  return it->second;
}

}  // namespace

const char* encoding_name(Encoding tag) {
  return tag == Encoding::Number ? "number" : "phase";
}

Register Register::init(const std::vector<int>& dims, const std::vector<int>& labels) {
  if (dims.empty()) throw std::invalid_argument("Register: at least one qudit required");
  if (dims.size() != labels.size())
    throw std::invalid_argument("Register: dims and labels differ in length");

  Register r;
  std::size_t total = 1;
  for (int d : dims) {
    if (d < 2) throw std::invalid_argument("Register: qudit dimension must be at least 2");
    r.slots_.push_back(QuditSlot{d, Encoding::Number});
    total *= static_cast<std::size_t>(d);
  }
  r.strides_.assign(dims.size(), 1);
  for (std::size_t q = dims.size(); q-- > 1;)
    r.strides_[q - 1] = r.strides_[q] * static_cast<std::size_t>(dims[q]);

  std::size_t index = 0;
  for (std::size_t q = 0; q < dims.size(); ++q) {
    if (labels[q] < 0 || labels[q] >= dims[q])
      throw std::invalid_argument("Register: preparation label out of range");
    index += static_cast<std::size_t>(labels[q]) * r.strides_[q];
  }
  r.amps_.assign(total, Complex{});
  r.amps_[index] = 1.0;
  return r;
}

double Register::norm() const {
  double sum = 0.0;
  for (const auto& z : amps_) sum += std::norm(z);
  return std::sqrt(sum);
}

void Register::check_qudit(int q) const {
  if (q < 0 || q >= num_qudits()) throw std::invalid_argument("Register: qudit index out of range");
}

void Register::apply_single(int q, const CMatrix& g) {
  check_qudit(q);
  const std::size_t d = static_cast<std::size_t>(slots_[static_cast<std::size_t>(q)].d);
  if (g.rows() != d || g.cols() != d)
    throw std::invalid_argument("apply_single: gate shape does not match qudit dimension");
  if (!g.is_unitary(kUnitaryTol)) throw std::invalid_argument("apply_single: gate is not unitary");

  const std::size_t stride = strides_[static_cast<std::size_t>(q)];
  const std::size_t block = stride * d;
  std::vector<Complex> scratch(d);
  for (std::size_t base = 0; base < amps_.size(); base += block) {
    for (std::size_t low = 0; low < stride; ++low) {
      for (std::size_t s = 0; s < d; ++s) scratch[s] = amps_[base + s * stride + low];
      for (std::size_t t = 0; t < d; ++t) {
        Complex sum = 0.0;
        for (std::size_t s = 0; s < d; ++s) sum += g(t, s) * scratch[s];
        amps_[base + t * stride + low] = sum;
      }
    }
  }
}

void Register::apply_two(int q1, int q2, const CMatrix& g) {
  check_qudit(q1);
  check_qudit(q2);
  if (q1 == q2) throw std::invalid_argument("apply_two: qudits must be distinct");
  const std::size_t d1 = static_cast<std::size_t>(slots_[static_cast<std::size_t>(q1)].d);
  const std::size_t d2 = static_cast<std::size_t>(slots_[static_cast<std::size_t>(q2)].d);
  if (g.rows() != d1 * d2 || g.cols() != d1 * d2)
    throw std::invalid_argument("apply_two: gate shape does not match qudit pair");
  if (!g.is_unitary(kUnitaryTol)) throw std::invalid_argument("apply_two: gate is not unitary");

  const std::size_t st1 = strides_[static_cast<std::size_t>(q1)];
  const std::size_t st2 = strides_[static_cast<std::size_t>(q2)];
  std::vector<Complex> scratch(d1 * d2);

  // Iterate over all assignments of the remaining digits: walk the full index
  // space and handle each (q1,q2)=(0,0) representative once.
  for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
    const std::size_t s1 = (idx / st1) % d1;
    const std::size_t s2 = (idx / st2) % d2;
    if (s1 != 0 || s2 != 0) continue;
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b) scratch[a * d2 + b] = amps_[idx + a * st1 + b * st2];
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b) {
        Complex sum = 0.0;
        for (std::size_t ap = 0; ap < d1; ++ap)
          for (std::size_t bp = 0; bp < d2; ++bp)
            sum += g(a * d2 + b, ap * d2 + bp) * scratch[ap * d2 + bp];
        amps_[idx + a * st1 + b * st2] = sum;
      }
  }
}

void Register::apply_sum(int control, int target) {
  check_qudit(control);
  check_qudit(target);
  if (control == target) throw std::invalid_argument("apply_sum: control and target must differ");
  const QuditSlot& c = slots_[static_cast<std::size_t>(control)];
  const QuditSlot& t = slots_[static_cast<std::size_t>(target)];
  if (c.d != t.d) throw std::invalid_argument("apply_sum: control/target dimension mismatch");
  if (c.tag != Encoding::Number)
    throw EncodingError("apply_sum: control qudit must be number-encoded; "
                        "call swap_encoding on it first");
  if (t.tag != Encoding::Phase)
    throw EncodingError("apply_sum: target qudit must be phase-encoded; "
                        "call swap_encoding on it first");

  const int d = c.d;
  const SumCalibration& cal = cached_calibration(d);
  const std::size_t stc = strides_[static_cast<std::size_t>(control)];
  const std::size_t stt = strides_[static_cast<std::size_t>(target)];
  // exp(-i tau N N): diagonal phase omega^{-k s1 s2} per amplitude, with the
  // exponent reduced in exact integer arithmetic.
  for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
    const long long s1 = static_cast<long long>((idx / stc) % static_cast<std::size_t>(d));
    const long long s2 = static_cast<long long>((idx / stt) % static_cast<std::size_t>(d));
    amps_[idx] *= omega(d, -static_cast<long long>(cal.phase_steps) * s1 * s2);
  }
}

void Register::swap_encoding(int q) {
  check_qudit(q);
  QuditSlot& slot = slots_[static_cast<std::size_t>(q)];
  const CMatrix f = fourier_matrix(slot.d);
  if (slot.tag == Encoding::Number) {
    apply_single(q, f);
    slot.tag = Encoding::Phase;
  } else {
    apply_single(q, f.adjoint());
    slot.tag = Encoding::Number;
  }
}

std::vector<double> Register::measure_probabilities(int q) const {
  check_qudit(q);
  const QuditSlot& slot = slots_[static_cast<std::size_t>(q)];
  const std::size_t d = static_cast<std::size_t>(slot.d);
  const std::size_t stride = strides_[static_cast<std::size_t>(q)];

  // Phase-tagged labels live in the Fourier basis: rotate a copy back first.
  const Register* source = this;
  Register rotated;
  if (slot.tag == Encoding::Phase) {
    rotated = *this;
    rotated.apply_single(q, fourier_matrix(slot.d).adjoint());
    source = &rotated;
  }

  std::vector<double> probs(d, 0.0);
  for (std::size_t idx = 0; idx < source->amps_.size(); ++idx)
    probs[(idx / stride) % d] += std::norm(source->amps_[idx]);
  return probs;
}

void Register::reset_qudit(int q, int label) {
  check_qudit(q);
  QuditSlot& slot = slots_[static_cast<std::size_t>(q)];
  if (label < 0 || label >= slot.d) throw std::invalid_argument("reset_qudit: label out of range");
  const std::size_t d = static_cast<std::size_t>(slot.d);
  const std::size_t stride = strides_[static_cast<std::size_t>(q)];

  // Factor extraction: pick the dominant slice along q as the co-factor.
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
    const double mag = std::abs(amps_[idx]);
    if (mag > best_mag) {
      best_mag = mag;
      best = idx;
    }
  }
  if (best_mag <= 0.0) throw std::logic_error("reset_qudit: zero state");
  const std::size_t digit = (best / stride) % d;
  const std::size_t rep = best - digit * stride;  // co-factor representative index

  // Rank-1 cross-ratio check: amplitudes must factor over axis q.
  for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
    const std::size_t dig_i = (idx / stride) % d;
    const std::size_t base_i = idx - dig_i * stride;
    const Complex lhs = amps_[idx] * amps_[best];
    const Complex rhs = amps_[base_i + digit * stride] * amps_[rep + dig_i * stride];
    if (std::abs(lhs - rhs) > 1e-9)
      throw std::logic_error("reset_qudit: qudit is entangled with the rest of the register");
  }

  std::vector<Complex> target(d, Complex{});
  if (slot.tag == Encoding::Number) {
    target[static_cast<std::size_t>(label)] = 1.0;
  } else {
    const CMatrix f = fourier_matrix(slot.d);
    for (std::size_t t = 0; t < d; ++t) target[t] = f(t, static_cast<std::size_t>(label));
  }

  double rest_norm2 = 0.0;
  for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
    if ((idx / stride) % d != digit) continue;
    rest_norm2 += std::norm(amps_[idx]);
  }
  const double scale = 1.0 / std::sqrt(rest_norm2);

  std::vector<Complex> next(amps_.size(), Complex{});
  for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
    if ((idx / stride) % d != digit) continue;
    const Complex rest = amps_[idx] * scale;
    const std::size_t base = idx - digit * stride;
    for (std::size_t t = 0; t < d; ++t) next[base + t * stride] = rest * target[t];
  }
  amps_ = std::move(next);
}

}  // namespace qudits
