#pragma once

#include "qudits/gates.hpp"
#include "qudits/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qudits {

// Raised when a gate's encoding precondition is violated (e.g. SUM on a
// number-encoded target). The message names the swap_encoding fix.
class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Encoding { Number, Phase };

const char* encoding_name(Encoding tag);  // "number" | "phase"

struct QuditSlot {
  int d = 2;
  Encoding tag = Encoding::Number;
};

// Multi-qudit state vector. Amplitudes are stored in the fixed index (number)
// basis of each qudit, mixed-radix big-endian (first qudit most significant).
// The per-qudit tag is bookkeeping that names which basis the qudit's labels
// currently refer to: Number reads label s as the index state e_s, Phase reads
// it as the Fourier column u_s = F e_s. swap_encoding applies the physical
// Fourier gate (F for Number->Phase, F^{-1} back) and flips the tag, so a
// label-s basis preparation stays a label-s basis preparation across a swap.
// measure_probabilities projects onto the tagged basis. Single-owner mutable;
// distinct registers are safe to simulate concurrently.
class Register {
 public:
  static Register init(const std::vector<int>& dims, const std::vector<int>& labels);

  int num_qudits() const { return static_cast<int>(slots_.size()); }
  const QuditSlot& qudit(int q) const { return slots_.at(static_cast<std::size_t>(q)); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::size_t total_dim() const { return amps_.size(); }

  double norm() const;

  // state <- (I (x) ... g ... (x) I) state; g must be d_q x d_q and unitary.
  void apply_single(int q, const CMatrix& g);

  // g acts on the ordered index pair (q1, q2), dimension d_q1*d_q2.
  void apply_two(int q1, int q2, const CMatrix& g);

  // Calibrated hybrid SUM: control must be Number-encoded, target Phase-encoded.
  // Applies exp(-i tau N (x) N) on the (control, target) axes, which shifts the
  // target's phase label by the control's number label.
  void apply_sum(int control, int target);

  void swap_encoding(int q);

  // Born probabilities over the qudit's tagged basis labels; pure readout.
  std::vector<double> measure_probabilities(int q) const;

  // Replace qudit q's tensor factor by basis label `label` in its tagged
  // basis. Exact only for states in which q is unentangled; callers are
  // expected to enforce that (the circuit validator does).
  void reset_qudit(int q, int label);

 private:
  Register() = default;
  void check_qudit(int q) const;

  std::vector<QuditSlot> slots_;
  std::vector<std::size_t> strides_;
  std::vector<Complex> amps_;
};

}  // namespace qudits
