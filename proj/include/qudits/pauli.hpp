#pragma once

#include "qudits/linalg.hpp"
#include "qudits/representations.hpp"

#include <string>

namespace qudits {

// Exact group element omega^c X^a Z^b with omega = exp(2*pi*i/d), exponents
// reduced mod d. The group law follows from Z X = omega X Z:
//   (c,a,b) * (c',a',b') = (c + c' + b*a', a + a', b + b')  (mod d).
struct PauliElement {
  int d = 2;
  int omega_pow = 0;  // c
  int x_pow = 0;      // a
  int z_pow = 0;      // b

  bool operator==(const PauliElement&) const = default;
};

PauliElement pauli_identity(int d);
// Construct with exponents reduced mod d (negative input allowed).
PauliElement make_pauli(int d, int omega_pow, int x_pow, int z_pow);

PauliElement multiply(const PauliElement& p, const PauliElement& q);
PauliElement inverse(const PauliElement& p);

// Smallest k >= 1 with p^k = identity; divides d^2.
int element_order(const PauliElement& p);

// k with p q = omega^k q p; closed form b_p a_q - a_p b_q mod d.
int commutation_phase(const PauliElement& p, const PauliElement& q);

// omega^c (r.X)^a (r.Z)^b in the realization's ambient basis.
CMatrix to_matrix(const PauliElement& p, const Realization& r);

// Pauli word grammar: `w^<int> X^<int> Z^<int>`, unit exponents omitted,
// zero-exponent factors dropped, identity printed as `I`. Examples:
// "I", "w X^2 Z", "w^3 Z^2".
std::string format_pauli(const PauliElement& p);
PauliElement parse_pauli(const std::string& text, int d);

}  // namespace qudits
