#include "qudits/pauli.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qudits {

namespace {

int mod_reduce(long long value, int d) {
  long long r = value % d;
  if (r < 0) r += d;
  return static_cast<int>(r);
}

void require_same_dim(const PauliElement& p, const PauliElement& q) {
  if (p.d != q.d) throw std::invalid_argument("Pauli elements live in different dimensions");
}

}  // namespace

PauliElement pauli_identity(int d) { return make_pauli(d, 0, 0, 0); }

PauliElement make_pauli(int d, int omega_pow, int x_pow, int z_pow) {
  if (d < 2) throw std::invalid_argument("Pauli dimension must be at least 2");
  return PauliElement{d, mod_reduce(omega_pow, d), mod_reduce(x_pow, d), mod_reduce(z_pow, d)};
}

PauliElement multiply(const PauliElement& p, const PauliElement& q) {
  require_same_dim(p, q);
  // Z^b X^a' = omega^{b a'} X^a' Z^b moves q's shift factor past p's clock factor.
  return make_pauli(p.d,
                    p.omega_pow + q.omega_pow + p.z_pow * q.x_pow,
                    p.x_pow + q.x_pow,
                    p.z_pow + q.z_pow);
}

PauliElement inverse(const PauliElement& p) {
  return make_pauli(p.d, -p.omega_pow + p.x_pow * p.z_pow, -p.x_pow, -p.z_pow);
}

int element_order(const PauliElement& p) {
  const PauliElement id = pauli_identity(p.d);
  PauliElement acc = p;
  int k = 1;
  while (!(acc == id)) {
    acc = multiply(acc, p);
    ++k;
    if (k > p.d * p.d)
      throw std::logic_error("element_order: exceeded d^2, group law is broken");
  }
  return k;
}

int commutation_phase(const PauliElement& p, const PauliElement& q) {
  require_same_dim(p, q);
  return mod_reduce(static_cast<long long>(p.z_pow) * q.x_pow -
                        static_cast<long long>(p.x_pow) * q.z_pow,
                    p.d);
}

CMatrix to_matrix(const PauliElement& p, const Realization& r) {
  if (p.d != r.d) throw std::invalid_argument("to_matrix: dimension mismatch");
  const CMatrix m = r.X.pow(static_cast<unsigned>(p.x_pow)) *
                    r.Z.pow(static_cast<unsigned>(p.z_pow));
  return m.scaled(omega(p.d, p.omega_pow));
}

std::string format_pauli(const PauliElement& p) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const char* symbol, int power) {
    if (power == 0) return;
    if (!first) out << ' ';
    out << symbol;
    if (power != 1) out << '^' << power;
    first = false;
  };
  emit("w", p.omega_pow);
  emit("X", p.x_pow);
  emit("Z", p.z_pow);
  if (first) return "I";
  return out.str();
}

PauliElement parse_pauli(const std::string& text, int d) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw std::invalid_argument("parse_pauli: empty input");

  if (tokens.size() == 1 && tokens[0] == "I") return pauli_identity(d);

  int c = 0, a = 0, b = 0;
  std::size_t next = 0;
  auto take = [&](const char* symbol, int& power) {
    if (next >= tokens.size()) return;
    const std::string& tok = tokens[next];
    if (tok.rfind(symbol, 0) != 0) return;
    std::string rest = tok.substr(1);
    if (rest.empty()) {
      power = 1;
    } else {
      if (rest[0] != '^') throw std::invalid_argument("parse_pauli: expected '^' in " + tok);
      std::size_t used = 0;
      power = std::stoi(rest.substr(1), &used);
      if (used != rest.size() - 1)
        throw std::invalid_argument("parse_pauli: bad exponent in " + tok);
    }
    ++next;
  };
  take("w", c);
  take("X", a);
  take("Z", b);
  if (next != tokens.size())
    throw std::invalid_argument("parse_pauli: unexpected token '" + tokens[next] +
                                "' (grammar: w^<i> X^<i> Z^<i>)");
  return make_pauli(d, c, a, b);
}

}  // namespace qudits
