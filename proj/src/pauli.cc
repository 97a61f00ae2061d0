#include "csst/pauli.h"

#include <stdexcept>

namespace csst {

namespace {

int mod8(int64_t v) { return static_cast<int>(((v % 8) + 8) % 8); }

int64_t floor_half(int64_t v) { return (v - (((v % 2) + 2) % 2)) / 2; }

}  // namespace

PauliOp::PauliOp(BitVector x_part, BitVector z_part, int zeta8_exp)
    : x(std::move(x_part)), z(std::move(z_part)), phase(mod8(zeta8_exp)) {
  if (x.size() != z.size()) {
    throw std::invalid_argument("Pauli x/z length mismatch");
  }
}

PauliOp PauliOp::from_letters(std::string_view text) {
  int phase = 0;
  if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 4;
    text.remove_prefix(1);
  }
  if (text.starts_with("i")) {
    phase += 2;
    text.remove_prefix(1);
  }
  PauliOp p(text.size());
  p.phase = mod8(phase);
  for (size_t i = 0; i < text.size(); i++) {
    switch (text[i]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.x.set(i);
        break;
      case 'Z':
        p.z.set(i);
        break;
      case 'Y':
        p.x.set(i);
        p.z.set(i);
        break;
      default:
        throw std::invalid_argument("bad Pauli letter '" +
                                    std::string(1, text[i]) + "'");
    }
  }
  return p;
}

bool PauliOp::operator<(const PauliOp &other) const {
  if (x != other.x) {
    return x < other.x;
  }
  if (z != other.z) {
    return z < other.z;
  }
  return phase < other.phase;
}

PauliOp normalize(const IntegerPauli &p) {
  if (p.a.size() != p.b.size()) {
    throw std::invalid_argument("normalize: a/b length mismatch");
  }
  size_t n = p.a.size();
  PauliOp out(n);
  int64_t sign_parity = 0;
  for (size_t i = 0; i < n; i++) {
    int64_t a0 = ((p.a[i] % 2) + 2) % 2;
    int64_t b0 = ((p.b[i] % 2) + 2) % 2;
    // a_i = a0 + 2 xa, b_i = b0 + 2 xb: sign (-1)^{a0 xb + b0 xa}.
    sign_parity += a0 * (floor_half(p.b[i]) & 1) + b0 * (floor_half(p.a[i]) & 1);
    out.x.set(i, a0);
    out.z.set(i, b0);
  }
  out.phase = mod8(p.phase + 4 * (sign_parity & 1));
  return out;
}

PauliOp multiply(const PauliOp &p, const PauliOp &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("multiply: qubit count mismatch");
  }
  // i^{b.c - a.d} as a zeta_8 exponent.
  int64_t k = static_cast<int64_t>(p.z.overlap(q.x)) -
              static_cast<int64_t>(p.x.overlap(q.z));
  int phase = p.phase + q.phase + 2 * static_cast<int>(((k % 4) + 4) % 4);
  BitVector x = p.x ^ q.x;
  BitVector z = p.z ^ q.z;
  // E(a+c, b+d): reduce b+d with carry b*d, then a+c with carry a*c.
  size_t flips = x.overlap(p.z & q.z) + z.overlap(p.x & q.x);
  phase += 4 * static_cast<int>(flips & 1);
  return PauliOp(std::move(x), std::move(z), phase);
}

bool symplectic_inner(const PauliOp &p, const PauliOp &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("symplectic_inner: qubit count mismatch");
  }
  return (p.x.overlap(q.z) + p.z.overlap(q.x)) & 1;
}

bool is_hermitian(const PauliOp &p) { return p.phase == 0 || p.phase == 4; }

std::string phase_prefix(int zeta8_exp) {
  switch (mod8(zeta8_exp)) {
    case 0:
      return "";
    case 2:
      return "i";
    case 4:
      return "-";
    case 6:
      return "-i";
    default:
      return "w^" + std::to_string(mod8(zeta8_exp));
  }
}

std::string to_string(const PauliOp &p) {
  std::string out = phase_prefix(p.phase);
  bool any = false;
  for (size_t i = 0; i < p.num_qubits(); i++) {
    bool xi = p.x.get(i);
    bool zi = p.z.get(i);
    if (!xi && !zi) {
      continue;
    }
    out += xi ? (zi ? 'Y' : 'X') : 'Z';
    out += std::to_string(i + 1);
    any = true;
  }
  if (!any) {
    out += "I";
  }
  return out;
}

}  // namespace csst
