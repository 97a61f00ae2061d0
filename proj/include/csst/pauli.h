#ifndef CSST_PAULI_H
#define CSST_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csst/gf2.h"

namespace csst {

/// zeta_8^phase * E(x, z) with binary x, z.
///
/// E(a,b) = i^{a.b} X^a Z^b, so E(1,1) = Y and every E(a,b) is Hermitian.
/// The phase is an exponent of zeta_8 = e^{i pi/4}; elements of the Pauli
/// group have even phase.
struct PauliOp {
  BitVector x;
  BitVector z;
  int phase = 0;

  PauliOp() = default;
  explicit PauliOp(size_t n) : x(n), z(n) {}
  PauliOp(BitVector x_part, BitVector z_part, int zeta8_exp = 0);

  /// Parses "XYZI"-style letters with an optional leading sign ("+", "-",
  /// "i", "-i").
  static PauliOp from_letters(std::string_view text);

  size_t num_qubits() const { return x.size(); }
  bool operator==(const PauliOp &other) const = default;
  bool operator<(const PauliOp &other) const;
};

/// E(a,b) with integer exponent vectors, before reduction mod 2.
struct IntegerPauli {
  std::vector<int64_t> a;
  std::vector<int64_t> b;
  int phase = 0;
};

/// Reduces a, b mod 2 using E(a, b+2x) = (-1)^{a.x} E(a,b) and
/// E(a+2x, b) = (-1)^{b.x} E(a,b).
PauliOp normalize(const IntegerPauli &p);

/// Exact product: E(a,b) E(c,d) = i^{b.c - a.d} E(a+c, b+d), then normalized.
PauliOp multiply(const PauliOp &p, const PauliOp &q);

/// 0 iff p and q commute.
bool symplectic_inner(const PauliOp &p, const PauliOp &q);

bool is_hermitian(const PauliOp &p);

/// Renders e.g. "-Z1Z2", "iX1Y3", "I".
std::string to_string(const PauliOp &p);

/// Phase prefix for a zeta_8 exponent: "", "-", "i", "-i" or "w^k".
std::string phase_prefix(int zeta8_exp);

}  // namespace csst

#endif
