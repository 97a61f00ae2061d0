#ifndef CSST_CONJUGATION_H
#define CSST_CONJUGATION_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csst/code.h"
#include "csst/cyclotomic.h"
#include "csst/gf2.h"
#include "csst/pauli.h"

namespace csst {

/// Finite sum of c * E(a,b) with exact coefficients, keyed on binary (a,b).
class DiagonalPauliSum {
 public:
  using Key = std::pair<BitVector, BitVector>;

  DiagonalPauliSum() = default;
  explicit DiagonalPauliSum(size_t n) : n_(n) {}

  size_t n() const { return n_; }
  const std::map<Key, CycScalar> &terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds c * p, folding the phase of p into the coefficient.
  void add(const PauliOp &p, const CycScalar &c);
  void add(const DiagonalPauliSum &other, const CycScalar &scale);
  CycScalar coefficient(const BitVector &a, const BitVector &b) const;

  /// Sum of |c|^2 over all terms.
  CycScalar norm_squared() const;
  DiagonalPauliSum adjoint() const;
  DiagonalPauliSum scaled(const CycScalar &c) const;

  bool operator==(const DiagonalPauliSum &other) const;
  std::string to_string() const;

 private:
  size_t n_ = 0;
  std::map<Key, CycScalar> terms_;
};

DiagonalPauliSum product(const DiagonalPauliSum &p, const DiagonalPauliSum &q);

/// A diagonal gate applied to all n qubits.
struct GateSpec {
  enum class Kind { kTPattern, kZRotation, kQfd };

  Kind kind = Kind::kTPattern;
  /// T_PATTERN: power of T on each qubit, entries in 0..7.
  std::vector<int> t;
  /// Z_ROTATION: diag(1, exp(2 pi i / 2^level)) on each qubit. QFD: level of R.
  int level = 3;
  /// QFD: symmetric matrix over Z_{2^level}.
  std::vector<std::vector<int64_t>> r;

  static GateSpec transversal_t(size_t n);
  static GateSpec t_pattern(std::vector<int> t);
  static GateSpec t_pattern(const BitVector &t1, const BitVector &t7);
  static GateSpec z_rotation(int level);
  static GateSpec qfd(std::vector<std::vector<int64_t>> r, int level);

  /// Validates the gate for n qubits; throws std::invalid_argument.
  void validate(size_t n) const;
  std::string to_string() const;
};

/// 1/sqrt(2)^w as an exact scalar.
CycScalar inv_sqrt2_pow(size_t w);

DiagonalPauliSum conj_transversal_T(const PauliOp &p);
/// T on supp(t1), T^dagger on supp(t7); the supports must be disjoint.
DiagonalPauliSum conj_T_pattern(const PauliOp &p, const BitVector &t1,
                                const BitVector &t7);
/// T^{t_i} on qubit i, t_i in Z_8.
DiagonalPauliSum conj_T_powers(const PauliOp &p, const std::vector<int> &t);
/// diag(1, xi)^{(x)n} with xi = exp(2 pi i / 2^level). Levels 1 and 2 are
/// Clifford and go through conj_T_powers.
DiagonalPauliSum conj_z_rotation(const PauliOp &p, int level);
/// Conjugation by tau_R^{(level)} through the R-tilde expansion.
DiagonalPauliSum qfd_conjugate(const PauliOp &p,
                               const std::vector<std::vector<int64_t>> &r,
                               int level, uint64_t cap = kDefaultEnumerationCap);

/// Dispatches on the gate kind.
DiagonalPauliSum conjugate(const PauliOp &p, const GateSpec &gate,
                           uint64_t cap = kDefaultEnumerationCap);

/// U p U^dagger from the 2^n diagonal phases of U and a Walsh transform of
/// the ratio function; shares no code with the closed forms. n <= 5.
DiagonalPauliSum dense_oracle(const PauliOp &p, const GateSpec &gate);
DiagonalPauliSum dense_oracle(const DiagonalPauliSum &s, const GateSpec &gate);

/// Decides U Pi_S U^dagger = Pi_S by exact expansion of every stabilizer
/// element, one X fiber at a time. A failing verdict carries the first term
/// whose coefficient differs and the residual.
Verdict projector_check(const StabilizerCode &code, const GateSpec &gate,
                        uint64_t cap = kDefaultEnumerationCap);

/// The code projector as a Pauli sum, (1/2^r) sum of all group elements.
DiagonalPauliSum projector(const StabilizerCode &code,
                           uint64_t cap = kDefaultEnumerationCap);
/// U Pi_S U^dagger, fully expanded.
DiagonalPauliSum conjugated_projector(const StabilizerCode &code,
                                      const GateSpec &gate,
                                      uint64_t cap = kDefaultEnumerationCap);

}  // namespace csst

#endif
