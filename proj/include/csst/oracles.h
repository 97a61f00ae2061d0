#ifndef CSST_ORACLES_H
#define CSST_ORACLES_H

#include <cstdint>
#include <string>
#include <vector>

namespace csst {

/// Tally for one closed-form expansion compared against dense_oracle.
struct OracleFamily {
  std::string name;
  uint64_t cases = 0;
  uint64_t mismatches = 0;
  /// Outputs whose squared coefficient norm is not exactly 1.
  uint64_t norm_failures = 0;
  std::string first_mismatch;

  bool ok() const { return mismatches == 0 && norm_failures == 0; }
};

struct OracleOptions {
  /// Every Hermitian Pauli on n <= exhaustive_n qubits.
  size_t exhaustive_n = 3;
  /// Random cases per family on random_n qubits.
  size_t random_n = 4;
  uint64_t random_cases = 500;
  uint64_t seed = 1;
  /// Highest Z-rotation level compared.
  int max_level = 4;
};

/// Transversal T, T/T^dagger patterns, T powers, Z rotations and the QFD
/// expansion, each checked with exact equality.
std::vector<OracleFamily> verify_oracles(const OracleOptions &options = {});

}  // namespace csst

#endif
