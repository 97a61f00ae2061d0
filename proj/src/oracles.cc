#include "csst/oracles.h"

#include <functional>
#include <random>

#include "csst/conjugation.h"

namespace csst {

namespace {

PauliOp hermitian_pauli(size_t n, uint64_t idx) {
  BitVector x(n), z(n);
  for (size_t i = 0; i < n; i++) {
    x.set(i, (idx >> i) & 1);
    z.set(i, (idx >> (n + i)) & 1);
  }
  return PauliOp(x, z, (idx >> (2 * n)) & 1 ? 4 : 0);
}

BitVector random_bits(size_t n, std::mt19937_64 &rng) {
  BitVector v(n);
  for (size_t i = 0; i < n; i++) v.set(i, rng() & 1);
  return v;
}

PauliOp random_pauli(size_t n, std::mt19937_64 &rng) {
  return PauliOp(random_bits(n, rng), random_bits(n, rng), (rng() & 1) * 4);
}

// Disjoint supports from a ternary digit string: 1 -> T, 2 -> T^dagger.
std::pair<BitVector, BitVector> pattern_from(size_t n, uint64_t code) {
  BitVector t1(n), t7(n);
  for (size_t i = 0; i < n; i++, code /= 3) {
    if (code % 3 == 1) t1.set(i);
    if (code % 3 == 2) t7.set(i);
  }
  return {t1, t7};
}

std::vector<std::vector<int64_t>> random_symmetric(size_t n, int level,
                                                   std::mt19937_64 &rng) {
  std::vector<std::vector<int64_t>> r(n, std::vector<int64_t>(n));
  for (size_t i = 0; i < n; i++) {
    for (size_t j = i; j < n; j++) {
      r[i][j] = r[j][i] = static_cast<int64_t>(rng() % (uint64_t{1} << level));
    }
  }
  return r;
}

class Tally {
 public:
  explicit Tally(std::string name) { family_.name = std::move(name); }

  void compare(const PauliOp &p, const GateSpec &gate,
               const DiagonalPauliSum &closed) {
    family_.cases++;
    if (!(closed == dense_oracle(p, gate))) {
      if (family_.mismatches++ == 0) {
        family_.first_mismatch = to_string(p) + " under " + gate.to_string();
      }
    }
    if (!(closed.norm_squared() == CycScalar::from_int(1))) {
      family_.norm_failures++;
    }
  }

  OracleFamily result() const { return family_; }

 private:
  OracleFamily family_;
};

uint64_t pow3(size_t n) {
  uint64_t p = 1;
  for (size_t i = 0; i < n; i++) p *= 3;
  return p;
}

}  // namespace

std::vector<OracleFamily> verify_oracles(const OracleOptions &options) {
  std::mt19937_64 rng(options.seed);
  Tally transversal("transversal T"), pattern("T/T^dagger pattern"),
      powers("T powers"), rotation("Z rotation"), qfd("QFD expansion");

  // Each family sees every Hermitian Pauli, then random ones on more qubits.
  auto sweep = [&](const std::function<void(const PauliOp &)> &exhaustive,
                   const std::function<void(const PauliOp &)> &random) {
    for (size_t n = 1; n <= options.exhaustive_n; n++) {
      for (uint64_t idx = 0; idx < (uint64_t{1} << (2 * n + 1)); idx++) {
        exhaustive(hermitian_pauli(n, idx));
      }
    }
    for (uint64_t c = 0; c < options.random_cases; c++) {
      random(random_pauli(options.random_n, rng));
    }
  };

  auto t_all = [&](const PauliOp &p) {
    transversal.compare(p, GateSpec::transversal_t(p.num_qubits()),
                    conj_transversal_T(p));
  };
  sweep(t_all, t_all);

  sweep(
      [&](const PauliOp &p) {
        size_t n = p.num_qubits();
        for (uint64_t code = 0; code < pow3(n); code++) {
          auto [t1, t7] = pattern_from(n, code);
          pattern.compare(p, GateSpec::t_pattern(t1, t7),
                          conj_T_pattern(p, t1, t7));
        }
      },
      [&](const PauliOp &p) {
        auto [t1, t7] = pattern_from(p.num_qubits(), rng() % pow3(p.num_qubits()));
        pattern.compare(p, GateSpec::t_pattern(t1, t7), conj_T_pattern(p, t1, t7));
      });

  auto random_powers = [&](const PauliOp &p) {
    std::vector<int> t(p.num_qubits());
    for (auto &e : t) e = static_cast<int>(rng() % 8);
    powers.compare(p, GateSpec::t_pattern(t), conj_T_powers(p, t));
  };
  sweep(
      [&](const PauliOp &p) {
        size_t n = p.num_qubits();
        for (uint64_t tc = 0; tc < (uint64_t{1} << (3 * n)); tc++) {
          std::vector<int> t(n);
          for (size_t i = 0; i < n; i++) t[i] = (tc >> (3 * i)) & 7;
          powers.compare(p, GateSpec::t_pattern(t), conj_T_powers(p, t));
        }
      },
      random_powers);

  sweep(
      [&](const PauliOp &p) {
        for (int level = 1; level <= options.max_level; level++) {
          rotation.compare(p, GateSpec::z_rotation(level),
                           conj_z_rotation(p, level));
        }
      },
      [&](const PauliOp &p) {
        int level = 1 + static_cast<int>(rng() % options.max_level);
        rotation.compare(p, GateSpec::z_rotation(level), conj_z_rotation(p, level));
      });

  auto random_qfd = [&](const PauliOp &p) {
    int level = 2 + static_cast<int>(rng() % 3);
    auto r = random_symmetric(p.num_qubits(), level, rng);
    qfd.compare(p, GateSpec::qfd(r, level), qfd_conjugate(p, r, level));
  };
  sweep(
      [&](const PauliOp &p) {
        for (int rep = 0; rep < 4; rep++) random_qfd(p);
      },
      random_qfd);

  return {transversal.result(), pattern.result(), powers.result(),
          rotation.result(), qfd.result()};
}

}  // namespace csst
