#ifndef CSST_GF2_H
#define CSST_GF2_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csst/errors.h"

namespace csst {

/// Fixed-length binary vector packed into 64-bit words.
///
/// Indices are 0-based internally; string form is left-to-right, so index 0
/// is qubit 1.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVector from_string(std::string_view bits);
  static BitVector from_support(size_t n, const std::vector<size_t> &indices);
  static BitVector ones(size_t n);

  size_t size() const { return n_; }
  size_t num_words() const { return words_.size(); }
  uint64_t word(size_t i) const { return words_[i]; }
  uint64_t &word(size_t i) { return words_[i]; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool value = true) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  size_t weight() const;
  bool is_zero() const;
  /// Parity of the overlap, i.e. the inner product over GF(2).
  bool dot(const BitVector &other) const { return overlap(other) & 1; }
  /// Number of positions where both vectors are 1.
  size_t overlap(const BitVector &other) const;
  /// True if support(*this) is contained in support(other).
  bool is_subset_of(const BitVector &other) const;
  /// Index of the first set bit, or size() if none.
  size_t first_one() const;
  std::vector<size_t> support() const;
  std::string to_string() const;

  BitVector &operator^=(const BitVector &other);
  BitVector &operator&=(const BitVector &other);
  BitVector &operator|=(const BitVector &other);
  BitVector operator~() const;

  friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector &b) { return a |= b; }
  bool operator==(const BitVector &other) const = default;
  /// Lexicographic order of the string form.
  bool operator<(const BitVector &other) const;

 private:
  void check_same_size(const BitVector &other) const;
  void clear_padding();

  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

/// Coordinatewise product x * y.
BitVector star(const BitVector &u, const BitVector &v);

struct BitVectorHash {
  size_t operator()(const BitVector &v) const;
};

/// A list of equal-length rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(size_t num_cols) : cols_(num_cols) {}
  BitMatrix(size_t num_cols, std::vector<BitVector> rows);
  static BitMatrix from_strings(const std::vector<std::string> &rows);
  static BitMatrix identity(size_t n);

  size_t num_rows() const { return rows_.size(); }
  size_t num_cols() const { return cols_; }
  const BitVector &row(size_t i) const { return rows_[i]; }
  BitVector &row(size_t i) { return rows_[i]; }
  const std::vector<BitVector> &rows() const { return rows_; }
  void append(BitVector row);
  bool operator==(const BitMatrix &other) const = default;

 private:
  size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;  // reduced rows first, zero rows at the bottom
  size_t rank = 0;
  std::vector<size_t> pivots;
};

RrefResult rref(const BitMatrix &m);

/// A linear subspace of GF(2)^n stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : n_(ambient) {}
  Subspace(size_t ambient, const std::vector<BitVector> &generators);
  static Subspace full(size_t n);

  size_t ambient() const { return n_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<BitVector> &basis() const { return basis_; }
  const std::vector<size_t> &pivots() const { return pivots_; }
  BitMatrix basis_matrix() const { return BitMatrix(n_, basis_); }

  /// v reduced against the basis; zero iff v is in the space.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector &v) const;
  /// Which basis rows sum to v, or nothing if v is not in the space.
  std::optional<std::vector<size_t>> coordinates(const BitVector &v) const;
  bool is_subspace_of(const Subspace &other) const;
  /// Vectors of this space whose support lies inside `mask`.
  Subspace restricted_to(const BitVector &mask) const;
  Subspace sum(const Subspace &other) const;
  Subspace intersect(const Subspace &other) const;

  /// Visits every element once (Gray-code order, starting with zero).
  void for_each_element(const std::function<void(const BitVector &)> &visit,
                        uint64_t cap = kDefaultEnumerationCap) const;
  std::vector<BitVector> elements(uint64_t cap = kDefaultEnumerationCap) const;

  bool operator==(const Subspace &other) const {
    return n_ == other.n_ && basis_ == other.basis_;
  }

 private:
  size_t n_ = 0;
  std::vector<BitVector> basis_;
  std::vector<size_t> pivots_;
};

Subspace dual(const Subspace &s);

/// Drops coordinates outside support(a); every basis vector must lie inside.
Subspace puncture(const Subspace &s, const BitVector &a);

/// Inverse of puncturing for a single vector: places `short_v` on support(a).
BitVector unpuncture(const BitVector &short_v, const BitVector &a);

/// Restricts v to support(a), producing a vector of length weight(a).
BitVector compress(const BitVector &v, const BitVector &a);

/// Self-dual code A inside Z on support(a), built by enlarging the dual of the
/// punctured space one even-weight vector at a time. Nothing if the punctured
/// space does not contain its dual.
std::optional<Subspace> self_dual_certificate(const Subspace &z,
                                              const BitVector &a);

/// Minimum Hamming weight over s minus `exclude`; nothing if s is inside it.
std::optional<size_t> min_weight(const Subspace &s, const Subspace &exclude,
                                 uint64_t cap = kDefaultEnumerationCap);

/// A solution c of row_i(a) . c = rhs_i for all rows, with free variables set
/// to zero; nothing if the system is inconsistent.
std::optional<BitVector> solve_linear(const BitMatrix &a, const BitVector &rhs);

/// Calls visit(v) for every v in span(inner + outer) whose outer part is
/// nonzero. Bases must be jointly independent.
void for_each_outside(const std::vector<BitVector> &inner,
                      const std::vector<BitVector> &outer, size_t n,
                      const std::function<void(const BitVector &)> &visit,
                      uint64_t cap);

}  // namespace csst

template <>
struct std::hash<csst::BitVector> {
  size_t operator()(const csst::BitVector &v) const {
    return csst::BitVectorHash{}(v);
  }
};

#endif
