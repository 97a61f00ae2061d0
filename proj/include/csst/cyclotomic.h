#ifndef CSST_CYCLOTOMIC_H
#define CSST_CYCLOTOMIC_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace csst {

/// Exact element of Z[zeta_{2^L}][1/2]: sum_i coeffs[i] zeta^i / 2^k.
///
/// Coefficients are taken in the basis 1, zeta, ..., zeta^{M-1} with
/// M = 2^{L-1} and zeta^M = -1. The form is canonical: k is as small as the
/// coefficients allow, and zero has k = 0. Values at different levels compare
/// equal when they agree after embedding into the larger level. Arithmetic is
/// checked and throws std::overflow_error instead of wrapping.
class CycScalar {
 public:
  CycScalar() : CycScalar(2) {}
  explicit CycScalar(int level);

  static CycScalar from_int(int64_t v, int level = 2);
  /// zeta_{2^root_level}^exponent, stored at level max(root_level, 2).
  static CycScalar root_of_unity(int root_level, int64_t exponent);
  /// zeta_8^exponent.
  static CycScalar zeta8(int64_t exponent) { return root_of_unity(3, exponent); }

  int level() const { return level_; }
  const std::vector<int64_t> &coeffs() const { return coeffs_; }
  int dyadic_exp() const { return k_; }
  bool is_zero() const;

  CycScalar embed(int level) const;
  /// Multiplies by 2^e (e may be negative).
  CycScalar scaled_pow2(int e) const;
  /// Complex conjugate: zeta -> zeta^{-1}.
  CycScalar conj() const;
  CycScalar pow(unsigned e) const;
  /// Multiplies by zeta_{2^root_level}^exponent.
  CycScalar times_root(int root_level, int64_t exponent) const;

  CycScalar operator-() const;
  CycScalar &operator+=(const CycScalar &other);
  CycScalar &operator-=(const CycScalar &other);
  CycScalar &operator*=(const CycScalar &other);
  friend CycScalar operator+(CycScalar a, const CycScalar &b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar &b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar &b) { return a *= b; }
  bool operator==(const CycScalar &other) const;

  /// Floating value, for diagnostics only.
  std::complex<double> to_complex() const;
  /// e.g. "(1 + z^3)/2^1 [z=zeta_8]".
  std::string to_string() const;

 private:
  void canonicalize();
  static void align(CycScalar &a, CycScalar &b);

  int level_;
  int k_ = 0;
  std::vector<int64_t> coeffs_;
};

/// cos(2 pi / 2^l) and sin(2 pi / 2^l) as exact elements, l >= 1.
CycScalar cos_const(int l);
CycScalar sin_const(int l);
/// tan and sec of 2 pi / 2^l; DegenerateLevel for l <= 2.
CycScalar tan_const(int l);
CycScalar sec_const(int l);

}  // namespace csst

#endif
