#include "csst/cyclotomic.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "csst/errors.h"

namespace csst {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("cyclotomic coefficient overflow");
  }
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("cyclotomic coefficient overflow");
  }
  return r;
}

int64_t checked_shift(int64_t a, int bits) {
  if (bits >= 62) {
    if (a == 0) {
      return 0;
    }
    throw std::overflow_error("cyclotomic coefficient overflow");
  }
  return checked_mul(a, int64_t{1} << bits);
}

}  // namespace

CycScalar::CycScalar(int level) : level_(level) {
  if (level < 2 || level > 20) {
    throw std::invalid_argument("cyclotomic level must be in [2, 20]");
  }
  coeffs_.assign(size_t{1} << (level - 1), 0);
}

CycScalar CycScalar::from_int(int64_t v, int level) {
  CycScalar s(level);
  s.coeffs_[0] = v;
  s.canonicalize();
  return s;
}

CycScalar CycScalar::root_of_unity(int root_level, int64_t exponent) {
  if (root_level < 0) {
    throw std::invalid_argument("root level must be non-negative");
  }
  int level = std::max(root_level, 2);
  CycScalar s(level);
  int64_t order = int64_t{1} << level;
  int64_t m = order / 2;
  int64_t e = exponent % (int64_t{1} << root_level);
  e = (e + (int64_t{1} << root_level)) % (int64_t{1} << root_level);
  e = (e << (level - root_level)) % order;
  if (e >= m) {
    s.coeffs_[e - m] = -1;
  } else {
    s.coeffs_[e] = 1;
  }
  return s;
}

bool CycScalar::is_zero() const {
  for (int64_t c : coeffs_) {
    if (c) {
      return false;
    }
  }
  return true;
}

CycScalar CycScalar::embed(int level) const {
  if (level < level_) {
    throw std::invalid_argument("cannot embed into a smaller level");
  }
  if (level == level_) {
    return *this;
  }
  CycScalar out(level);
  size_t stride = size_t{1} << (level - level_);
  for (size_t i = 0; i < coeffs_.size(); i++) {
    out.coeffs_[i * stride] = coeffs_[i];
  }
  out.k_ = k_;
  return out;
}

CycScalar CycScalar::scaled_pow2(int e) const {
  CycScalar out = *this;
  out.k_ -= e;
  if (out.k_ < 0) {
    for (auto &c : out.coeffs_) {
      c = checked_shift(c, -out.k_);
    }
    out.k_ = 0;
  }
  out.canonicalize();
  return out;
}

CycScalar CycScalar::conj() const {
  CycScalar out(level_);
  size_t m = coeffs_.size();
  out.coeffs_[0] = coeffs_[0];
  for (size_t i = 1; i < m; i++) {
    out.coeffs_[m - i] = -coeffs_[i];
  }
  out.k_ = k_;
  return out;
}

CycScalar CycScalar::pow(unsigned e) const {
  CycScalar result = from_int(1, level_);
  CycScalar base = *this;
  while (e) {
    if (e & 1) {
      result *= base;
    }
    e >>= 1;
    if (e) {
      base *= base;
    }
  }
  return result;
}

CycScalar CycScalar::times_root(int root_level, int64_t exponent) const {
  int level = std::max(level_, std::max(root_level, 2));
  CycScalar src = embed(level);
  CycScalar out(level);
  int64_t m = static_cast<int64_t>(src.coeffs_.size());
  int64_t order = 2 * m;
  int64_t e = exponent % (int64_t{1} << root_level);
  e = (e + (int64_t{1} << root_level)) % (int64_t{1} << root_level);
  e = (e << (level - root_level)) % order;
  for (int64_t i = 0; i < m; i++) {
    int64_t j = (i + e) % order;
    if (j >= m) {
      out.coeffs_[j - m] = -src.coeffs_[i];
    } else {
      out.coeffs_[j] = src.coeffs_[i];
    }
  }
  out.k_ = src.k_;
  return out;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto &c : out.coeffs_) {
    c = -c;
  }
  return out;
}

void CycScalar::align(CycScalar &a, CycScalar &b) {
  int level = std::max(a.level_, b.level_);
  if (a.level_ != level) {
    a = a.embed(level);
  }
  if (b.level_ != level) {
    b = b.embed(level);
  }
  int k = std::max(a.k_, b.k_);
  for (CycScalar *s : {&a, &b}) {
    if (s->k_ != k) {
      for (auto &c : s->coeffs_) {
        c = checked_shift(c, k - s->k_);
      }
      s->k_ = k;
    }
  }
}

CycScalar &CycScalar::operator+=(const CycScalar &other) {
  CycScalar rhs = other;
  align(*this, rhs);
  for (size_t i = 0; i < coeffs_.size(); i++) {
    coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
  }
  canonicalize();
  return *this;
}

CycScalar &CycScalar::operator-=(const CycScalar &other) {
  return *this += -other;
}

CycScalar &CycScalar::operator*=(const CycScalar &other) {
  int level = std::max(level_, other.level_);
  CycScalar lhs = embed(level);
  CycScalar rhs = other.embed(level);
  size_t m = lhs.coeffs_.size();
  std::vector<int64_t> out(m, 0);
  for (size_t i = 0; i < m; i++) {
    if (!lhs.coeffs_[i]) {
      continue;
    }
    for (size_t j = 0; j < m; j++) {
      if (!rhs.coeffs_[j]) {
        continue;
      }
      int64_t prod = checked_mul(lhs.coeffs_[i], rhs.coeffs_[j]);
      size_t idx = i + j;
      if (idx >= m) {
        out[idx - m] = checked_add(out[idx - m], -prod);
      } else {
        out[idx] = checked_add(out[idx], prod);
      }
    }
  }
  level_ = level;
  coeffs_ = std::move(out);
  k_ = lhs.k_ + rhs.k_;
  canonicalize();
  return *this;
}

bool CycScalar::operator==(const CycScalar &other) const {
  int level = std::max(level_, other.level_);
  CycScalar a = embed(level);
  CycScalar b = other.embed(level);
  return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
}

void CycScalar::canonicalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    for (int64_t c : coeffs_) {
      if (c & 1) {
        return;
      }
    }
    for (auto &c : coeffs_) {
      c /= 2;
    }
    k_--;
  }
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> total = 0;
  double m = static_cast<double>(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); i++) {
    total += static_cast<double>(coeffs_[i]) *
             std::polar(1.0, std::numbers::pi * static_cast<double>(i) / m);
  }
  return total / std::ldexp(1.0, k_);
}

std::string CycScalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); i++) {
    int64_t c = coeffs_[i];
    if (!c) {
      continue;
    }
    if (!first) {
      out << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
      out << "-";
    }
    int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) {
        out << mag << "*";
      }
      out << "z^" << i;
    }
    first = false;
  }
  if (first) {
    return "0";
  }
  std::string body = out.str();
  if (k_) {
    body = "(" + body + ")/2^" + std::to_string(k_);
  }
  if (coeffs_.size() > 1) {
    body += " [z=zeta_" + std::to_string(2 * coeffs_.size()) + "]";
  }
  return body;
}

CycScalar cos_const(int l) {
  if (l < 1) {
    throw std::invalid_argument("level must be >= 1");
  }
  CycScalar xi = CycScalar::root_of_unity(l, 1);
  return (xi + xi.conj()).scaled_pow2(-1);
}

CycScalar sin_const(int l) {
  if (l < 1) {
    throw std::invalid_argument("level must be >= 1");
  }
  CycScalar xi = CycScalar::root_of_unity(l, 1);
  // (xi - xi^{-1}) / (2i)
  return (xi - xi.conj()).times_root(2, 3).scaled_pow2(-1);
}

CycScalar sec_const(int l) {
  if (l == 2) {
    throw DegenerateLevel(l);
  }
  if (l < 3) {
    throw std::invalid_argument("sec_const needs level >= 3");
  }
  // 2/(xi + 1/xi) = 2 xi/(1 + xi^2), and with eta = xi^2 of order 2^{l-1}:
  // (1 + eta) * sum_{k < 2^{l-2}} (-eta)^k = 2.
  CycScalar total(l);
  int64_t half = int64_t{1} << (l - 2);
  for (int64_t k = 0; k < half; k++) {
    CycScalar term = CycScalar::root_of_unity(l, 2 * k + 1);
    if (k & 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

CycScalar tan_const(int l) {
  if (l == 2) {
    throw DegenerateLevel(l);
  }
  return sin_const(l) * sec_const(l);
}

}  // namespace csst
