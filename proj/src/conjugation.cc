#include "csst/conjugation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace csst {

namespace {

uint64_t to_bits(const BitVector &v) {
  return v.num_words() == 0 ? 0 : v.word(0);
}

BitVector from_bits(uint64_t bits, size_t n) {
  BitVector v(n);
  if (n > 0) {
    v.word(0) = bits;
  }
  return v;
}

int parity(uint64_t x) { return std::popcount(x) & 1; }

int64_t mod(int64_t v, int64_t m) { return ((v % m) + m) % m; }

/// Calls visit(y) for every y with support inside s.
template <typename Visit>
void for_each_subvector(const BitVector &s, Visit &&visit) {
  std::vector<size_t> sup = s.support();
  BitVector y(s.size());
  visit(y);
  uint64_t count = uint64_t{1} << sup.size();
  for (uint64_t g = 1; g < count; g++) {
    y.flip(sup[std::countr_zero(g)]);
    visit(y);
  }
}

CycScalar sign_scalar(bool negative, const CycScalar &c) {
  return negative ? -c : c;
}

PauliOp z_element(const StabilizerCode &code, const BitVector &z) {
  return PauliOp(BitVector(code.n()), z, *code.z_phase(z));
}

// Every element of the fiber over a, i.e. every group element with X part a.
template <typename Visit>
void for_each_fiber_element(const StabilizerCode &code, const BitVector &a,
                            uint64_t cap, Visit &&visit) {
  PauliOp h = code.element_with_x(a);
  code.z_space().for_each_element(
      [&](const BitVector &z) { visit(multiply(h, z_element(code, z))); },
      cap);
}

std::vector<BitVector> nonzero_x_parts(const StabilizerCode &code,
                                       uint64_t cap) {
  std::vector<BitVector> out;
  code.x_space().for_each_element(
      [&](const BitVector &a) {
        if (!a.is_zero()) {
          out.push_back(a);
        }
      },
      cap);
  return out;
}

/// Exponent of the diagonal phase of the gate on |v>, at the returned level.
struct PhaseTable {
  int level = 3;
  std::vector<int64_t> exponent;
};

PhaseTable phase_table(const GateSpec &gate, size_t n) {
  PhaseTable table;
  uint64_t dim = uint64_t{1} << n;
  table.exponent.resize(dim);
  switch (gate.kind) {
    case GateSpec::Kind::kTPattern:
      table.level = 3;
      for (uint64_t v = 0; v < dim; v++) {
        int64_t e = 0;
        for (size_t i = 0; i < n; i++) {
          if ((v >> i) & 1) {
            e += gate.t[i];
          }
        }
        table.exponent[v] = mod(e, 8);
      }
      break;
    case GateSpec::Kind::kZRotation:
      table.level = gate.level;
      for (uint64_t v = 0; v < dim; v++) {
        table.exponent[v] = mod(std::popcount(v), int64_t{1} << gate.level);
      }
      break;
    case GateSpec::Kind::kQfd:
      table.level = gate.level;
      for (uint64_t v = 0; v < dim; v++) {
        int64_t e = 0;
        for (size_t i = 0; i < n; i++) {
          for (size_t j = 0; j < n; j++) {
            if (((v >> i) & 1) && ((v >> j) & 1)) {
              e += gate.r[i][j];
            }
          }
        }
        table.exponent[v] = mod(e, int64_t{1} << gate.level);
      }
      break;
  }
  return table;
}

}  // namespace

void DiagonalPauliSum::add(const PauliOp &p, const CycScalar &c) {
  if (n_ == 0 && terms_.empty()) {
    n_ = p.num_qubits();
  }
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("Pauli sum: qubit count mismatch");
  }
  CycScalar value = c.times_root(3, p.phase);
  if (value.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(Key(p.x, p.z), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

void DiagonalPauliSum::add(const DiagonalPauliSum &other,
                           const CycScalar &scale) {
  for (const auto &[key, c] : other.terms_) {
    add(PauliOp(key.first, key.second, 0), c * scale);
  }
}

CycScalar DiagonalPauliSum::coefficient(const BitVector &a,
                                        const BitVector &b) const {
  auto it = terms_.find(Key(a, b));
  return it == terms_.end() ? CycScalar() : it->second;
}

CycScalar DiagonalPauliSum::norm_squared() const {
  CycScalar total;
  for (const auto &[key, c] : terms_) {
    total += c * c.conj();
  }
  return total;
}

DiagonalPauliSum DiagonalPauliSum::adjoint() const {
  // Every E(a,b) is Hermitian, so only the coefficients change.
  DiagonalPauliSum out(n_);
  for (const auto &[key, c] : terms_) {
    out.terms_.emplace(key, c.conj());
  }
  return out;
}

DiagonalPauliSum DiagonalPauliSum::scaled(const CycScalar &c) const {
  DiagonalPauliSum out(n_);
  out.add(*this, c);
  return out;
}

bool DiagonalPauliSum::operator==(const DiagonalPauliSum &other) const {
  if (terms_.size() != other.terms_.size()) {
    return false;
  }
  for (const auto &[key, c] : terms_) {
    auto it = other.terms_.find(key);
    if (it == other.terms_.end() || !(it->second == c)) {
      return false;
    }
  }
  return true;
}

std::string DiagonalPauliSum::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto &[key, c] : terms_) {
    if (!first) {
      out << " + ";
    }
    first = false;
    out << c.to_string() << " * "
        << csst::to_string(PauliOp(key.first, key.second, 0));
  }
  return out.str();
}

DiagonalPauliSum product(const DiagonalPauliSum &p, const DiagonalPauliSum &q) {
  DiagonalPauliSum out(p.n());
  for (const auto &[kp, cp] : p.terms()) {
    PauliOp ep(kp.first, kp.second, 0);
    for (const auto &[kq, cq] : q.terms()) {
      out.add(multiply(ep, PauliOp(kq.first, kq.second, 0)), cp * cq);
    }
  }
  return out;
}

GateSpec GateSpec::transversal_t(size_t n) {
  return t_pattern(std::vector<int>(n, 1));
}

GateSpec GateSpec::t_pattern(std::vector<int> t) {
  GateSpec g;
  g.kind = Kind::kTPattern;
  g.t = std::move(t);
  g.level = 3;
  return g;
}

GateSpec GateSpec::t_pattern(const BitVector &t1, const BitVector &t7) {
  if (!(t1 & t7).is_zero()) {
    throw std::invalid_argument("t1 and t7 supports overlap");
  }
  std::vector<int> t(t1.size(), 0);
  for (size_t i = 0; i < t.size(); i++) {
    t[i] = t1.get(i) ? 1 : (t7.get(i) ? 7 : 0);
  }
  return t_pattern(std::move(t));
}

GateSpec GateSpec::z_rotation(int level) {
  GateSpec g;
  g.kind = Kind::kZRotation;
  g.level = level;
  return g;
}

GateSpec GateSpec::qfd(std::vector<std::vector<int64_t>> r, int level) {
  GateSpec g;
  g.kind = Kind::kQfd;
  g.r = std::move(r);
  g.level = level;
  return g;
}

void GateSpec::validate(size_t n) const {
  switch (kind) {
    case Kind::kTPattern:
      if (t.size() != n) {
        throw std::invalid_argument("T pattern has length " +
                                    std::to_string(t.size()) + ", expected " +
                                    std::to_string(n));
      }
      for (int e : t) {
        if (e < 0 || e > 7) {
          throw std::invalid_argument("T pattern entries must be in 0..7");
        }
      }
      break;
    case Kind::kZRotation:
      if (level < 1 || level > 20) {
        throw std::invalid_argument("rotation level must be in 1..20");
      }
      break;
    case Kind::kQfd:
      if (level < 2 || level > 20) {
        throw std::invalid_argument("QFD level must be in 2..20");
      }
      if (r.size() != n) {
        throw std::invalid_argument("QFD matrix has the wrong size");
      }
      for (size_t i = 0; i < n; i++) {
        if (r[i].size() != n) {
          throw std::invalid_argument("QFD matrix is not square");
        }
        for (size_t j = 0; j < n; j++) {
          if (mod(r[i][j] - r[j][i], int64_t{1} << level) != 0) {
            throw std::invalid_argument("QFD matrix is not symmetric");
          }
        }
      }
      break;
  }
}

std::string GateSpec::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kTPattern:
      out << "T^t, t=";
      for (int e : t) {
        out << e;
      }
      break;
    case Kind::kZRotation:
      out << "Z-rotation, level " << level;
      break;
    case Kind::kQfd:
      out << "QFD, level " << level;
      break;
  }
  return out.str();
}

CycScalar inv_sqrt2_pow(size_t w) {
  CycScalar base = CycScalar::from_int(1, 3);
  if (w % 2) {
    base = CycScalar::zeta8(1) + CycScalar::zeta8(7);
  }
  return base.scaled_pow2(-static_cast<int>((w + w % 2) / 2));
}

DiagonalPauliSum conj_transversal_T(const PauliOp &p) {
  return conj_T_pattern(p, BitVector::ones(p.num_qubits()),
                        BitVector(p.num_qubits()));
}

DiagonalPauliSum conj_T_pattern(const PauliOp &p, const BitVector &t1,
                                const BitVector &t7) {
  if (!(t1 & t7).is_zero()) {
    throw std::invalid_argument("t1 and t7 supports overlap");
  }
  BitVector s = p.x & (t1 | t7);
  require_within_cap("T-pattern conjugation terms",
                     std::ldexp(1.0, static_cast<int>(s.weight())),
                     kDefaultEnumerationCap);
  CycScalar scale = inv_sqrt2_pow(s.weight());
  BitVector bt = p.z ^ t7;
  DiagonalPauliSum out(p.num_qubits());
  for_each_subvector(s, [&](const BitVector &y) {
    out.add(PauliOp(p.x, p.z ^ y, p.phase), sign_scalar(bt.dot(y), scale));
  });
  return out;
}

DiagonalPauliSum conj_T_powers(const PauliOp &p, const std::vector<int> &t) {
  size_t n = p.num_qubits();
  if (t.size() != n) {
    throw std::invalid_argument("T powers: wrong length");
  }
  BitVector t1(n), t2(n), t3(n), flip(n);
  for (size_t i = 0; i < n; i++) {
    int e = mod(t[i], 8);
    t1.set(i, e == 1 || e == 5);
    t2.set(i, e == 2 || e == 6);
    t3.set(i, e == 3 || e == 7);
    flip.set(i, e >= 3 && e <= 6);
  }
  BitVector fixed = p.x & t2;
  BitVector s = p.x & (t1 | t3);
  require_within_cap("T-power conjugation terms",
                     std::ldexp(1.0, static_cast<int>(s.weight())),
                     kDefaultEnumerationCap);
  CycScalar scale =
      sign_scalar(p.x.dot(flip), inv_sqrt2_pow(s.weight()));
  BitVector bt = p.z ^ t3;
  DiagonalPauliSum out(n);
  for_each_subvector(s, [&](const BitVector &y) {
    BitVector z = fixed ^ y;
    out.add(PauliOp(p.x, p.z ^ z, p.phase), sign_scalar(bt.dot(z), scale));
  });
  return out;
}

DiagonalPauliSum conj_z_rotation(const PauliOp &p, int level) {
  size_t n = p.num_qubits();
  if (level < 1) {
    throw std::invalid_argument("rotation level must be >= 1");
  }
  if (level <= 2) {
    return conj_T_powers(p, std::vector<int>(n, level == 1 ? 4 : 2));
  }
  size_t w = p.x.weight();
  require_within_cap("Z-rotation conjugation terms",
                     std::ldexp(1.0, static_cast<int>(w)),
                     kDefaultEnumerationCap);
  // cos^{w-k} sin^k replaces sec^{-w} tan^k.
  CycScalar c = cos_const(level), s = sin_const(level);
  std::vector<CycScalar> cpow(w + 1), spow(w + 1);
  cpow[0] = spow[0] = CycScalar::from_int(1, level);
  for (size_t k = 1; k <= w; k++) {
    cpow[k] = cpow[k - 1] * c;
    spow[k] = spow[k - 1] * s;
  }
  DiagonalPauliSum out(n);
  for_each_subvector(p.x, [&](const BitVector &y) {
    size_t k = y.weight();
    out.add(PauliOp(p.x, p.z ^ y, p.phase),
            sign_scalar(p.z.dot(y), cpow[w - k] * spow[k]));
  });
  return out;
}

DiagonalPauliSum qfd_conjugate(const PauliOp &p,
                               const std::vector<std::vector<int64_t>> &r,
                               int level, uint64_t cap) {
  size_t n = p.num_qubits();
  GateSpec::qfd(r, level).validate(n);
  if (n > 30) {
    throw EnumerationCapExceeded("QFD coefficients", std::ldexp(1.0, 2 * n),
                                 cap);
  }
  uint64_t dim = uint64_t{1} << n;
  int64_t modulus = int64_t{1} << level;
  int64_t half = modulus / 2;
  int64_t quarter = modulus / 4;

  std::vector<int64_t> a(n), ar(n, 0);
  for (size_t i = 0; i < n; i++) {
    a[i] = p.x.get(i);
  }
  for (size_t j = 0; j < n; j++) {
    for (size_t i = 0; i < n; i++) {
      ar[j] += a[i] * mod(r[i][j], modulus);
    }
    ar[j] = mod(ar[j], modulus);
  }
  int64_t ara = 0;
  for (size_t j = 0; j < n; j++) {
    ara += a[j] * ar[j];
  }
  int64_t phi = mod((1 - quarter) * mod(ara, modulus), modulus);

  // R-tilde over Z_{2^{level-1}}.
  std::vector<std::vector<int64_t>> rt(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; i++) {
    for (size_t j = 0; j < n; j++) {
      if (i == j) {
        rt[i][i] = mod((1 + quarter) * ar[i] - 2 * ar[i] * a[i], half);
      } else {
        int64_t mixed = (1 - a[i]) * a[j] + a[i] * (1 - a[j]);
        rt[i][j] = mod(-mixed * r[i][j], half);
      }
    }
  }

  std::vector<int64_t> cls(dim);
  for (uint64_t v = 0; v < dim; v++) {
    int64_t e = 0;
    for (size_t i = 0; i < n; i++) {
      if (!((v >> i) & 1)) {
        continue;
      }
      e += rt[i][i];
      for (size_t j = i + 1; j < n; j++) {
        if ((v >> j) & 1) {
          e += 2 * rt[i][j];
        }
      }
    }
    cls[v] = mod(e, half);
  }
  std::vector<int64_t> classes(cls);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  require_within_cap("QFD Walsh transforms",
                     static_cast<double>(classes.size()) * (n + 1) * dim, cap);

  // Per exponent class: Walsh transform of its indicator.
  std::vector<std::vector<int64_t>> walsh;
  for (int64_t c : classes) {
    std::vector<int64_t> f(dim);
    for (uint64_t v = 0; v < dim; v++) {
      f[v] = cls[v] == c;
    }
    for (uint64_t len = 1; len < dim; len <<= 1) {
      for (uint64_t i = 0; i < dim; i += 2 * len) {
        for (uint64_t j = i; j < i + len; j++) {
          int64_t u = f[j], w = f[j + len];
          f[j] = u + w;
          f[j + len] = u - w;
        }
      }
    }
    walsh.push_back(std::move(f));
  }

  DiagonalPauliSum out(n);
  CycScalar front = CycScalar::root_of_unity(level, phi)
                        .times_root(3, p.phase)
                        .scaled_pow2(-static_cast<int>(n));
  for (uint64_t x = 0; x < dim; x++) {
    CycScalar cx(std::max(level - 1, 2));
    for (size_t ci = 0; ci < classes.size(); ci++) {
      if (walsh[ci][x] != 0) {
        cx += CycScalar::root_of_unity(level - 1, classes[ci]) *
              CycScalar::from_int(walsh[ci][x]);
      }
    }
    if (cx.is_zero()) {
      continue;
    }
    IntegerPauli e;
    e.a = a;
    e.b.resize(n);
    int64_t ax = 0;
    for (size_t i = 0; i < n; i++) {
      int64_t xi = (x >> i) & 1;
      e.b[i] = p.z.get(i) + ar[i] + xi;
      ax += a[i] * xi;
    }
    // i^{-a.x} = zeta_8^{-2 a.x}.
    e.phase = static_cast<int>(mod(-2 * ax, 8));
    out.add(normalize(e), front * cx);
  }
  return out;
}

DiagonalPauliSum conjugate(const PauliOp &p, const GateSpec &gate,
                           uint64_t cap) {
  gate.validate(p.num_qubits());
  switch (gate.kind) {
    case GateSpec::Kind::kTPattern: {
      bool pattern = std::all_of(gate.t.begin(), gate.t.end(),
                                 [](int e) { return e == 0 || e == 1 || e == 7; });
      if (!pattern) {
        return conj_T_powers(p, gate.t);
      }
      BitVector t1(p.num_qubits()), t7(p.num_qubits());
      for (size_t i = 0; i < gate.t.size(); i++) {
        t1.set(i, gate.t[i] == 1);
        t7.set(i, gate.t[i] == 7);
      }
      return conj_T_pattern(p, t1, t7);
    }
    case GateSpec::Kind::kZRotation:
      return conj_z_rotation(p, gate.level);
    case GateSpec::Kind::kQfd:
      return qfd_conjugate(p, gate.r, gate.level, cap);
  }
  throw std::logic_error("unknown gate kind");
}

DiagonalPauliSum dense_oracle(const PauliOp &p, const GateSpec &gate) {
  size_t n = p.num_qubits();
  if (n > 5) {
    throw std::invalid_argument("dense oracle is limited to n <= 5");
  }
  gate.validate(n);
  PhaseTable table = phase_table(gate, n);
  uint64_t dim = uint64_t{1} << n;
  int64_t order = int64_t{1} << table.level;
  uint64_t a = to_bits(p.x);

  // Ratio function D_v = phi(v ^ a) / phi(v), as exponents.
  std::vector<int64_t> ratio(dim);
  for (uint64_t v = 0; v < dim; v++) {
    ratio[v] = mod(table.exponent[v ^ a] - table.exponent[v], order);
  }
  DiagonalPauliSum out(n);
  for (uint64_t x = 0; x < dim; x++) {
    // Tr(E(0,x) D) = sum_v (-1)^{v.x} D_v.
    std::vector<int64_t> count(order, 0);
    for (uint64_t v = 0; v < dim; v++) {
      count[ratio[v]] += parity(v & x) ? -1 : 1;
    }
    CycScalar trace(std::max(table.level, 2));
    for (int64_t c = 0; c < order; c++) {
      if (count[c] != 0) {
        trace += CycScalar::root_of_unity(table.level, c) *
                 CycScalar::from_int(count[c]);
      }
    }
    if (trace.is_zero()) {
      continue;
    }
    PauliOp term = multiply(p, PauliOp(BitVector(n), from_bits(x, n), 0));
    out.add(term, trace.scaled_pow2(-static_cast<int>(n)));
  }
  return out;
}

DiagonalPauliSum dense_oracle(const DiagonalPauliSum &s, const GateSpec &gate) {
  DiagonalPauliSum out(s.n());
  for (const auto &[key, c] : s.terms()) {
    out.add(dense_oracle(PauliOp(key.first, key.second, 0), gate), c);
  }
  return out;
}

namespace {

// Per-fiber data for the closed-form fast path. Conjugating E(a,b)
// gives sum over y under s of g(|y|) (-1)^{(b + t7).y} E(a, b ^ y). The fiber
// sum is invariant under the pure-Z stabilizers, so it suffices to compare
// coefficients at b0 ^ y' for y' ranging over a complement of Z_h in the
// subsets of s. Each such coefficient only involves z in Z_h.
std::optional<Witness> check_fiber_fast(const StabilizerCode &code,
                                        const BitVector &a, const BitVector &s,
                                        const BitVector &t7,
                                        const std::vector<CycScalar> &g) {
  size_t w = s.weight();
  PauliOp h = code.element_with_x(a);
  Subspace zh = code.z_space().restricted_to(s);

  std::vector<uint64_t> zc;
  std::vector<int> sigma;
  zh.for_each_element([&](const BitVector &z) {
    PauliOp e = multiply(h, z_element(code, z));
    zc.push_back(to_bits(compress(z, s)));
    sigma.push_back(e.phase == 0 ? 1 : -1);
  });
  std::vector<BitVector> short_basis;
  for (const auto &z : zh.basis()) {
    short_basis.push_back(compress(z, s));
  }
  Subspace zt(w, short_basis);
  std::vector<size_t> free_positions;
  for (size_t i = 0, pi = 0; i < w; i++) {
    if (pi < zt.pivots().size() && zt.pivots()[pi] == i) {
      pi++;
    } else {
      free_positions.push_back(i);
    }
  }
  uint64_t bt = to_bits(compress(h.z ^ t7, s));
  int eps_h = h.phase == 0 ? 1 : -1;

  std::vector<int64_t> graded(w + 1);
  uint64_t reps = uint64_t{1} << free_positions.size();
  uint64_t yp = 0;
  for (uint64_t gidx = 0; gidx < reps; gidx++) {
    if (gidx > 0) {
      yp ^= uint64_t{1} << free_positions[std::countr_zero(gidx)];
    }
    std::fill(graded.begin(), graded.end(), 0);
    for (size_t i = 0; i < zc.size(); i++) {
      uint64_t y = zc[i] ^ yp;
      int sign = sigma[i] * (parity((bt ^ zc[i]) & y) ? -1 : 1);
      graded[std::popcount(y)] += sign;
    }
    CycScalar coeff;
    for (size_t k = 0; k <= w; k++) {
      if (graded[k] != 0) {
        coeff += g[k] * CycScalar::from_int(graded[k]);
      }
    }
    CycScalar expected = CycScalar::from_int(yp == 0 ? eps_h : 0);
    if (!(coeff == expected)) {
      Witness wit;
      wit.a = a;
      wit.violation = Violation::kResidual;
      wit.offending = h.z ^ unpuncture(from_bits(yp, w), s);
      wit.detail = "coefficient " + coeff.to_string() + ", expected " +
                   expected.to_string() + ", residual " +
                   (coeff - expected).to_string();
      return wit;
    }
  }
  return std::nullopt;
}

double generic_term_bound(const BitVector &a, const GateSpec &gate, size_t n) {
  switch (gate.kind) {
    case GateSpec::Kind::kTPattern: {
      size_t w = 0;
      for (size_t i = 0; i < n; i++) {
        if (a.get(i) && gate.t[i] % 2) {
          w++;
        }
      }
      return std::ldexp(1.0, static_cast<int>(w));
    }
    case GateSpec::Kind::kZRotation:
      return gate.level <= 2 ? 1.0
                             : std::ldexp(1.0, static_cast<int>(a.weight()));
    case GateSpec::Kind::kQfd:
      return std::ldexp(1.0, static_cast<int>(n)) * (n + 2) *
             std::min(std::ldexp(1.0, gate.level - 1),
                      std::ldexp(1.0, static_cast<int>(n)));
  }
  return 0;
}

}  // namespace

Verdict projector_check(const StabilizerCode &code, const GateSpec &gate,
                        uint64_t cap) {
  size_t n = code.n();
  gate.validate(n);
  Verdict verdict;
  std::vector<BitVector> fibers = nonzero_x_parts(code, cap);

  bool fast = false;
  BitVector t1(n), t7(n);
  if (gate.kind == GateSpec::Kind::kTPattern) {
    fast = std::all_of(gate.t.begin(), gate.t.end(),
                       [](int e) { return e == 0 || e == 1 || e == 7; });
    for (size_t i = 0; i < n && fast; i++) {
      t1.set(i, gate.t[i] == 1);
      t7.set(i, gate.t[i] == 7);
    }
  } else if (gate.kind == GateSpec::Kind::kZRotation && gate.level >= 3) {
    fast = true;
    t1 = BitVector::ones(n);
  }

  if (fast) {
    double work = 0;
    for (const auto &a : fibers) {
      work += std::ldexp(1.0, static_cast<int>((a & (t1 | t7)).weight()));
    }
    require_within_cap("projector expansion", work, cap);
    for (const auto &a : fibers) {
      BitVector s = a & (t1 | t7);
      size_t w = s.weight();
      if (w == 0) {
        continue;
      }
      if (w > 62) {
        throw EnumerationCapExceeded("projector expansion",
                                     std::ldexp(1.0, static_cast<int>(w)), cap);
      }
      std::vector<CycScalar> g(w + 1);
      if (gate.kind == GateSpec::Kind::kTPattern) {
        std::fill(g.begin(), g.end(), inv_sqrt2_pow(w));
      } else {
        CycScalar c = cos_const(gate.level), sn = sin_const(gate.level);
        for (size_t k = 0; k <= w; k++) {
          g[k] = c.pow(static_cast<unsigned>(w - k)) *
                 sn.pow(static_cast<unsigned>(k));
        }
      }
      if (auto wit = check_fiber_fast(code, a, s, t7, g)) {
        verdict.add(std::move(*wit));
        return verdict;
      }
    }
    return verdict;
  }

  double work = 0;
  double zsize = std::ldexp(1.0, static_cast<int>(code.z_space().dim()));
  for (const auto &a : fibers) {
    work += zsize * generic_term_bound(a, gate, n);
  }
  require_within_cap("projector expansion", work, cap);
  CycScalar one = CycScalar::from_int(1);
  for (const auto &a : fibers) {
    DiagonalPauliSum image(n), target(n);
    for_each_fiber_element(code, a, cap, [&](const PauliOp &e) {
      target.add(e, one);
      image.add(conjugate(e, gate, cap), one);
    });
    if (image == target) {
      continue;
    }
    // Report the first differing term in key order.
    DiagonalPauliSum diff = image;
    diff.add(target, CycScalar::from_int(-1));
    const auto &[key, residual] = *diff.terms().begin();
    Witness wit;
    wit.a = a;
    wit.violation = Violation::kResidual;
    wit.offending = key.second;
    wit.detail = "coefficient " +
                 image.coefficient(key.first, key.second).to_string() +
                 ", expected " +
                 target.coefficient(key.first, key.second).to_string() +
                 ", residual " + residual.to_string();
    verdict.add(std::move(wit));
    return verdict;
  }
  return verdict;
}

DiagonalPauliSum projector(const StabilizerCode &code, uint64_t cap) {
  require_within_cap("projector terms",
                     std::ldexp(1.0, static_cast<int>(code.r())), cap);
  DiagonalPauliSum out(code.n());
  CycScalar scale =
      CycScalar::from_int(1).scaled_pow2(-static_cast<int>(code.r()));
  code.x_space().for_each_element(
      [&](const BitVector &a) {
        for_each_fiber_element(code, a, cap,
                               [&](const PauliOp &e) { out.add(e, scale); });
      },
      cap);
  return out;
}

DiagonalPauliSum conjugated_projector(const StabilizerCode &code,
                                      const GateSpec &gate, uint64_t cap) {
  gate.validate(code.n());
  double work = 0;
  double zsize = std::ldexp(1.0, static_cast<int>(code.z_space().dim()));
  code.x_space().for_each_element(
      [&](const BitVector &a) {
        work += zsize * generic_term_bound(a, gate, code.n());
      },
      cap);
  require_within_cap("conjugated projector terms", work, cap);
  DiagonalPauliSum out(code.n());
  CycScalar scale =
      CycScalar::from_int(1).scaled_pow2(-static_cast<int>(code.r()));
  code.x_space().for_each_element(
      [&](const BitVector &a) {
        for_each_fiber_element(code, a, cap, [&](const PauliOp &e) {
          out.add(conjugate(e, gate, cap), scale);
        });
      },
      cap);
  return out;
}

}  // namespace csst
