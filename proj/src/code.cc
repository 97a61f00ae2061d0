#include "csst/code.h"

#include <stdexcept>

namespace csst {

namespace {

size_t rank_of(size_t n, const std::vector<BitVector> &rows) {
  return Subspace(n, rows).dim();
}

}  // namespace

StabilizerCode::StabilizerCode(size_t n, std::vector<PauliOp> generators,
                               std::string name)
    : name_(std::move(name)), n_(n), generators_(std::move(generators)) {
  for (const auto &g : generators_) {
    if (g.num_qubits() != n_) {
      throw std::invalid_argument("generator " + to_string(g) +
                                  " has the wrong length");
    }
    if (!is_hermitian(g)) {
      throw std::invalid_argument("generator " + to_string(g) +
                                  " is not Hermitian");
    }
  }
  for (size_t i = 0; i < generators_.size(); i++) {
    for (size_t j = i + 1; j < generators_.size(); j++) {
      if (symplectic_inner(generators_[i], generators_[j])) {
        throw std::invalid_argument("generators " + to_string(generators_[i]) +
                                    " and " + to_string(generators_[j]) +
                                    " anticommute");
      }
    }
  }

  // Row-reduce on the X parts; products of commuting generators stay
  // Hermitian elements of the group.
  std::vector<PauliOp> rows = generators_;
  size_t r = 0;
  for (size_t col = 0; col < n_ && r < rows.size(); col++) {
    size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot].x.get(col)) {
      pivot++;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[pivot]);
    for (size_t j = 0; j < rows.size(); j++) {
      if (j != r && rows[j].x.get(col)) {
        rows[j] = multiply(rows[j], rows[r]);
      }
    }
    r++;
  }
  x_elements_.assign(rows.begin(), rows.begin() + r);
  std::vector<BitVector> x_parts;
  for (const auto &e : x_elements_) {
    x_parts.push_back(e.x);
  }
  x_space_ = Subspace(n_, x_parts);

  std::vector<PauliOp> zrows(rows.begin() + r, rows.end());
  size_t zr = 0;
  for (size_t col = 0; col < n_ && zr < zrows.size(); col++) {
    size_t pivot = zr;
    while (pivot < zrows.size() && !zrows[pivot].z.get(col)) {
      pivot++;
    }
    if (pivot == zrows.size()) {
      continue;
    }
    std::swap(zrows[zr], zrows[pivot]);
    for (size_t j = 0; j < zrows.size(); j++) {
      if (j != zr && zrows[j].z.get(col)) {
        zrows[j] = multiply(zrows[j], zrows[zr]);
      }
    }
    zr++;
  }
  if (zr != zrows.size()) {
    throw std::invalid_argument(
        zrows[zr].phase == 4 ? "generators produce -I" :
                               "generators are not independent");
  }
  std::vector<BitVector> z_parts;
  for (const auto &e : zrows) {
    z_parts.push_back(e.z);
    z_phases_.push_back(e.phase);
  }
  z_space_ = Subspace(n_, z_parts);
  if (z_space_.basis() != z_parts) {
    throw std::logic_error("Z basis is not in canonical order");
  }
}

std::optional<int> StabilizerCode::z_phase(const BitVector &z) const {
  auto coords = z_space_.coordinates(z);
  if (!coords) {
    return std::nullopt;
  }
  int phase = 0;
  for (size_t i : *coords) {
    phase += z_phases_[i];
  }
  return phase % 8;
}

PauliOp StabilizerCode::element_with_x(const BitVector &a) const {
  auto coords = x_space_.coordinates(a);
  if (!coords) {
    throw std::invalid_argument("X part " + a.to_string() +
                                " is not in the X-component space");
  }
  PauliOp e(n_);
  for (size_t i : *coords) {
    e = multiply(e, x_elements_[i]);
  }
  return e;
}

bool StabilizerCode::contains(const PauliOp &p) const {
  if (p.num_qubits() != n_ || !x_space_.contains(p.x)) {
    return false;
  }
  PauliOp rest = multiply(element_with_x(p.x), p);
  auto phase = z_phase(rest.z);
  return phase && *phase == rest.phase;
}

bool StabilizerCode::same_group(const StabilizerCode &other) const {
  if (n_ != other.n_ || r() != other.r()) {
    return false;
  }
  for (const auto &g : other.generators_) {
    if (!contains(g)) {
      return false;
    }
  }
  return true;
}

CssCode::CssCode(size_t n, std::vector<BitVector> x_stabilizers,
                 std::vector<BitVector> z_stabilizers, std::vector<int> z_signs,
                 std::vector<BitVector> logical_x,
                 std::vector<BitVector> logical_z, std::string name)
    : name_(std::move(name)),
      n_(n),
      x_stab_(std::move(x_stabilizers)),
      z_stab_(std::move(z_stabilizers)),
      z_signs_(std::move(z_signs)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
  for (const auto *group : {&x_stab_, &z_stab_, &logical_x_, &logical_z_}) {
    for (const auto &v : *group) {
      if (v.size() != n_) {
        throw std::invalid_argument("CSS vector has the wrong length");
      }
    }
  }
  if (z_signs_.empty()) {
    z_signs_.assign(z_stab_.size(), 1);
  }
  x_signs_.assign(x_stab_.size(), 1);
  if (z_signs_.size() != z_stab_.size()) {
    throw std::invalid_argument("one sign per Z generator is required");
  }
  for (int s : z_signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("Z signs must be +1 or -1");
    }
  }
  if (rank_of(n_, x_stab_) != x_stab_.size() ||
      rank_of(n_, z_stab_) != z_stab_.size()) {
    throw std::invalid_argument("CSS generators are not independent");
  }
  for (const auto &x : x_stab_) {
    for (const auto &z : z_stab_) {
      if (x.dot(z)) {
        throw std::invalid_argument("X generator " + x.to_string() +
                                    " anticommutes with Z generator " +
                                    z.to_string());
      }
    }
  }
  size_t kk = k();
  if (!logical_x_.empty()) {
    if (logical_x_.size() != kk) {
      throw std::invalid_argument("expected " + std::to_string(kk) +
                                  " logical X operators");
    }
    std::vector<BitVector> all = x_stab_;
    all.insert(all.end(), logical_x_.begin(), logical_x_.end());
    if (rank_of(n_, all) != all.size()) {
      throw std::invalid_argument("logical X operators are not independent");
    }
    for (const auto &x : logical_x_) {
      for (const auto &z : z_stab_) {
        if (x.dot(z)) {
          throw std::invalid_argument("logical X " + x.to_string() +
                                      " anticommutes with a Z stabilizer");
        }
      }
    }
  }
  if (!logical_z_.empty()) {
    if (logical_z_.size() != kk) {
      throw std::invalid_argument("expected " + std::to_string(kk) +
                                  " logical Z operators");
    }
    for (const auto &z : logical_z_) {
      for (const auto &x : x_stab_) {
        if (x.dot(z)) {
          throw std::invalid_argument("logical Z " + z.to_string() +
                                      " anticommutes with an X stabilizer");
        }
      }
    }
    if (!logical_x_.empty()) {
      for (size_t i = 0; i < kk; i++) {
        for (size_t j = 0; j < kk; j++) {
          if (logical_x_[i].dot(logical_z_[j]) != (i == j)) {
            throw std::invalid_argument(
                "logical X/Z operators are not paired");
          }
        }
      }
    }
  }
}

void CssCode::set_x_signs(std::vector<int> signs) {
  if (signs.size() != x_stab_.size()) {
    throw std::invalid_argument("one sign per X generator is required");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("X signs must be +1 or -1");
    }
  }
  x_signs_ = std::move(signs);
}

StabilizerCode CssCode::to_stabilizer() const {
  std::vector<PauliOp> gens;
  for (size_t i = 0; i < x_stab_.size(); i++) {
    gens.emplace_back(x_stab_[i], BitVector(n_), x_signs_[i] < 0 ? 4 : 0);
  }
  for (size_t i = 0; i < z_stab_.size(); i++) {
    gens.emplace_back(BitVector(n_), z_stab_[i], z_signs_[i] < 0 ? 4 : 0);
  }
  StabilizerCode code(n_, std::move(gens), name_);
  for (const auto &x : logical_x_) {
    code.logical_x.emplace_back(x, BitVector(n_), 0);
  }
  for (const auto &z : logical_z_) {
    code.logical_z.emplace_back(BitVector(n_), z, 0);
  }
  return code;
}

std::vector<BitVector> coset_basis(const Subspace &c1, const Subspace &c2) {
  if (!c2.is_subspace_of(c1)) {
    throw std::invalid_argument("coset_basis: C2 is not inside C1");
  }
  std::vector<BitVector> reps;
  Subspace spanned = c2;
  for (const auto &b : c1.basis()) {
    if (!spanned.contains(b)) {
      reps.push_back(b);
      spanned = spanned.sum(Subspace(c1.ambient(), {b}));
    }
  }
  return reps;
}

std::vector<BitVector> paired_logical_z(
    const Subspace &c2, const Subspace &c1_perp,
    const std::vector<BitVector> &logical_x) {
  size_t n = c2.ambient();
  Subspace c2_perp = dual(c2);
  const auto &basis = c2_perp.basis();
  BitMatrix system(basis.size());
  for (const auto &x : logical_x) {
    BitVector row(basis.size());
    for (size_t m = 0; m < basis.size(); m++) {
      row.set(m, basis[m].dot(x));
    }
    system.append(std::move(row));
  }
  std::vector<BitVector> out;
  for (size_t i = 0; i < logical_x.size(); i++) {
    BitVector rhs(logical_x.size());
    rhs.set(i);
    auto coeffs = solve_linear(system, rhs);
    if (!coeffs) {
      throw std::invalid_argument("logical X operators cannot be paired");
    }
    BitVector z(n);
    for (size_t m : coeffs->support()) {
      z ^= basis[m];
    }
    out.push_back(c1_perp.reduce(z));
  }
  return out;
}

std::string violation_name(Violation v) {
  switch (v) {
    case Violation::kNone:
      return "NONE";
    case Violation::kOddWeight:
      return "ODD_WEIGHT";
    case Violation::kNoSelfDual:
      return "NO_SELF_DUAL";
    case Violation::kWrongSign:
      return "WRONG_SIGN";
    case Violation::kResidual:
      return "RESIDUAL_TERM";
    case Violation::kMembership:
      return "NOT_A_STABILIZER";
    case Violation::kNotTriorthogonal:
      return "NOT_TRIORTHOGONAL";
    case Violation::kWeightCongruence:
      return "WEIGHT_CONGRUENCE";
    case Violation::kTrigSum:
      return "TRIG_SUM";
    case Violation::kCancellation:
      return "NO_CANCELLATION";
  }
  return "UNKNOWN";
}

void Verdict::add(Witness w) {
  if (w.violation != Violation::kNone) {
    pass = false;
  }
  witnesses.push_back(std::move(w));
}

const Witness *Verdict::first_violation() const {
  for (const auto &w : witnesses) {
    if (w.violation != Violation::kNone) {
      return &w;
    }
  }
  return nullptr;
}

}  // namespace csst
