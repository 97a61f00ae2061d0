#ifndef CSST_CODE_H
#define CSST_CODE_H

#include <optional>
#include <string>
#include <vector>

#include "csst/gf2.h"
#include "csst/pauli.h"

namespace csst {

/// A stabilizer group given by r independent, commuting, Hermitian generators.
///
/// On construction the generators are row-reduced on their X parts. This
/// yields one element per basis vector of the X-component space and a signed
/// basis of Z_S, the pure Z-type elements of the group.
class StabilizerCode {
 public:
  StabilizerCode() = default;
  StabilizerCode(size_t n, std::vector<PauliOp> generators,
                 std::string name = "");

  const std::string &name() const { return name_; }
  size_t n() const { return n_; }
  size_t r() const { return generators_.size(); }
  size_t k() const { return n_ - generators_.size(); }
  const std::vector<PauliOp> &generators() const { return generators_; }

  const Subspace &x_space() const { return x_space_; }
  /// Group elements whose X parts are the canonical basis of x_space().
  const std::vector<PauliOp> &x_elements() const { return x_elements_; }
  const Subspace &z_space() const { return z_space_; }
  /// Zeta_8 phase (0 or 4) of the canonical basis vectors of z_space().
  const std::vector<int> &z_basis_phases() const { return z_phases_; }

  /// Phase (0 or 4) of E(0,z) in the group, or nothing if z is not in Z_S.
  std::optional<int> z_phase(const BitVector &z) const;
  /// A group element with X part a; throws if a is not in the X space.
  PauliOp element_with_x(const BitVector &a) const;
  /// Exact membership, sign included.
  bool contains(const PauliOp &p) const;
  /// Same group (as a set of signed operators).
  bool same_group(const StabilizerCode &other) const;

  std::vector<PauliOp> logical_x;
  std::vector<PauliOp> logical_z;

 private:
  std::string name_;
  size_t n_ = 0;
  std::vector<PauliOp> generators_;
  Subspace x_space_;
  std::vector<PauliOp> x_elements_;
  Subspace z_space_;
  std::vector<int> z_phases_;
};

/// CSS(X, C2; Z, C1^perp) with signed Z generators and logical bases.
class CssCode {
 public:
  CssCode() = default;
  /// Validates C2 inside C1 (X and Z generators commute), independence, and
  /// the logical operator relations when logicals are given.
  CssCode(size_t n, std::vector<BitVector> x_stabilizers,
          std::vector<BitVector> z_stabilizers, std::vector<int> z_signs,
          std::vector<BitVector> logical_x = {},
          std::vector<BitVector> logical_z = {}, std::string name = "");

  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  size_t n() const { return n_; }
  size_t k() const { return n_ - x_stab_.size() - z_stab_.size(); }

  const std::vector<BitVector> &x_stabilizers() const { return x_stab_; }
  const std::vector<BitVector> &z_stabilizers() const { return z_stab_; }
  /// +1 or -1 per Z generator.
  const std::vector<int> &z_signs() const { return z_signs_; }
  /// +1 or -1 per X generator; all +1 unless set.
  const std::vector<int> &x_signs() const { return x_signs_; }
  void set_x_signs(std::vector<int> signs);
  const std::vector<BitVector> &logical_x() const { return logical_x_; }
  const std::vector<BitVector> &logical_z() const { return logical_z_; }

  Subspace c2() const { return Subspace(n_, x_stab_); }
  Subspace c1_perp() const { return Subspace(n_, z_stab_); }
  Subspace c1() const { return dual(c1_perp()); }

  StabilizerCode to_stabilizer() const;
  bool operator==(const CssCode &other) const = default;

 private:
  std::string name_;
  size_t n_ = 0;
  std::vector<BitVector> x_stab_;
  std::vector<BitVector> z_stab_;
  std::vector<int> z_signs_;
  std::vector<int> x_signs_;
  std::vector<BitVector> logical_x_;
  std::vector<BitVector> logical_z_;
};

/// Logical Z vectors paired with the given logical X vectors: z in C2^perp
/// with z.x_j = delta_ij, reduced modulo C1^perp.
std::vector<BitVector> paired_logical_z(const Subspace &c2,
                                        const Subspace &c1_perp,
                                        const std::vector<BitVector> &logical_x);

/// Coset representatives of C1/C2 (extends a basis of C2 to one of C1).
std::vector<BitVector> coset_basis(const Subspace &c1, const Subspace &c2);

enum class Violation {
  kNone,
  kOddWeight,
  kNoSelfDual,
  kWrongSign,
  kResidual,
  kMembership,
  kNotTriorthogonal,
  kWeightCongruence,
  kTrigSum,
  kCancellation,
};

std::string violation_name(Violation v);

/// Evidence for one X part (or one checked item).
struct Witness {
  BitVector a;
  Violation violation = Violation::kNone;
  BitVector offending;
  std::optional<Subspace> certificate;
  std::string detail;
};

struct Verdict {
  bool pass = true;
  std::vector<Witness> witnesses;

  void add(Witness w);
  /// The first violating witness, if any.
  const Witness *first_violation() const;
};

}  // namespace csst

#endif
