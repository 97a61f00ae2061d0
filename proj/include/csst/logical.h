#ifndef CSST_LOGICAL_H
#define CSST_LOGICAL_H

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "csst/code.h"
#include "csst/errors.h"
#include "csst/rm.h"

namespace csst {

/// Every pair and every triple of rows has even overlap.
bool check_triorthogonal(const BitMatrix &g);

/// Rows of G_1: the logical X vectors followed by the X stabilizers.
BitMatrix g1_matrix(const CssCode &code);

struct LogicalOptions {
  /// Enumerate group elements instead of the generator criterion.
  bool enumerate = false;
  uint64_t cap = kDefaultEnumerationCap;
};

/// Whether transversal T acts as the logical identity on a CSS-T code: for
/// all u, v in C_1 built from logical X and X stabilizers, i^{|u*v|}
/// E(0, u*v) is a stabilizer. Membership forces triple overlaps to be even,
/// which makes the condition additive in u and v, so row pairs of G_1
/// (including u = v) decide it.
Verdict check_logical_identity(const CssCode &code,
                               const LogicalOptions &options = {});

/// Whether transversal T is logical transversal T: G_1 triorthogonal and
/// |x + a| = |c| mod 8. With triorthogonality the weight is a quadratic in
/// the row coefficients mod 8, so it suffices that logical rows weigh
/// 1 mod 8, stabilizer rows 0 mod 8, and distinct rows overlap in 0 mod 4.
Verdict check_logical_transversal_T(const CssCode &code,
                                    const LogicalOptions &options = {});

/// Q(d) mod 4 over the rows of G_1 (logical rows first); logical rows must
/// have odd weight.
int bravyi_haah_Q(const CssCode &code, const BitVector &d);

/// Hamming-weight residue mod 2^level shared by each CSS basis state.
struct PhaseProfile {
  int level = 3;
  size_t k = 0;
  /// Indexed by v with bit i holding v_{i+1}.
  std::vector<int64_t> residues;

  /// residue -> number of basis states, in increasing residue order.
  std::vector<std::pair<int64_t, uint64_t>> histogram() const;
};

/// Two vectors of the same basis state with different residues.
class NonConstantCoset : public std::runtime_error {
 public:
  NonConstantCoset(BitVector v, BitVector u1, int64_t r1, BitVector u2,
                   int64_t r2);
  BitVector v, u1, u2;
  int64_t r1, r2;
};

enum class ProfileMethod {
  /// Exhaustive when 2^{k + dim C_2} fits the cap, else inclusion-exclusion.
  kAuto,
  /// Every vector of every coset.
  kExhaustive,
  /// w(y_1 + ... + y_t) = sum over subsets T of (-2)^{|T|-1} w(*_T y), so
  /// mod 2^level only products of at most `level` rows matter. The residue
  /// is a multilinear polynomial in the row coefficients; it is constant on
  /// cosets iff every monomial touching an X stabilizer row vanishes.
  kInclusionExclusion,
};

/// Residues w(s + v G + c) mod 2^level over all c in C_2, where G holds the
/// logical X vectors and s satisfies the Z signs.
PhaseProfile coset_phase_profile(const CssCode &code, int level,
                                 uint64_t cap = kDefaultEnumerationCap,
                                 ProfileMethod method = ProfileMethod::kAuto);

/// Polynomial over GF(2) in logical variables v_1..v_k.
struct PhasePolynomial {
  size_t k = 0;
  /// Each term is a sorted list of 1-based variable indices.
  std::set<std::vector<int>> terms;

  size_t degree() const;
  bool evaluate(uint64_t v) const;
  /// "v1*v10*v15 + ...", "0" when empty.
  std::string to_string() const;
  bool operator==(const PhasePolynomial &) const = default;
};

/// Moebius transform of v -> residue / 2^{level-1}; residues must be 0 or
/// 2^{level-1}.
PhasePolynomial diag_to_anf(const PhaseProfile &profile);

/// Sum over partitions of x_1..x_m into m/r blocks of size r of the product
/// of the block variables; logical qubits are degree-r monomials in
/// lexicographic order. Needs 1 <= r <= m/2 and r | m.
PhasePolynomial qrm_logical_polynomial(size_t m, size_t r);

/// Logical variable values of f: v_i = 1 iff the i-th degree-r monomial
/// appears in f.
uint64_t qrm_logical_vector(const std::vector<Monomial> &f, size_t m,
                            size_t r);

/// w(ev(f)) mod 2^{m/r}, computed directly and as 2^{m/r-1} q(f); throws
/// std::logic_error if the two differ.
int64_t ax_weight_residue(const std::vector<Monomial> &f, size_t m, size_t r);

/// For self-dual C: 2^level divides n - 2 w(v) for every codeword.
bool check_selfdual_divisibility(const Subspace &c, int level,
                                 uint64_t cap = kDefaultEnumerationCap);
/// For self-dual C: sum over v of (i tan theta)^{w(v)} equals sec^n theta,
/// theta = 2 pi / 2^level, evaluated exactly after multiplying by cos^n.
bool selfdual_trig_identity(const Subspace &c, int level,
                            uint64_t cap = kDefaultEnumerationCap);

/// The two trigonometric sums for the rotation diag(1, exp(2 pi i/2^level))
/// on every qubit, per nonzero X part a: the signed sum over Z_a equals
/// sec^{|a|} and every other coset of Z_a inside supp(a) cancels. Sums are
/// scaled by cos^{|a|} so that level 2 stays finite.
Verdict check_z_rotation_conditions(const StabilizerCode &code, int level,
                                    uint64_t cap = kDefaultEnumerationCap);

}  // namespace csst

#endif
