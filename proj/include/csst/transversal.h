#ifndef CSST_TRANSVERSAL_H
#define CSST_TRANSVERSAL_H

#include <optional>
#include <stdexcept>
#include <string>

#include "csst/code.h"

namespace csst {

struct TransversalOptions {
  /// Which X parts are examined: every element of the X-component space, or
  /// only the canonical basis (for codes whose X space is too large).
  enum class Scope { kGroup, kGenerators };

  /// Check signs only on the punctured dual (the necessary condition) instead
  /// of requiring a correctly signed self-dual certificate.
  bool strict_signs = false;
  Scope scope = Scope::kGroup;
  uint64_t cap = kDefaultEnumerationCap;
};

/// Transversal T on every qubit.
Verdict check_transversal_T(const StabilizerCode &code,
                            const TransversalOptions &options = {});

/// T on supp(t1) and T^dagger on supp(t7).
///
/// For each nonzero X part a with s = a * (t1 + t7): |s| must be even, the
/// punctured space of Z stabilizers under s must contain its dual, and some
/// self-dual subcode A must carry the signs i^{|z| + 2 t7.z}. The last search
/// is exact: the signs define a quadratic form on Z_j whose polar form is
/// the dot product, and A exists iff the form vanishes on the punctured dual
/// and has Arf invariant zero. A passing witness carries A.
Verdict check_transversal_pattern(const StabilizerCode &code,
                                  const BitVector &t1, const BitVector &t7,
                                  const TransversalOptions &options = {});

/// True if eps_z differs from i^{|z| + 2 t7.z} for the pure Z element z.
bool sign_defect(const StabilizerCode &code, const BitVector &z,
                 const BitVector &t7);

/// x such that conjugating by X^x fixes the signs on every certificate;
/// nothing if the linear system has no solution. Throws if the weight or
/// self-dual conditions fail.
std::optional<BitVector> pauli_sign_correction(
    const StabilizerCode &code, const BitVector &t1, const BitVector &t7,
    uint64_t cap = kDefaultEnumerationCap);

/// The code conjugated by X^x: each generator picks up (-1)^{x.z}.
StabilizerCode apply_x_frame(const StabilizerCode &code, const BitVector &x);

/// A construction precondition failed; carries the offending witness.
class ConditionFailure : public std::runtime_error {
 public:
  explicit ConditionFailure(Witness w);
  const Witness &witness() const { return witness_; }

 private:
  Witness witness_;
};

/// CSS(X, C2; Z, C1^perp) with Z signs chosen so that T^t is logical.
CssCode build_csst(const Subspace &c1, const Subspace &c2, const BitVector &t1,
                   const BitVector &t7, const std::string &name = "",
                   uint64_t cap = kDefaultEnumerationCap);

/// Drops the Z parts of the mixed generators: rows E(a,b) whose b is not a
/// Z stabilizer become X stabilizers E(a,0) with sign +1, pure X rows keep
/// their signs, and the Z stabilizers are unchanged.
CssCode cssify(const StabilizerCode &code);

/// Minimum weight over the normalizer minus the stabilizer; nothing if k = 0.
std::optional<size_t> code_distance(const StabilizerCode &code,
                                    uint64_t cap = kDefaultEnumerationCap);

/// Every nonidentity stabilizer element has weight at least d.
bool is_nondegenerate(const StabilizerCode &code, size_t d,
                      uint64_t cap = kDefaultEnumerationCap);

}  // namespace csst

#endif
