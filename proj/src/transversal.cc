#include "csst/transversal.h"

#include <bit>
#include <cmath>

namespace csst {

namespace {

PauliOp z_element(const StabilizerCode &code, const BitVector &z) {
  return PauliOp(BitVector(code.n()), z, *code.z_phase(z));
}

std::vector<BitVector> x_parts_to_check(const StabilizerCode &code,
                                        const TransversalOptions &options) {
  std::vector<BitVector> out;
  if (options.scope == TransversalOptions::Scope::kGenerators) {
    return code.x_space().basis();
  }
  code.x_space().for_each_element(
      [&](const BitVector &a) {
        if (!a.is_zero()) {
          out.push_back(a);
        }
      },
      options.cap);
  return out;
}

// Symplectic (dot-product) basis of span(vecs) modulo the radical, returned
// as (e, f) pairs with e.f = 1. The span must be nondegenerate modulo rad.
std::vector<std::pair<BitVector, BitVector>> symplectic_pairs(
    std::vector<BitVector> vecs) {
  std::vector<std::pair<BitVector, BitVector>> pairs;
  while (!vecs.empty()) {
    BitVector e = vecs.back();
    vecs.pop_back();
    size_t partner = vecs.size();
    for (size_t i = 0; i < vecs.size(); i++) {
      if (e.dot(vecs[i])) {
        partner = i;
        break;
      }
    }
    if (partner == vecs.size()) {
      throw std::logic_error("symplectic_pairs: degenerate form");
    }
    BitVector f = vecs[partner];
    vecs.erase(vecs.begin() + partner);
    for (auto &v : vecs) {
      bool ve = v.dot(e), vf = v.dot(f);
      if (vf) {
        v ^= e;
      }
      if (ve) {
        v ^= f;
      }
    }
    pairs.emplace_back(std::move(e), std::move(f));
  }
  return pairs;
}

Witness analyze_x_part(const StabilizerCode &code, const BitVector &a,
                       const BitVector &tp, const BitVector &t7, bool strict) {
  size_t n = code.n();
  Witness wit;
  wit.a = a;
  BitVector s = a & tp;
  size_t w = s.weight();
  if (w == 0) {
    wit.certificate = Subspace(n);
    wit.detail = "no T gates on the support";
    return wit;
  }
  if (w % 2) {
    wit.violation = Violation::kOddWeight;
    wit.offending = s;
    wit.detail = "weight " + std::to_string(w) + " is odd";
    return wit;
  }
  Subspace zh = code.z_space().restricted_to(s);
  Subspace zt = puncture(zh, s);
  Subspace rad = dual(zt);
  for (const auto &r : rad.basis()) {
    if (!zt.contains(r)) {
      wit.violation = Violation::kNoSelfDual;
      wit.offending = unpuncture(r, s);
      wit.detail = "punctured dual vector outside Z_j";
      return wit;
    }
  }
  auto defect = [&](const BitVector &short_z) {
    return sign_defect(code, unpuncture(short_z, s), t7);
  };
  for (const auto &r : rad.basis()) {
    if (defect(r)) {
      wit.violation = Violation::kWrongSign;
      wit.offending = unpuncture(r, s);
      wit.detail = "sign on the punctured dual";
      return wit;
    }
  }

  std::optional<Subspace> constructive = self_dual_certificate(zh, s);
  std::optional<BitVector> bad_in_constructive;
  for (const auto &z : constructive->basis()) {
    // A is self-orthogonal, so the sign form is linear on it.
    if (sign_defect(code, z, t7)) {
      bad_in_constructive = z;
      break;
    }
  }
  if (!bad_in_constructive || strict) {
    wit.certificate = constructive;
    if (bad_in_constructive) {
      wit.detail = "signs checked on the punctured dual only";
    }
    return wit;
  }

  // Search for a correctly signed Lagrangian of Z_j / rad.
  std::vector<BitVector> complement;
  Subspace spanned = rad;
  for (const auto &b : zt.basis()) {
    if (!spanned.contains(b)) {
      complement.push_back(b);
      spanned = spanned.sum(Subspace(w, {b}));
    }
  }
  std::vector<BitVector> chosen = rad.basis();
  std::optional<std::pair<BitVector, BitVector>> pending;
  for (auto &[e, f] : symplectic_pairs(complement)) {
    if (!defect(e)) {
      chosen.push_back(e);
    } else if (!defect(f)) {
      chosen.push_back(f);
    } else if (pending) {
      // Two planes with Arf invariant one combine into a good pair.
      chosen.push_back(pending->first ^ e);
      chosen.push_back(pending->second ^ f);
      pending.reset();
    } else {
      pending.emplace(e, f);
    }
  }
  if (pending) {
    wit.violation = Violation::kWrongSign;
    wit.offending = *bad_in_constructive;
    wit.detail = "no self-dual subcode of Z_j carries the required signs";
    return wit;
  }
  std::vector<BitVector> full;
  for (const auto &c : chosen) {
    full.push_back(unpuncture(c, s));
  }
  wit.certificate = Subspace(n, full);
  return wit;
}

}  // namespace

bool sign_defect(const StabilizerCode &code, const BitVector &z,
                 const BitVector &t7) {
  auto phase = code.z_phase(z);
  if (!phase) {
    throw std::invalid_argument("sign_defect: " + z.to_string() +
                                " is not a Z stabilizer");
  }
  int total = *phase + 2 * static_cast<int>(z.weight()) +
              4 * static_cast<int>(t7.dot(z));
  return total % 8 != 0;
}

Verdict check_transversal_T(const StabilizerCode &code,
                            const TransversalOptions &options) {
  return check_transversal_pattern(code, BitVector::ones(code.n()),
                                   BitVector(code.n()), options);
}

Verdict check_transversal_pattern(const StabilizerCode &code,
                                  const BitVector &t1, const BitVector &t7,
                                  const TransversalOptions &options) {
  if (t1.size() != code.n() || t7.size() != code.n()) {
    throw std::invalid_argument("pattern length does not match the code");
  }
  if (!(t1 & t7).is_zero()) {
    throw std::invalid_argument("t1 and t7 supports overlap");
  }
  Verdict verdict;
  BitVector tp = t1 | t7;
  for (const auto &a : x_parts_to_check(code, options)) {
    verdict.add(analyze_x_part(code, a, tp, t7, options.strict_signs));
    if (!verdict.pass) {
      break;
    }
  }
  return verdict;
}

std::optional<BitVector> pauli_sign_correction(const StabilizerCode &code,
                                               const BitVector &t1,
                                               const BitVector &t7,
                                               uint64_t cap) {
  size_t n = code.n();
  BitVector tp = t1 | t7;
  BitMatrix system(n);
  std::vector<bool> rhs;
  TransversalOptions options;
  options.cap = cap;
  for (const auto &a : x_parts_to_check(code, options)) {
    BitVector s = a & tp;
    if (s.is_zero()) {
      continue;
    }
    if (s.weight() % 2) {
      throw std::invalid_argument("sign correction: weight of " +
                                  s.to_string() + " is odd");
    }
    auto cert = self_dual_certificate(code.z_space().restricted_to(s), s);
    if (!cert) {
      throw std::invalid_argument(
          "sign correction: no self-dual subcode under " + s.to_string());
    }
    for (const auto &z : cert->basis()) {
      system.append(z);
      rhs.push_back(sign_defect(code, z, t7));
    }
  }
  BitVector target(rhs.size());
  for (size_t i = 0; i < rhs.size(); i++) {
    target.set(i, rhs[i]);
  }
  return solve_linear(system, target);
}

StabilizerCode apply_x_frame(const StabilizerCode &code, const BitVector &x) {
  std::vector<PauliOp> gens;
  for (PauliOp g : code.generators()) {
    if (x.dot(g.z)) {
      g.phase = (g.phase + 4) % 8;
    }
    gens.push_back(std::move(g));
  }
  StabilizerCode out(code.n(), std::move(gens), code.name());
  out.logical_x = code.logical_x;
  out.logical_z = code.logical_z;
  return out;
}

ConditionFailure::ConditionFailure(Witness w)
    : std::runtime_error("CSS-T condition failed (" +
                         violation_name(w.violation) + ") at " +
                         w.a.to_string() +
                         (w.detail.empty() ? "" : ": " + w.detail)),
      witness_(std::move(w)) {}

CssCode build_csst(const Subspace &c1, const Subspace &c2, const BitVector &t1,
                   const BitVector &t7, const std::string &name,
                   uint64_t cap) {
  size_t n = c1.ambient();
  if (!c2.is_subspace_of(c1)) {
    throw std::invalid_argument("build_csst: C2 is not inside C1");
  }
  if (!(t1 & t7).is_zero()) {
    throw std::invalid_argument("t1 and t7 supports overlap");
  }
  BitVector tp = t1 | t7;
  Subspace c1_perp = dual(c1);

  // Z signs: eps_z = (-1)^{x.z} must equal i^{|z| + 2 t7.z} on certificates.
  BitMatrix system(n);
  std::vector<bool> rhs;
  c2.for_each_element(
      [&](const BitVector &a) {
        BitVector s = a & tp;
        if (s.is_zero()) {
          return;
        }
        Witness wit;
        wit.a = a;
        if (s.weight() % 2) {
          wit.violation = Violation::kOddWeight;
          wit.offending = s;
          throw ConditionFailure(wit);
        }
        auto cert = self_dual_certificate(c1_perp.restricted_to(s), s);
        if (!cert) {
          wit.violation = Violation::kNoSelfDual;
          wit.offending = s;
          throw ConditionFailure(wit);
        }
        for (const auto &z : cert->basis()) {
          system.append(z);
          rhs.push_back(((z.weight() / 2) + t7.dot(z)) % 2);
        }
      },
      cap);
  BitVector target(rhs.size());
  for (size_t i = 0; i < rhs.size(); i++) {
    target.set(i, rhs[i]);
  }
  auto x = solve_linear(system, target);
  if (!x) {
    Witness wit;
    wit.a = BitVector(n);
    wit.violation = Violation::kWrongSign;
    wit.detail = "no sign assignment satisfies every certificate";
    throw ConditionFailure(wit);
  }
  std::vector<int> signs;
  for (const auto &z : c1_perp.basis()) {
    signs.push_back(x->dot(z) ? -1 : 1);
  }

  // Star-product remark: C1 * (C2 * t') lies in C1^perp.
  for (const auto &g1 : c1.basis()) {
    for (const auto &g2 : c2.basis()) {
      BitVector prod = g1 & g2 & tp;
      if (!c1_perp.contains(prod)) {
        Witness wit;
        wit.a = g2;
        wit.violation = Violation::kNoSelfDual;
        wit.offending = prod;
        wit.detail = "star product outside C1^perp";
        throw ConditionFailure(wit);
      }
    }
  }

  std::vector<BitVector> lx = coset_basis(c1, c2);
  std::vector<BitVector> lz = paired_logical_z(c2, c1_perp, lx);
  CssCode code(n, c2.basis(), c1_perp.basis(), signs, lx, lz, name);
  TransversalOptions options;
  options.cap = cap;
  Verdict v = check_transversal_pattern(code.to_stabilizer(), t1, t7, options);
  if (!v.pass) {
    throw ConditionFailure(*v.first_violation());
  }
  return code;
}

CssCode cssify(const StabilizerCode &code) {
  size_t n = code.n();
  const Subspace &zs = code.z_space();
  std::vector<PauliOp> rows;
  for (const auto &e : code.x_elements()) {
    BitVector reduced = zs.reduce(e.z);
    rows.push_back(multiply(e, z_element(code, e.z ^ reduced)));
  }
  // Eliminate on the reduced Z parts; rows that clear become pure X.
  size_t pivot_row = 0;
  for (size_t col = 0; col < n && pivot_row < rows.size(); col++) {
    size_t p = pivot_row;
    while (p < rows.size() && !rows[p].z.get(col)) {
      p++;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[pivot_row], rows[p]);
    for (size_t j = 0; j < rows.size(); j++) {
      if (j != pivot_row && rows[j].z.get(col)) {
        rows[j] = multiply(rows[j], rows[pivot_row]);
      }
    }
    pivot_row++;
  }
  std::vector<BitVector> xs;
  std::vector<int> x_signs;
  for (const auto &row : rows) {
    xs.push_back(row.x);
    x_signs.push_back(row.z.is_zero() && row.phase == 4 ? -1 : 1);
  }
  std::vector<int> z_signs;
  for (int ph : code.z_basis_phases()) {
    z_signs.push_back(ph == 4 ? -1 : 1);
  }
  CssCode out(n, xs, zs.basis(), z_signs, {}, {},
              code.name().empty() ? "" : code.name() + "_css");
  out.set_x_signs(x_signs);
  return out;
}

std::optional<size_t> code_distance(const StabilizerCode &code, uint64_t cap) {
  size_t n = code.n();
  // Symplectic vectors (x | z) of length 2n.
  auto join = [n](const BitVector &x, const BitVector &z) {
    BitVector v(2 * n);
    for (size_t i = 0; i < n; i++) {
      v.set(i, x.get(i));
      v.set(n + i, z.get(i));
    }
    return v;
  };
  std::vector<BitVector> stab, swapped;
  for (const auto &g : code.generators()) {
    stab.push_back(join(g.x, g.z));
    swapped.push_back(join(g.z, g.x));
  }
  Subspace s(2 * n, stab);
  Subspace normalizer = dual(Subspace(2 * n, swapped));
  std::vector<BitVector> outer;
  Subspace spanned = s;
  for (const auto &b : normalizer.basis()) {
    if (!spanned.contains(b)) {
      outer.push_back(b);
      spanned = spanned.sum(Subspace(2 * n, {b}));
    }
  }
  if (outer.empty()) {
    return std::nullopt;
  }
  size_t best = n + 1;
  for_each_outside(
      s.basis(), outer, 2 * n,
      [&](const BitVector &v) {
        size_t wt = 0;
        for (size_t i = 0; i < n; i++) {
          wt += v.get(i) || v.get(n + i);
        }
        best = std::min(best, wt);
      },
      cap);
  return best;
}

bool is_nondegenerate(const StabilizerCode &code, size_t d, uint64_t cap) {
  require_within_cap("stabilizer enumeration",
                     std::ldexp(1.0, static_cast<int>(code.r())), cap);
  bool ok = true;
  code.x_space().for_each_element(
      [&](const BitVector &a) {
        PauliOp h = a.is_zero() ? PauliOp(code.n()) : code.element_with_x(a);
        code.z_space().for_each_element([&](const BitVector &z) {
          if (a.is_zero() && z.is_zero()) {
            return;
          }
          BitVector zpart = h.z ^ z;
          if ((a | zpart).weight() < d) {
            ok = false;
          }
        });
      },
      cap);
  return ok;
}

}  // namespace csst
