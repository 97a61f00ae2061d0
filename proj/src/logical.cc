#include "csst/logical.h"

#include <bit>
#include <cmath>
#include <functional>
#include <map>

#include "csst/cyclotomic.h"

namespace csst {

namespace {

double pow2(size_t e) { return std::ldexp(1.0, static_cast<int>(e)); }

std::optional<Witness> triorthogonality_violation(const BitMatrix &g) {
  const auto &rows = g.rows();
  for (size_t a = 0; a < rows.size(); a++) {
    for (size_t b = a + 1; b < rows.size(); b++) {
      BitVector ab = star(rows[a], rows[b]);
      if (ab.weight() % 2) {
        return Witness{rows[a], Violation::kNotTriorthogonal, ab, std::nullopt,
                       "rows " + std::to_string(a + 1) + "," +
                           std::to_string(b + 1) + " overlap oddly"};
      }
      for (size_t c = b + 1; c < rows.size(); c++) {
        if (ab.overlap(rows[c]) % 2) {
          return Witness{rows[a], Violation::kNotTriorthogonal,
                         star(ab, rows[c]), std::nullopt,
                         "rows " + std::to_string(a + 1) + "," +
                             std::to_string(b + 1) + "," +
                             std::to_string(c + 1) + " overlap oddly"};
        }
      }
    }
  }
  return std::nullopt;
}

// i^{|u|} E(0,u) lies in the group.
bool identity_member(const StabilizerCode &code, const BitVector &u) {
  size_t w = u.weight();
  if (w % 2) {
    return false;
  }
  auto phase = code.z_phase(u);
  return phase && *phase == ((w / 2) % 2 ? 4 : 0);
}

const char *identity_condition(bool first_logical, bool second_logical,
                               bool same) {
  if (first_logical && second_logical) {
    return same ? "condition 1" : "condition 3";
  }
  if (first_logical || second_logical) {
    return "condition 2";
  }
  return "condition 4";
}

std::vector<BitVector> logical_rows(const CssCode &code) {
  if (!code.logical_x().empty() || code.k() == 0) {
    return code.logical_x();
  }
  return coset_basis(code.c1(), code.c2());
}

// Shift s with z.s = 1 exactly on the Z generators of sign -1.
BitVector sign_shift(const CssCode &code) {
  BitMatrix system(code.n(), code.z_stabilizers());
  BitVector rhs(code.z_stabilizers().size());
  for (size_t i = 0; i < code.z_signs().size(); i++) {
    rhs.set(i, code.z_signs()[i] < 0);
  }
  if (code.z_stabilizers().empty()) {
    return BitVector(code.n());
  }
  auto s = solve_linear(system, rhs);
  if (!s) {
    throw std::logic_error("Z signs admit no basis state");
  }
  return *s;
}

// Visits the span of `gens` in Gray-code order, passing the running sum and
// the index of the element.
void gray_walk(const std::vector<BitVector> &gens, const BitVector &start,
               const std::function<void(const BitVector &, uint64_t)> &visit) {
  BitVector cur = start;
  uint64_t code = 0;
  uint64_t count = uint64_t{1} << gens.size();
  for (uint64_t i = 0; i < count; i++) {
    if (i > 0) {
      int bit = std::countr_zero(i);
      cur ^= gens[bit];
      code ^= uint64_t{1} << bit;
    }
    visit(cur, code);
  }
}

int64_t mod_pow2(int64_t x, int level) {
  int64_t m = int64_t{1} << level;
  return ((x % m) + m) % m;
}

}  // namespace

bool check_triorthogonal(const BitMatrix &g) {
  return !triorthogonality_violation(g).has_value();
}

BitMatrix g1_matrix(const CssCode &code) {
  BitMatrix g(code.n());
  for (const auto &x : logical_rows(code)) {
    g.append(x);
  }
  for (const auto &a : code.x_stabilizers()) {
    g.append(a);
  }
  return g;
}

Verdict check_logical_identity(const CssCode &code,
                               const LogicalOptions &options) {
  StabilizerCode stab = code.to_stabilizer();
  auto lx = logical_rows(code);
  const auto &xs = code.x_stabilizers();
  Verdict verdict;

  auto check_pair = [&](const BitVector &u, const BitVector &v, bool ul,
                        bool vl, bool same) {
    BitVector uv = same ? u : star(u, v);
    if (identity_member(stab, uv)) {
      return true;
    }
    verdict.add(Witness{u, Violation::kMembership, uv, std::nullopt,
                        std::string(identity_condition(ul, vl, same)) +
                            ": i^|x| E(0,x) is not a stabilizer"});
    return false;
  };

  if (!options.enumerate) {
    std::vector<std::pair<BitVector, bool>> rows;
    for (const auto &x : lx) rows.emplace_back(x, true);
    for (const auto &a : xs) rows.emplace_back(a, false);
    for (size_t i = 0; i < rows.size(); i++) {
      for (size_t j = i; j < rows.size(); j++) {
        if (!check_pair(rows[i].first, rows[j].first, rows[i].second,
                        rows[j].second, i == j)) {
          return verdict;
        }
      }
    }
    return verdict;
  }

  size_t k = lx.size(), k2 = xs.size();
  require_within_cap("check_logical_identity",
                     pow2(k) + pow2(k + k2) + pow2(2 * k) + pow2(2 * k2),
                     options.cap);
  auto logical = Subspace(code.n(), lx).elements(options.cap);
  auto stabs = Subspace(code.n(), xs).elements(options.cap);
  for (const auto &x : logical) {
    if (!check_pair(x, x, true, true, true)) return verdict;
    for (const auto &a : stabs) {
      if (!check_pair(x, a, true, false, false)) return verdict;
    }
  }
  for (size_t i = 0; i < logical.size(); i++) {
    for (size_t j = i + 1; j < logical.size(); j++) {
      if (!check_pair(logical[i], logical[j], true, true, false)) {
        return verdict;
      }
    }
  }
  for (size_t i = 0; i < stabs.size(); i++) {
    for (size_t j = i; j < stabs.size(); j++) {
      if (!check_pair(stabs[i], stabs[j], false, false, i == j)) {
        return verdict;
      }
    }
  }
  return verdict;
}

Verdict check_logical_transversal_T(const CssCode &code,
                                    const LogicalOptions &options) {
  Verdict verdict;
  BitMatrix g1 = g1_matrix(code);
  if (auto w = triorthogonality_violation(g1)) {
    verdict.add(*w);
    return verdict;
  }
  auto lx = logical_rows(code);
  const auto &xs = code.x_stabilizers();
  size_t k = lx.size();

  if (!options.enumerate) {
    const auto &rows = g1.rows();
    for (size_t i = 0; i < rows.size(); i++) {
      size_t want = i < k ? 1 : 0;
      if (rows[i].weight() % 8 != want) {
        verdict.add(Witness{rows[i], Violation::kWeightCongruence, rows[i],
                            std::nullopt,
                            "row weight " + std::to_string(rows[i].weight()) +
                                " is not " + std::to_string(want) + " mod 8"});
        return verdict;
      }
    }
    for (size_t i = 0; i < rows.size(); i++) {
      for (size_t j = i + 1; j < rows.size(); j++) {
        if (rows[i].overlap(rows[j]) % 4) {
          BitVector sum = rows[i] ^ rows[j];
          verdict.add(Witness{rows[i], Violation::kWeightCongruence, sum,
                              std::nullopt,
                              "rows " + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) +
                                  " overlap in 2 mod 4"});
          return verdict;
        }
      }
    }
    return verdict;
  }

  require_within_cap("check_logical_transversal_T", pow2(k + xs.size()),
                     options.cap);
  std::vector<BitVector> gens = lx;
  gens.insert(gens.end(), xs.begin(), xs.end());
  uint64_t cmask = (uint64_t{1} << k) - 1;
  gray_walk(gens, BitVector(code.n()), [&](const BitVector &u, uint64_t idx) {
    if (!verdict.pass) return;
    size_t c = std::popcount(idx & cmask);
    if (u.weight() % 8 != c % 8) {
      verdict.add(Witness{u, Violation::kWeightCongruence, u, std::nullopt,
                          "|x + a| = " + std::to_string(u.weight()) +
                              " but |c| = " + std::to_string(c)});
    }
  });
  return verdict;
}

int bravyi_haah_Q(const CssCode &code, const BitVector &d) {
  BitMatrix g1 = g1_matrix(code);
  const auto &rows = g1.rows();
  size_t k = code.k();
  if (d.size() != rows.size()) {
    throw std::invalid_argument("bravyi_haah_Q: d must have one bit per row");
  }
  int64_t q = 0;
  for (size_t i = 0; i < rows.size(); i++) {
    size_t w = rows[i].weight();
    if ((i < k) != (w % 2 == 1)) {
      throw std::invalid_argument(
          "bravyi_haah_Q: logical rows need odd weight, stabilizer rows even");
    }
    if (d.get(i)) {
      q += static_cast<int64_t>(w / 2);
    }
  }
  for (size_t i = 0; i < rows.size(); i++) {
    for (size_t j = i + 1; j < rows.size(); j++) {
      if (d.get(i) && d.get(j)) {
        size_t o = rows[i].overlap(rows[j]);
        if (o % 2) {
          throw std::invalid_argument("bravyi_haah_Q: odd row overlap");
        }
        q -= static_cast<int64_t>(o);
      }
    }
  }
  return static_cast<int>(mod_pow2(q, 2));
}

std::vector<std::pair<int64_t, uint64_t>> PhaseProfile::histogram() const {
  std::map<int64_t, uint64_t> counts;
  for (int64_t r : residues) {
    counts[r]++;
  }
  return {counts.begin(), counts.end()};
}

NonConstantCoset::NonConstantCoset(BitVector v_, BitVector u1_, int64_t r1_,
                                   BitVector u2_, int64_t r2_)
    : std::runtime_error("basis state " + v_.to_string() +
                         " mixes weight residues " + std::to_string(r1_) +
                         " and " + std::to_string(r2_)),
      v(std::move(v_)),
      u1(std::move(u1_)),
      u2(std::move(u2_)),
      r1(r1_),
      r2(r2_) {}

namespace {

PhaseProfile exhaustive_profile(const std::vector<BitVector> &lx,
                                const std::vector<BitVector> &xs,
                                const BitVector &shift, int level,
                                uint64_t cap) {
  size_t k = lx.size();
  require_within_cap("coset_phase_profile", pow2(k + xs.size()), cap);
  PhaseProfile profile;
  profile.level = level;
  profile.k = k;
  profile.residues.assign(uint64_t{1} << k, 0);
  gray_walk(lx, shift, [&](const BitVector &base, uint64_t v) {
    std::optional<int64_t> first;
    BitVector first_u;
    gray_walk(xs, base, [&](const BitVector &u, uint64_t) {
      int64_t r = mod_pow2(static_cast<int64_t>(u.weight()), level);
      if (!first) {
        first = r;
        first_u = u;
      } else if (r != *first) {
        BitVector vv(k);
        for (size_t i = 0; i < k; i++) vv.set(i, (v >> i) & 1);
        throw NonConstantCoset(vv, first_u, *first, u, r);
      }
    });
    profile.residues[v] = *first;
  });
  return profile;
}

PhaseProfile inclusion_exclusion_profile(const std::vector<BitVector> &lx,
                                         const std::vector<BitVector> &xs,
                                         const BitVector &shift, int level,
                                         uint64_t cap) {
  size_t k = lx.size();
  require_within_cap("coset_phase_profile: logical states", pow2(k), cap);
  std::vector<BitVector> rows = lx;
  rows.insert(rows.end(), xs.begin(), xs.end());
  const uint64_t mask = (uint64_t{1} << level) - 1;
  // (-2)^j w mod 2^level.
  auto term = [&](size_t j, size_t w) {
    uint64_t t = j < 64 ? (uint64_t{w} << j) & mask : 0;
    return j % 2 ? (~t + 1) & mask : t;
  };

  std::vector<uint64_t> coef(uint64_t{1} << k, 0);
  coef[0] = shift.weight() & mask;
  std::vector<size_t> chosen;
  std::vector<size_t> worst;  // smallest offending subset
  uint64_t nodes = 0;
  std::function<void(size_t, const BitVector &)> visit =
      [&](size_t next, const BitVector &prod) {
        for (size_t i = next; i < rows.size(); i++) {
          BitVector p = chosen.empty() ? rows[i] : star(prod, rows[i]);
          if (p.is_zero()) continue;
          if (++nodes > cap) {
            throw EnumerationCapExceeded("coset_phase_profile: row products",
                                         static_cast<double>(nodes), cap);
          }
          chosen.push_back(i);
          size_t t = chosen.size();
          uint64_t c = (term(t - 1, p.weight()) +
                        term(t, p.overlap(shift))) & mask;
          if (c != 0) {
            if (chosen.back() >= k) {
              if (worst.empty() || chosen.size() < worst.size()) {
                worst = chosen;
              }
            } else {
              uint64_t idx = 0;
              for (size_t r : chosen) idx |= uint64_t{1} << r;
              coef[idx] = (coef[idx] + c) & mask;
            }
          }
          if (t < static_cast<size_t>(level)) {
            visit(i + 1, p);
          }
          chosen.pop_back();
        }
      };
  visit(0, BitVector());

  if (!worst.empty()) {
    BitVector v(k), u1 = shift;
    for (size_t r : worst) {
      if (r < k) {
        v.set(r);
        u1 ^= rows[r];
      }
    }
    BitVector u2 = u1;
    for (size_t r : worst) {
      if (r >= k) u2 ^= rows[r];
    }
    throw NonConstantCoset(v, u1, mod_pow2(u1.weight(), level), u2,
                           mod_pow2(u2.weight(), level));
  }
  for (size_t i = 0; i < k; i++) {
    uint64_t bit = uint64_t{1} << i;
    for (uint64_t v = 0; v < coef.size(); v++) {
      if (v & bit) coef[v] = (coef[v] + coef[v ^ bit]) & mask;
    }
  }
  PhaseProfile profile;
  profile.level = level;
  profile.k = k;
  profile.residues.assign(coef.begin(), coef.end());
  return profile;
}

}  // namespace

PhaseProfile coset_phase_profile(const CssCode &code, int level, uint64_t cap,
                                 ProfileMethod method) {
  if (level < 1 || level > 62) {
    throw std::invalid_argument("coset_phase_profile: level out of range");
  }
  auto lx = logical_rows(code);
  const auto &xs = code.x_stabilizers();
  if (lx.size() > 30) {
    throw EnumerationCapExceeded("coset_phase_profile: logical states",
                                 pow2(lx.size()), cap);
  }
  if (method == ProfileMethod::kAuto) {
    method = pow2(lx.size() + xs.size()) <= static_cast<double>(cap)
                 ? ProfileMethod::kExhaustive
                 : ProfileMethod::kInclusionExclusion;
  }
  BitVector shift = sign_shift(code);
  if (method == ProfileMethod::kExhaustive) {
    return exhaustive_profile(lx, xs, shift, level, cap);
  }
  return inclusion_exclusion_profile(lx, xs, shift, level, cap);
}

size_t PhasePolynomial::degree() const {
  size_t d = 0;
  for (const auto &t : terms) {
    d = std::max(d, t.size());
  }
  return d;
}

bool PhasePolynomial::evaluate(uint64_t v) const {
  bool out = false;
  for (const auto &t : terms) {
    bool prod = true;
    for (int i : t) {
      prod = prod && ((v >> (i - 1)) & 1);
    }
    out ^= prod;
  }
  return out;
}

std::string PhasePolynomial::to_string() const {
  if (terms.empty()) {
    return "0";
  }
  std::string s;
  for (const auto &t : terms) {
    if (!s.empty()) s += " + ";
    if (t.empty()) {
      s += "1";
      continue;
    }
    for (size_t j = 0; j < t.size(); j++) {
      if (j) s += "*";
      s += "v" + std::to_string(t[j]);
    }
  }
  return s;
}

PhasePolynomial diag_to_anf(const PhaseProfile &profile) {
  int64_t half = int64_t{1} << (profile.level - 1);
  std::vector<uint8_t> f(profile.residues.size());
  for (size_t v = 0; v < f.size(); v++) {
    int64_t r = profile.residues[v];
    if (r != 0 && r != half) {
      throw std::invalid_argument("diag_to_anf: residue " + std::to_string(r) +
                                  " is not 0 or " + std::to_string(half));
    }
    f[v] = r == half;
  }
  for (size_t i = 0; i < profile.k; i++) {
    uint64_t bit = uint64_t{1} << i;
    for (uint64_t v = 0; v < f.size(); v++) {
      if (v & bit) f[v] ^= f[v ^ bit];
    }
  }
  PhasePolynomial p;
  p.k = profile.k;
  for (uint64_t v = 0; v < f.size(); v++) {
    if (!f[v]) continue;
    std::vector<int> term;
    for (size_t i = 0; i < profile.k; i++) {
      if ((v >> i) & 1) term.push_back(static_cast<int>(i + 1));
    }
    p.terms.insert(term);
  }
  return p;
}

PhasePolynomial qrm_logical_polynomial(size_t m, size_t r) {
  if (r < 1 || 2 * r > m || m % r || m > 24) {
    throw std::invalid_argument(
        "qrm_logical_polynomial: need 1 <= r <= m/2 and r | m");
  }
  auto mons = monomials_of_degree(r, m);
  std::map<uint32_t, int> index;
  for (size_t i = 0; i < mons.size(); i++) {
    index[mons[i].vars] = static_cast<int>(i + 1);
  }
  PhasePolynomial p;
  p.k = mons.size();
  std::vector<int> blocks;
  // The block holding the lowest remaining variable, then recurse.
  std::function<void(uint32_t)> split = [&](uint32_t rest) {
    if (rest == 0) {
      std::vector<int> term = blocks;
      std::sort(term.begin(), term.end());
      p.terms.insert(term);
      return;
    }
    uint32_t low = rest & (~rest + 1);
    uint32_t others = rest & ~low;
    for (const auto &mon : mons) {
      if ((mon.vars & low) && (mon.vars & ~rest) == 0) {
        blocks.push_back(index[mon.vars]);
        split(others & ~mon.vars);
        blocks.pop_back();
      }
    }
  };
  split((uint32_t{1} << m) - 1);
  return p;
}

uint64_t qrm_logical_vector(const std::vector<Monomial> &f, size_t m,
                            size_t r) {
  auto mons = monomials_of_degree(r, m);
  if (mons.size() > 64) {
    throw std::invalid_argument("qrm_logical_vector: too many logical qubits");
  }
  uint64_t v = 0;
  for (const auto &g : f) {
    if (g.degree() > r) {
      throw std::invalid_argument("polynomial degree exceeds r");
    }
    if (g.degree() < r) continue;
    auto it = std::find(mons.begin(), mons.end(), g);
    v ^= uint64_t{1} << (it - mons.begin());
  }
  return v;
}

int64_t ax_weight_residue(const std::vector<Monomial> &f, size_t m,
                          size_t r) {
  if (r < 2 || m % r) {
    throw std::invalid_argument("ax_weight_residue: need r >= 2 and r | m");
  }
  int level = static_cast<int>(m / r);
  int64_t direct =
      mod_pow2(static_cast<int64_t>(ev(f, m).weight()), level);
  bool q = qrm_logical_polynomial(m, r).evaluate(qrm_logical_vector(f, m, r));
  int64_t predicted = q ? int64_t{1} << (level - 1) : 0;
  if (direct != predicted) {
    throw std::logic_error("weight residue " + std::to_string(direct) +
                           " disagrees with 2^{m/r-1} q(f) = " +
                           std::to_string(predicted));
  }
  return direct;
}

namespace {

std::vector<uint64_t> weight_distribution(const Subspace &c, uint64_t cap) {
  if (!(dual(c) == c)) {
    throw std::invalid_argument("code is not self-dual");
  }
  std::vector<uint64_t> counts(c.ambient() + 1, 0);
  c.for_each_element([&](const BitVector &v) { counts[v.weight()]++; }, cap);
  return counts;
}

// i^t sin^t cos^{w-t} for t = 0..w.
std::vector<CycScalar> scaled_tan_powers(size_t w, int level) {
  CycScalar c = cos_const(level), s = sin_const(level);
  std::vector<CycScalar> cpow(w + 1), spow(w + 1);
  cpow[0] = spow[0] = CycScalar::from_int(1);
  for (size_t t = 1; t <= w; t++) {
    cpow[t] = cpow[t - 1] * c;
    spow[t] = spow[t - 1] * s;
  }
  std::vector<CycScalar> g(w + 1);
  for (size_t t = 0; t <= w; t++) {
    g[t] = (spow[t] * cpow[w - t]).times_root(2, static_cast<int64_t>(t % 4));
  }
  return g;
}

}  // namespace

bool check_selfdual_divisibility(const Subspace &c, int level, uint64_t cap) {
  auto counts = weight_distribution(c, cap);
  int64_t n = static_cast<int64_t>(c.ambient());
  for (size_t w = 0; w < counts.size(); w++) {
    if (counts[w] && mod_pow2(n - 2 * static_cast<int64_t>(w), level) != 0) {
      return false;
    }
  }
  return true;
}

bool selfdual_trig_identity(const Subspace &c, int level, uint64_t cap) {
  auto counts = weight_distribution(c, cap);
  auto g = scaled_tan_powers(c.ambient(), level);
  CycScalar sum = CycScalar::from_int(0);
  for (size_t w = 0; w < counts.size(); w++) {
    if (counts[w]) {
      sum += CycScalar::from_int(static_cast<int64_t>(counts[w])) * g[w];
    }
  }
  return sum == CycScalar::from_int(1);
}

Verdict check_z_rotation_conditions(const StabilizerCode &code, int level,
                                    uint64_t cap) {
  if (level < 1) {
    throw std::invalid_argument("level must be at least 1");
  }
  const Subspace &xspace = code.x_space();
  require_within_cap("check_z_rotation_conditions: X parts", pow2(xspace.dim()),
                     cap);
  std::vector<BitVector> parts = xspace.elements(cap);
  double work = 0;
  for (const auto &a : parts) {
    work += pow2(a.weight());
  }
  require_within_cap("check_z_rotation_conditions: sums", work, cap);

  Verdict verdict;
  for (const auto &a : parts) {
    if (a.is_zero()) continue;
    size_t w = a.weight();
    Subspace za = code.z_space().restricted_to(a);
    // Compressed elements of Z_a with their signs.
    std::vector<BitVector> basis;
    std::vector<int> basis_sign;
    for (const auto &z : za.basis()) {
      basis.push_back(compress(z, a));
      basis_sign.push_back(*code.z_phase(z) == 4 ? -1 : 1);
    }
    std::vector<uint64_t> elems;
    std::vector<int> signs;
    uint64_t cur = 0;
    int sign = 1;
    for (uint64_t i = 0; i < (uint64_t{1} << basis.size()); i++) {
      if (i > 0) {
        int bit = std::countr_zero(i);
        cur ^= basis[bit].word(0);
        sign *= basis_sign[bit];
      }
      elems.push_back(cur);
      signs.push_back(sign);
    }
    Subspace compressed(w, basis);
    std::vector<size_t> free;
    {
      std::vector<bool> pivot(w, false);
      for (size_t p : compressed.pivots()) pivot[p] = true;
      for (size_t i = 0; i < w; i++) {
        if (!pivot[i]) free.push_back(i);
      }
    }
    auto g = scaled_tan_powers(w, level);
    for (uint64_t s = 0; s < (uint64_t{1} << free.size()); s++) {
      uint64_t y = 0;
      for (size_t j = 0; j < free.size(); j++) {
        if ((s >> j) & 1) y |= uint64_t{1} << free[j];
      }
      std::vector<int64_t> graded(w + 1, 0);
      for (size_t e = 0; e < elems.size(); e++) {
        graded[std::popcount(elems[e] ^ y)] += signs[e];
      }
      CycScalar sum = CycScalar::from_int(0);
      for (size_t t = 0; t <= w; t++) {
        if (graded[t]) sum += CycScalar::from_int(graded[t]) * g[t];
      }
      CycScalar want = CycScalar::from_int(s == 0 ? 1 : 0);
      if (!(sum == want)) {
        BitVector yv(w);
        for (size_t i = 0; i < w; i++) yv.set(i, (y >> i) & 1);
        verdict.add(Witness{a,
                            s == 0 ? Violation::kTrigSum
                                   : Violation::kCancellation,
                            unpuncture(yv, a), std::nullopt,
                            "scaled sum is " + sum.to_string()});
        return verdict;
      }
    }
    verdict.add(Witness{a, Violation::kNone, BitVector(code.n()), za, ""});
  }
  return verdict;
}

}  // namespace csst
