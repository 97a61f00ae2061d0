#include <random>

#include "csst/conjugation.h"
#include "csst/logical.h"
#include "csst/rm.h"
#include "csst/transversal.h"
#include "doctest.h"
#include "test_util.h"

using namespace csst;
using csst::testing::random_subspace;
using csst::testing::random_vector;

namespace {

BitVector bv(const char *s) { return BitVector::from_string(s); }

// Random CSS code: C2 inside C1, logical X from the coset space, random Z
// signs. Returns nothing when C1 is degenerate for the draw.
std::optional<CssCode> random_css(size_t n, std::mt19937_64 &rng) {
  Subspace c2 = random_subspace(n, rng() % 3, rng);
  Subspace c1 = c2.sum(random_subspace(n, 1 + rng() % 3, rng));
  Subspace c1_perp = dual(c1);
  auto lx = coset_basis(c1, c2);
  if (lx.empty()) return std::nullopt;
  std::vector<int> signs;
  for (size_t i = 0; i < c1_perp.dim(); i++) signs.push_back(rng() % 4 ? 1 : -1);
  auto lz = paired_logical_z(c2, c1_perp, lx);
  return CssCode(n, c2.basis(), c1_perp.basis(), signs, lx, lz);
}

// Repetition code of length 9: T^9 multiplies |1...1> by zeta_8^9.
CssCode repetition9() {
  Subspace c1(9, {BitVector::ones(9)});
  return CssCode(9, {}, dual(c1).basis(), {}, {BitVector::ones(9)},
                 {bv("100000000")});
}

bool profile_constant(const CssCode &code, int level) {
  try {
    coset_phase_profile(code, level);
    return true;
  } catch (const NonConstantCoset &) {
    return false;
  }
}

}  // namespace

TEST_CASE("triorthogonality") {
  CHECK(check_triorthogonal(BitMatrix::from_strings({"1011"})));
  CHECK_FALSE(check_triorthogonal(BitMatrix::from_strings({"110", "011"})));
  CHECK_FALSE(check_triorthogonal(BitMatrix::from_strings({"1100", "1010", "1001"})));
  CHECK(check_triorthogonal(g1_matrix(catalog("128214"))));
  // Punctured RM(1,4) plus the simplex rows: every pair and triple is even.
  CHECK(check_triorthogonal(g1_matrix(catalog("1513"))));
  CHECK_FALSE(check_triorthogonal(g1_matrix(catalog("832"))));
}

TEST_CASE("logical identity") {
  CHECK(check_logical_identity(catalog("622")).pass);
  CHECK(check_logical_identity(catalog("128214")).pass);
  Verdict v = check_logical_identity(catalog("1513"));
  CHECK_FALSE(v.pass);
  CHECK(v.first_violation()->detail.find("condition 1") != std::string::npos);
  CHECK_FALSE(check_logical_identity(catalog("622_plus")).pass);
  CHECK_FALSE(check_logical_identity(catalog("64154")).pass);
}

TEST_CASE("generator criteria match full enumeration") {
  LogicalOptions full;
  full.enumerate = true;
  for (const char *name : {"622", "622_plus", "832", "1513", "1632_bacon_shor",
                           "1632_monomial"}) {
    CAPTURE(name);
    CssCode code = catalog(name);
    CHECK(check_logical_identity(code).pass ==
          check_logical_identity(code, full).pass);
    CHECK(check_logical_transversal_T(code).pass ==
          check_logical_transversal_T(code, full).pass);
  }
  std::mt19937_64 rng(3);
  int identity = 0, logical_t = 0;
  for (int trial = 0; trial < 300; trial++) {
    auto code = random_css(3 + rng() % 7, rng);
    if (!code) continue;
    bool id = check_logical_identity(*code).pass;
    CHECK(id == check_logical_identity(*code, full).pass);
    bool t = check_logical_transversal_T(*code).pass;
    CHECK(t == check_logical_transversal_T(*code, full).pass);
    identity += id;
    logical_t += t;
    CHECK_FALSE((id && t));
  }
  MESSAGE(identity << " identity and " << logical_t << " logical-T passes");
}

TEST_CASE("logical transversal T") {
  CssCode rep = repetition9();
  CHECK(check_logical_transversal_T(rep).pass);
  CHECK_FALSE(check_logical_identity(rep).pass);
  PhaseProfile p = coset_phase_profile(rep, 3);
  CHECK(p.residues == std::vector<int64_t>{0, 1});

  Verdict v = check_logical_transversal_T(catalog("1513"));
  CHECK_FALSE(v.pass);
  CHECK(v.first_violation()->violation == Violation::kWeightCongruence);
  CHECK(check_logical_transversal_T(catalog("832")).first_violation()->violation ==
        Violation::kNotTriorthogonal);
}

TEST_CASE("Bravyi-Haah Q matches the weight congruence") {
  for (CssCode code : {catalog("1513"), repetition9()}) {
    BitMatrix g1 = g1_matrix(code);
    size_t rows = g1.num_rows(), k = code.k();
    for (uint64_t d = 0; d < (uint64_t{1} << rows); d++) {
      BitVector dv(rows), u(code.n());
      for (size_t i = 0; i < rows; i++) {
        if ((d >> i) & 1) {
          dv.set(i);
          u ^= g1.row(i);
        }
      }
      size_t c = std::popcount(d & ((uint64_t{1} << k) - 1));
      bool congruent = u.weight() % 8 == c % 8;
      CHECK((bravyi_haah_Q(code, dv) == 0) == congruent);
    }
    CHECK(bravyi_haah_Q(code, BitVector(rows)) == 0);
  }
  // The [[15,1,3]] logical row weighs 15, so Q(e_1) = 7 = 3 mod 4.
  BitVector e1(5);
  e1.set(0);
  CHECK(bravyi_haah_Q(catalog("1513"), e1) == 3);
  CHECK_THROWS_AS(bravyi_haah_Q(catalog("622"), BitVector(3)),
                  std::invalid_argument);
}

TEST_CASE("coset phase profiles") {
  PhaseProfile p = coset_phase_profile(catalog("1513"), 3);
  CHECK(p.residues == std::vector<int64_t>{0, 7});

  PhaseProfile q = coset_phase_profile(catalog("64154"), 3);
  auto hist = q.histogram();
  REQUIRE(hist.size() == 2);
  CHECK(hist[0] == std::pair<int64_t, uint64_t>{0, 18880});
  CHECK(hist[1] == std::pair<int64_t, uint64_t>{4, 13888});

  CssCode trivial(2, {bv("11")}, {bv("11")}, {});
  PhaseProfile t = coset_phase_profile(trivial, 1);
  CHECK(t.k == 0);
  CHECK(t.residues.size() == 1);

  // Weights 4 and 8 share the x1x2 coset of QRM(2,4).
  CHECK_THROWS_AS(coset_phase_profile(qrm_code(2, 4), 3), NonConstantCoset);
  try {
    coset_phase_profile(qrm_code(2, 4), 3);
  } catch (const NonConstantCoset &e) {
    CHECK(e.r1 != e.r2);
    CHECK(e.u1.weight() % 8 == static_cast<size_t>(e.r1));
    CHECK(e.u2.weight() % 8 == static_cast<size_t>(e.r2));
  }
  CHECK_THROWS_AS(coset_phase_profile(catalog("64154"), 3, 1 << 10,
                                      ProfileMethod::kExhaustive),
                  EnumerationCapExceeded);
}

TEST_CASE("the two profile methods agree") {
  for (const char *name : {"622", "622_plus", "832", "1513", "1632_bacon_shor",
                           "1632_monomial", "64154"}) {
    for (int level = 1; level <= 5; level++) {
      CAPTURE(name);
      CAPTURE(level);
      CssCode code = catalog(name);
      std::optional<PhaseProfile> a, b;
      try {
        a = coset_phase_profile(code, level, kDefaultEnumerationCap,
                                ProfileMethod::kExhaustive);
      } catch (const NonConstantCoset &) {
      }
      try {
        b = coset_phase_profile(code, level, kDefaultEnumerationCap,
                                ProfileMethod::kInclusionExclusion);
      } catch (const NonConstantCoset &e) {
        CHECK(e.r1 != e.r2);
      }
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(a->residues == b->residues);
    }
  }
}

TEST_CASE("profile constancy matches the projector expansion") {
  for (const char *name : {"622", "622_plus", "832", "1513", "1632_bacon_shor",
                           "1632_monomial"}) {
    CssCode code = catalog(name);
    StabilizerCode stab = code.to_stabilizer();
    for (int level = 1; level <= 5; level++) {
      CAPTURE(name);
      CAPTURE(level);
      CHECK(profile_constant(code, level) ==
            projector_check(stab, GateSpec::z_rotation(level)).pass);
    }
  }
  CssCode q24 = qrm_code(2, 4);
  CHECK(profile_constant(q24, 2));
  CHECK(projector_check(q24.to_stabilizer(), GateSpec::z_rotation(2)).pass);
}

TEST_CASE("ANF extraction") {
  PhaseProfile zero;
  zero.level = 3;
  zero.k = 2;
  zero.residues = {0, 0, 0, 0};
  CHECK(diag_to_anf(zero).terms.empty());
  zero.residues[3] = 4;
  CHECK(diag_to_anf(zero).to_string() == "v1*v2");
  zero.residues[3] = 2;
  CHECK_THROWS_AS(diag_to_anf(zero), std::invalid_argument);

  PhasePolynomial q = diag_to_anf(coset_phase_profile(catalog("64154"), 3));
  CHECK(q.terms.size() == 15);
  CHECK(q.degree() == 3);
  CHECK(*q.terms.begin() == std::vector<int>{1, 10, 15});
  CHECK(q == qrm_logical_polynomial(6, 2));
}

TEST_CASE("Bacon-Shor profile is CCZ up to lower-degree terms") {
  PhasePolynomial q = diag_to_anf(coset_phase_profile(catalog("1632_bacon_shor"), 3));
  CHECK(q.degree() == 3);
  CHECK(q.terms.count({1, 2, 3}) == 1);
  PhasePolynomial m = diag_to_anf(coset_phase_profile(catalog("1632_monomial"), 3));
  CHECK(m.terms.count({1, 2, 3}) == 1);
}

TEST_CASE("QRM polynomial") {
  CHECK(qrm_logical_polynomial(3, 1).to_string() == "v1*v2*v3");
  CHECK(qrm_logical_polynomial(4, 2).terms.size() == 3);
  CHECK(qrm_logical_polynomial(6, 3).terms.size() == 10);
  CHECK(qrm_logical_polynomial(9, 3).terms.size() == 280);
  auto factorial = [](size_t x) {
    uint64_t f = 1;
    for (size_t i = 2; i <= x; i++) f *= i;
    return f;
  };
  for (size_t m = 2; m <= 12; m++) {
    for (size_t r = 1; 2 * r <= m; r++) {
      if (m % r) continue;
      uint64_t expected = factorial(m);
      for (size_t b = 0; b < m / r; b++) expected /= factorial(r);
      expected /= factorial(m / r);
      CHECK(qrm_logical_polynomial(m, r).terms.size() == expected);
    }
  }
  CHECK_THROWS(qrm_logical_polynomial(6, 4));
  CHECK_THROWS(qrm_logical_polynomial(5, 2));
}

TEST_CASE("profile ANF equals the QRM polynomial") {
  for (auto [m, r] : {std::pair<size_t, size_t>{4, 2}, {6, 2}, {6, 3}}) {
    CAPTURE(m);
    PhaseProfile p = coset_phase_profile(qrm_code(r, m), static_cast<int>(m / r));
    CHECK(diag_to_anf(p) == qrm_logical_polynomial(m, r));
  }
  // r = 1: residue 0 at v = 0 and 2^{m-1} elsewhere.
  for (size_t m = 2; m <= 5; m++) {
    PhaseProfile p = coset_phase_profile(qrm_code(1, m), static_cast<int>(m));
    CHECK(p.residues[0] == 0);
    for (size_t v = 1; v < p.residues.size(); v++) {
      CHECK(p.residues[v] == (int64_t{1} << (m - 1)));
    }
  }
}

TEST_CASE("weight residues of RM polynomials") {
  auto x = [](std::initializer_list<int> vars) {
    uint32_t mask = 0;
    for (int v : vars) mask |= uint32_t{1} << (v - 1);
    return Monomial{mask};
  };
  CHECK(ax_weight_residue({}, 6, 2) == 0);
  CHECK(ax_weight_residue({x({1, 2}), x({3, 4}), x({5, 6})}, 6, 2) == 4);
  CHECK(ax_weight_residue({x({1, 2}), x({3, 4}), x({5, 6}), x({3, 5}), x({4, 6})},
                          6, 2) == 0);
  std::mt19937_64 rng(11);
  for (auto [m, r] : {std::pair<size_t, size_t>{4, 2}, {6, 2}, {6, 3}, {8, 2}}) {
    auto mons = monomials_up_to(r, m);
    for (int trial = 0; trial < 100; trial++) {
      std::vector<Monomial> f;
      for (const auto &g : mons) {
        if (rng() & 1) f.push_back(g);
      }
      CHECK_NOTHROW(ax_weight_residue(f, m, r));
    }
  }
}

TEST_CASE("self-dual divisibility") {
  Subspace e8 = rm_code(1, 3);
  Subspace rep(2, {bv("11")});
  CHECK(check_selfdual_divisibility(e8, 3));
  CHECK(selfdual_trig_identity(e8, 3));
  CHECK_FALSE(check_selfdual_divisibility(rep, 3));
  CHECK_FALSE(selfdual_trig_identity(rep, 3));
  CHECK(check_selfdual_divisibility(rep, 1));
  CHECK_THROWS_AS(check_selfdual_divisibility(rm_code(1, 4), 3),
                  std::invalid_argument);
  for (size_t m : {2, 4}) {
    Subspace c = decreasing_monomial_code(rm_half_monomials(m), m);
    for (int level = 1; level <= 6; level++) {
      CHECK(check_selfdual_divisibility(c, level) ==
            selfdual_trig_identity(c, level));
    }
  }
}

TEST_CASE("Z-rotation conditions") {
  for (const char *name : {"622", "832", "1513", "1632_bacon_shor",
                           "1632_monomial"}) {
    CAPTURE(name);
    StabilizerCode code = catalog(name).to_stabilizer();
    CHECK(check_z_rotation_conditions(code, 3).pass ==
          check_transversal_T(code).pass);
    for (int level = 1; level <= 5; level++) {
      CHECK(check_z_rotation_conditions(code, level).pass ==
            projector_check(code, GateSpec::z_rotation(level)).pass);
    }
  }
  CHECK(check_z_rotation_conditions(qrm_code(1, 3).to_stabilizer(), 3).pass);
  CHECK(check_z_rotation_conditions(qrm_code(2, 4).to_stabilizer(), 2).pass);
  Verdict bad = check_z_rotation_conditions(catalog("622_plus").to_stabilizer(), 3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_violation()->violation == Violation::kTrigSum);
  CHECK_THROWS_AS(check_z_rotation_conditions(catalog("64154").to_stabilizer(), 3),
                  EnumerationCapExceeded);
}
