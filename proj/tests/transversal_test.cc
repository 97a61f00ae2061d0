#include <random>

#include "csst/conjugation.h"
#include "csst/transversal.h"
#include "doctest.h"
#include "test_util.h"

using namespace csst;
using csst::testing::random_code;
using csst::testing::random_vector;

namespace {

BitVector bv(const char *s) { return BitVector::from_string(s); }

CssCode code_622(int sign) {
  return CssCode(6, {bv("111111")}, {bv("110000"), bv("001100"), bv("000011")},
                 {sign, sign, sign}, {bv("110000"), bv("001100")},
                 {bv("100001"), bv("001001")}, "622");
}

// Random stabilizer code: greedily add random Hermitian Paulis that commute
// with what is there and keep the group free of -I.

}  // namespace

TEST_CASE("[[6,2,2]] with -Z_iZ_{i+1} passes transversal T") {
  Verdict v = check_transversal_T(code_622(-1).to_stabilizer());
  CHECK(v.pass);
  REQUIRE(v.witnesses.size() == 1);
  REQUIRE(v.witnesses[0].certificate);
  CHECK(v.witnesses[0].certificate->dim() == 3);
}

TEST_CASE("positive signs fail with WRONG_SIGN on 110000") {
  StabilizerCode code = code_622(1).to_stabilizer();
  Verdict v = check_transversal_T(code);
  CHECK_FALSE(v.pass);
  const Witness *w = v.first_violation();
  REQUIRE(w);
  CHECK(w->violation == Violation::kWrongSign);
  CHECK(w->offending == bv("110000"));
  CHECK_FALSE(projector_check(code, GateSpec::transversal_t(6)).pass);
}

TEST_CASE("sign correction finds X1X3X5") {
  StabilizerCode code = code_622(1).to_stabilizer();
  BitVector t1 = bv("111111"), t7(6);
  auto x = pauli_sign_correction(code, t1, t7);
  REQUIRE(x);
  for (const auto &z : code.z_space().basis()) {
    CHECK(x->dot(z));
  }
  CHECK(*x == bv("101010"));
  StabilizerCode fixed = apply_x_frame(code, *x);
  CHECK(check_transversal_T(fixed).pass);
  CHECK(projector_check(fixed, GateSpec::transversal_t(6)).pass);

  auto zero = pauli_sign_correction(code_622(-1).to_stabilizer(), t1, t7);
  REQUIRE(zero);
  CHECK(zero->is_zero());
}

TEST_CASE("alternating T/T^dagger pattern needs positive signs") {
  BitVector t1 = bv("101010"), t7 = bv("010101");
  CHECK(check_transversal_pattern(code_622(1).to_stabilizer(), t1, t7).pass);
  CHECK_FALSE(
      check_transversal_pattern(code_622(-1).to_stabilizer(), t1, t7).pass);
}

TEST_CASE("full pattern equals check_transversal_T") {
  for (int sign : {1, -1}) {
    StabilizerCode code = code_622(sign).to_stabilizer();
    CHECK(check_transversal_pattern(code, bv("111111"), BitVector(6)).pass ==
          check_transversal_T(code).pass);
  }
}

TEST_CASE("odd weight and missing self-dual subcode are reported") {
  StabilizerCode odd = CssCode(3, {bv("111")}, {bv("110")}, {-1}).to_stabilizer();
  CHECK(check_transversal_T(odd).first_violation()->violation ==
        Violation::kOddWeight);
  // X^4 with no Z stabilizers: nothing inside supp(a) to be self-dual.
  StabilizerCode bare = CssCode(4, {bv("1111")}, {}, {}).to_stabilizer();
  CHECK(check_transversal_T(bare).first_violation()->violation ==
        Violation::kNoSelfDual);
  CHECK_FALSE(projector_check(bare, GateSpec::transversal_t(4)).pass);
}

TEST_CASE("adding a commuting Z generator keeps a pass") {
  CssCode base = code_622(-1);
  CssCode more(6, base.x_stabilizers(),
               {bv("110000"), bv("001100"), bv("000011"), bv("101101")},
               {-1, -1, -1, 1});
  StabilizerCode code = more.to_stabilizer();
  CHECK(check_transversal_T(code).pass);
  CHECK(projector_check(code, GateSpec::transversal_t(6)).pass);
}

TEST_CASE("checker agrees with the projector expansion on random codes") {
  std::mt19937_64 rng(17);
  int passes = 0, total = 0;
  for (int trial = 0; trial < 300; trial++) {
    size_t n = 2 + rng() % 7;
    size_t r = 1 + rng() % n;
    StabilizerCode code = random_code(n, r, rng, trial % 2 == 0);
    BitVector t1(n), t7(n);
    for (size_t i = 0; i < n; i++) {
      int c = rng() % 3;
      if (trial % 3 == 0) c = 1;
      t1.set(i, c == 1);
      t7.set(i, c == 2);
    }
    bool checker = check_transversal_pattern(code, t1, t7).pass;
    bool expansion = projector_check(code, GateSpec::t_pattern(t1, t7)).pass;
    CHECK_MESSAGE(checker == expansion, code.generators().size());
    passes += checker;
    total++;
  }
  MESSAGE(passes << " of " << total << " random codes pass");
  CHECK(passes > 0);
}

TEST_CASE("strict mode accepts what the full check accepts") {
  TransversalOptions strict;
  strict.strict_signs = true;
  StabilizerCode good = code_622(-1).to_stabilizer();
  CHECK(check_transversal_T(good, strict).pass);
  StabilizerCode bad = code_622(1).to_stabilizer();
  CHECK_FALSE(check_transversal_T(bad, strict).pass);
}

TEST_CASE("build_csst picks the [[6,2,2]] signs") {
  Subspace c2(6, {bv("111111")});
  Subspace c1 = dual(Subspace(6, {bv("110000"), bv("001100"), bv("000011")}));
  CssCode code = build_csst(c1, c2, bv("111111"), BitVector(6), "built");
  CHECK(code.k() == 2);
  for (int s : code.z_signs()) {
    CHECK(s == -1);
  }
  CHECK(check_transversal_T(code.to_stabilizer()).pass);

  CssCode alt = build_csst(c1, c2, bv("101010"), bv("010101"));
  for (int s : alt.z_signs()) {
    CHECK(s == 1);
  }
}

TEST_CASE("build_csst rejects an odd-weight X space") {
  Subspace c2(3, {bv("111")});
  Subspace c1 = dual(Subspace(3, {bv("110")}));
  CHECK_THROWS_AS(build_csst(c1, c2, bv("111"), BitVector(3)),
                  ConditionFailure);
}

TEST_CASE("cssify recovers the CSS presentation from Y^6") {
  std::vector<PauliOp> gens = {
      PauliOp::from_letters("YYYYYY"),
      PauliOp(BitVector(6), bv("110000"), 4),
      PauliOp(BitVector(6), bv("001100"), 4),
      PauliOp(BitVector(6), bv("000011"), 4),
  };
  StabilizerCode mixed(6, gens);
  CssCode out = cssify(mixed);
  CHECK(out.k() == 2);
  CHECK(out.to_stabilizer().same_group(code_622(-1).to_stabilizer()));
  CHECK(check_transversal_T(out.to_stabilizer()).pass);
}

TEST_CASE("cssify leaves a CSS code alone") {
  StabilizerCode code = code_622(-1).to_stabilizer();
  CHECK(cssify(code).to_stabilizer().same_group(code));
}

TEST_CASE("distance and degeneracy") {
  StabilizerCode code = code_622(-1).to_stabilizer();
  CHECK(code_distance(code) == 2u);
  CHECK(is_nondegenerate(code, 2));
  CHECK_FALSE(is_nondegenerate(code, 3));
  // Five-qubit code.
  std::vector<PauliOp> five;
  for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
    five.push_back(PauliOp::from_letters(s));
  }
  CHECK(code_distance(StabilizerCode(5, five)) == 3u);
  StabilizerCode full(2, {PauliOp::from_letters("XX"), PauliOp::from_letters("ZZ")});
  CHECK_FALSE(code_distance(full));
}
