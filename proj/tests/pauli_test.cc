#include "csst/pauli.h"
#include "dense.h"
#include "doctest.h"
#include "test_util.h"

using namespace csst;
using csst::testing::dense_pauli;
using csst::testing::dense_product;
using csst::testing::random_vector;

namespace {

PauliOp random_pauli(size_t n, std::mt19937_64 &rng) {
  return PauliOp(random_vector(n, rng), random_vector(n, rng),
                 static_cast<int>(rng() % 8));
}

}  // namespace

TEST_CASE("multiply examples") {
  PauliOp x = PauliOp::from_letters("X");
  PauliOp z = PauliOp::from_letters("Z");
  PauliOp xz = multiply(x, z);
  CHECK(xz.phase == 6);
  CHECK(xz.x.to_string() == "1");
  CHECK(xz.z.to_string() == "1");
  CHECK(to_string(xz) == "-iY1");
  CHECK(to_string(multiply(z, x)) == "iY1");

  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; t++) {
    PauliOp p = random_pauli(5, rng);
    p.phase = (rng() & 1) ? 4 : 0;
    PauliOp sq = multiply(p, p);
    CHECK(sq.x.is_zero());
    CHECK(sq.z.is_zero());
    CHECK(sq.phase == 0);
  }
}

TEST_CASE("signed stabilizer times commuting Z element under its support") {
  // eps_h E(a,b) * eps_z E(0,z) = eps_h eps_z i^{z.z} (-1)^{b.z} E(a, b^z).
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; t++) {
    size_t n = 1 + rng() % 9;
    BitVector a = random_vector(n, rng);
    BitVector b = random_vector(n, rng);
    BitVector zv = random_vector(n, rng) & a;
    if (zv.weight() % 2) {
      // The identity needs the two factors to commute.
      zv.flip(zv.first_one());
    }
    int eh = (rng() & 1) * 4;
    int ez = (rng() & 1) * 4;
    PauliOp prod = multiply(PauliOp(a, b, eh), PauliOp(BitVector(n), zv, ez));
    int expected = eh + ez + 2 * static_cast<int>(zv.weight()) +
                   4 * static_cast<int>(b.dot(zv));
    CHECK(prod == PauliOp(a, b ^ zv, expected));
  }
}

TEST_CASE("normalize examples") {
  IntegerPauli p{{1, 0, 1}, {2, 2, 0}, 0};
  PauliOp n = normalize(p);
  CHECK(n == PauliOp(BitVector::from_string("101"), BitVector(3), 4));
  IntegerPauli z{{0, 0}, {2, -2}, 0};
  CHECK(normalize(z) == PauliOp(2));
  IntegerPauli neg{{-1}, {0}, 0};
  CHECK(normalize(neg) == PauliOp(BitVector::from_string("1"), BitVector(1), 0));
  IntegerPauli negy{{-1}, {1}, 0};
  // E(-1,1) = i^{-1} X Z = -Y.
  CHECK(normalize(negy) == PauliOp(BitVector::from_string("1"),
                                   BitVector::from_string("1"), 4));
}

TEST_CASE("normalize agrees with the dense tensor-product definition") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; t++) {
    size_t n = 1 + rng() % 6;
    IntegerPauli p;
    for (size_t i = 0; i < n; i++) {
      p.a.push_back(static_cast<int64_t>(rng() % 9) - 4);
      p.b.push_back(static_cast<int64_t>(rng() % 9) - 4);
    }
    p.phase = static_cast<int>(rng() % 8);
    PauliOp q = normalize(p);
    CHECK(dense_pauli(q) == dense_pauli(p.a, p.b, p.phase));
    // Idempotent.
    IntegerPauli back;
    for (size_t i = 0; i < n; i++) {
      back.a.push_back(q.x.get(i));
      back.b.push_back(q.z.get(i));
    }
    back.phase = q.phase;
    CHECK(normalize(back) == q);
  }
}

TEST_CASE("multiply agrees with dense matrices and is associative") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; t++) {
    size_t n = 1 + rng() % 4;
    PauliOp p = random_pauli(n, rng);
    PauliOp q = random_pauli(n, rng);
    PauliOp r = random_pauli(n, rng);
    PauliOp pq = multiply(p, q);
    CHECK(dense_pauli(pq) == dense_product(dense_pauli(p), dense_pauli(q)));
    CHECK(multiply(pq, r) == multiply(p, multiply(q, r)));
    // Commutation law: pq = (-1)^{<p,q>} qp.
    PauliOp qp = multiply(q, p);
    qp.phase = (qp.phase + 4 * symplectic_inner(p, q)) % 8;
    CHECK(pq == qp);
  }
}

TEST_CASE("symplectic inner product and hermiticity") {
  CHECK(symplectic_inner(PauliOp::from_letters("X"), PauliOp::from_letters("Z")));
  CHECK_FALSE(symplectic_inner(PauliOp::from_letters("XX"),
                               PauliOp::from_letters("ZZ")));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; t++) {
    PauliOp p = random_pauli(6, rng);
    CHECK_FALSE(symplectic_inner(p, p));
  }
  CHECK(is_hermitian(PauliOp::from_letters("-XYZ")));
  CHECK_FALSE(is_hermitian(PauliOp::from_letters("iXYZ")));
}

TEST_CASE("pure Z products multiply signs") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; t++) {
    size_t n = 8;
    PauliOp p(BitVector(n), random_vector(n, rng), (rng() & 1) * 4);
    PauliOp q(BitVector(n), random_vector(n, rng), (rng() & 1) * 4);
    PauliOp pq = multiply(p, q);
    CHECK(pq.phase == (p.phase + q.phase) % 8);
    CHECK(pq.z == (p.z ^ q.z));
  }
}

TEST_CASE("rendering") {
  CHECK(to_string(PauliOp::from_letters("-ZZIIII")) == "-Z1Z2");
  CHECK(to_string(PauliOp::from_letters("III")) == "I");
  CHECK(to_string(PauliOp(BitVector::from_string("1"), BitVector(1), 7)) ==
        "w^7X1");
}
