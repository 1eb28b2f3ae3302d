#include <gtest/gtest.h>

#include <array>
#include <set>

#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

using Mat = std::array<int, 4>;

Mat matmul2(const Mat& a, const Mat& b) {
  return {(a[0] * b[0] + a[1] * b[2]) % 2, (a[0] * b[1] + a[1] * b[3]) % 2, (a[2] * b[0] + a[3] * b[2]) % 2,
          (a[2] * b[1] + a[3] * b[3]) % 2};
}

std::string mat_text(const Mat& m) {
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) + "," +
         std::to_string(m[3]) + "]]";
}

std::vector<Mat> all_mats() {
  std::vector<Mat> out;
  for (int k = 0; k < 16; ++k) out.push_back({(k >> 3) & 1, (k >> 2) & 1, (k >> 1) & 1, k & 1});
  return out;
}

}  // namespace

TEST(FiniteRing, ModularArithmetic) {
  const auto R = z(6);
  EXPECT_EQ(R->size(), 6u);
  EXPECT_EQ(R->format(R->mul(el(*R, "2"), el(*R, "3"))), "0");
  EXPECT_EQ(R->format(R->add(el(*R, "4"), el(*R, "5"))), "3");
  EXPECT_EQ(R->format(R->neg(el(*R, "1"))), "5");
  EXPECT_TRUE(R->is_commutative());
}

TEST(FiniteRing, MatrixProductsMatchDirectArithmetic) {
  const auto R = m2f2();
  ASSERT_EQ(R->size(), 16u);
  for (const auto& a : all_mats()) {
    for (const auto& b : all_mats()) {
      EXPECT_EQ(R->format(R->mul(el(*R, mat_text(a)), el(*R, mat_text(b)))), mat_text(matmul2(a, b)));
    }
  }
  EXPECT_FALSE(R->is_commutative());
}

TEST(FiniteRing, ParseFormatRoundTrip) {
  for (const auto& R : {z(4), f2xf2(), m2f2(), dual2()}) {
    for (Elem a = 0; a < R->size(); ++a) EXPECT_EQ(R->parse(R->format(a)), a);
  }
  EXPECT_THROW(z(4)->parse("x"), BadCoefficient);
}

TEST(FiniteRing, BrokenTablesAreRejected) {
  TablesDesc t;
  t.size = 2;
  t.add = {{0, 1}, {1, 0}};
  t.mul = {{0, 0}, {0, 0}};
  t.zero = 0;
  t.one = 1;
  try {
    FiniteRing::build(RingDescriptor::tables(t));
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.law(), "multiplicative_identity");
  }
}

TEST(FiniteRing, SizeCap) {
  RingLimits limits;
  limits.max_size = 100;
  EXPECT_THROW(FiniteRing::build(RingDescriptor::modular(101), limits), SizeCapExceeded);
}

TEST(FiniteRing, AxiomRecheckIsClean) {
  for (const auto& R : {z(4), z(6), f2xf2(), m2f2(), dual2()}) {
    const auto first = R->check_axioms();
    const auto second = R->check_axioms();
    EXPECT_EQ(first.triples_checked, second.triples_checked);
    EXPECT_FALSE(first.sampled);
  }
}

TEST(Nilpotent, Elements) {
  EXPECT_TRUE(is_nilpotent(*z(7), 0));
  const auto R = z(4);
  EXPECT_TRUE(is_nilpotent(*R, el(*R, "2")));
  EXPECT_EQ(nilpotency_index(*R, el(*R, "2")), 2u);
  EXPECT_FALSE(is_nilpotent(*R, el(*R, "1")));
  const auto M = m2f2();
  EXPECT_FALSE(is_nilpotent(*M, el(*M, "[[1,0],[0,0]]")));
}

TEST(Nilpotent, Sets) {
  const auto R = z(4);
  EXPECT_EQ(nil_set(*R), (std::vector<Elem>{el(*R, "0"), el(*R, "2")}));
  const auto P = f2xf2();
  EXPECT_EQ(nil_set(*P), (std::vector<Elem>{P->zero()}));
}

TEST(Nilpotent, MatrixNilSetMatchesDirectScan) {
  const auto M = m2f2();
  std::set<Elem> expected;
  for (const auto& a : all_mats()) {
    Mat p = a;
    for (int k = 0; k < 4; ++k) p = matmul2(p, a);
    if (p == Mat{0, 0, 0, 0}) expected.insert(el(*M, mat_text(a)));
  }
  const auto got = nil_set(*M);
  EXPECT_EQ(std::set<Elem>(got.begin(), got.end()), expected);
  EXPECT_EQ(got.size(), 4u);
  EXPECT_TRUE(expected.count(el(*M, "[[1,1],[1,1]]")));
}

TEST(RingClass, CommutativeRingIsReversible) {
  const auto v = check_ring_class(*z(4), RingClass::reversible);
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(check_ring_class(*z(4), RingClass::reduced).holds);
}

TEST(RingClass, MatrixRingIsNotReversible) {
  const auto M = m2f2();
  const auto v = check_ring_class(*M, RingClass::reversible);
  ASSERT_FALSE(v.holds);
  EXPECT_TRUE(witness_reproduces(*M, v));
  const Elem a = v.witness[0], b = v.witness[1];
  EXPECT_EQ(M->mul(a, b), M->zero());
  EXPECT_NE(M->mul(b, a), M->zero());

  RingClassVerdict known = v;
  known.witness = {el(*M, "[[0,1],[0,0]]"), el(*M, "[[1,0],[0,0]]")};
  EXPECT_TRUE(witness_reproduces(*M, known));
}

TEST(RingClass, MatrixRingIsNotNI) {
  const auto M = m2f2();
  const auto v = check_ring_class(*M, RingClass::ni);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.law, "sum");
  EXPECT_EQ(v.witness, (std::vector<Elem>{el(*M, "[[0,1],[0,0]]"), el(*M, "[[0,0],[1,0]]")}));
  EXPECT_EQ(M->add(v.witness[0], v.witness[1]), el(*M, "[[0,1],[1,0]]"));
  EXPECT_TRUE(witness_reproduces(*M, v));
}

TEST(RingClass, HierarchyOnSampleRings) {
  for (const auto& R : {z(4), z(6), z(8), f2xf2(), m2f2(), dual2(), z(2)}) {
    std::array<bool, 4> h{};
    for (auto c : {RingClass::reduced, RingClass::reversible, RingClass::semicommutative, RingClass::ni}) {
      const auto v = check_ring_class(*R, c);
      h[static_cast<int>(c)] = v.holds;
      if (!v.holds) EXPECT_TRUE(witness_reproduces(*R, v)) << ring_class_name(c);
    }
    for (int i = 0; i + 1 < 4; ++i) {
      if (h[i]) EXPECT_TRUE(h[i + 1]) << ring_class_name(static_cast<RingClass>(i));
    }
  }
}

TEST(RingClass, CommutativeNilSetIsAnIdeal) {
  for (const auto& R : {z(4), z(8), z(12), dual2()}) {
    const auto mask = nil_mask(*R);
    for (Elem a : nil_set(*R)) {
      for (Elem b = 0; b < R->size(); ++b) {
        EXPECT_TRUE(mask[R->mul(b, a)]);
        if (mask[b]) EXPECT_TRUE(mask[R->add(a, b)]);
      }
    }
  }
}

TEST(RingClass, Names) {
  for (auto c : {RingClass::reduced, RingClass::reversible, RingClass::semicommutative, RingClass::ni}) {
    EXPECT_EQ(parse_ring_class(ring_class_name(c)), c);
  }
  EXPECT_FALSE(parse_ring_class("noetherian").has_value());
}
