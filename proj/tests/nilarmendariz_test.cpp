#include <gtest/gtest.h>

#include "support.hpp"

using namespace skewpbw;
using namespace skewpbw::testing;

namespace {

Analysis analyse(Extension::Ptr ext) { return Analysis::run(std::move(ext)); }

std::vector<SkewPoly> all_polys(const Extension& ext, const std::vector<Monomial>& support) {
  const auto N = ext.ring().size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < support.size(); ++i) count *= N;
  std::vector<SkewPoly> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    SkewPoly f = ext.zero();
    std::uint64_t rest = k;
    for (const auto& m : support) {
      f.add_term(ext.ring(), m, static_cast<Elem>(rest % N));
      rest /= N;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(NilOracle, Basics) {
  const auto an = analyse(constant_ext(z(4), 2));
  const auto& ext = *an.ext;
  const auto zero = is_nilpotent_poly_oracle(an, ext.zero());
  EXPECT_TRUE(zero.nilpotent);
  EXPECT_EQ(zero.exponent_used, 1u);
  const auto f = is_nilpotent_poly_oracle(an, poly(ext, "2 + 2*x1"));
  EXPECT_TRUE(f.nilpotent);
  EXPECT_EQ(f.exponent_used, 2u);
  EXPECT_FALSE(is_nilpotent_poly_oracle(an, ext.one()).nilpotent);
  EXPECT_EQ(oracle_bound(an, poly(ext, "2 + 2*x1")), 5u);
}

TEST(NilCriterion, Basics) {
  const auto an = analyse(constant_ext(z(4), 2));
  ASSERT_TRUE(an.theorem_hypotheses());
  const auto& ext = *an.ext;
  EXPECT_TRUE(is_nilpotent_poly_criterion(an, poly(ext, "2 + 2*x1*x2")).nilpotent);
  EXPECT_EQ(is_nilpotent_poly_checked(an, poly(ext, "2 + 2*x1*x2")).method, NilMethod::both_agree);
  EXPECT_FALSE(is_nilpotent_poly_criterion(an, poly(ext, "1 + 2*x1")).nilpotent);
  EXPECT_TRUE(is_nilpotent_poly_criterion(an, ext.zero()).nilpotent);
}

TEST(NilCriterion, NeedsHypotheses) {
  const auto an = analyse(constant_ext(m2f2(), 1));
  EXPECT_FALSE(an.theorem_hypotheses());
  EXPECT_THROW(is_nilpotent_poly_criterion(an, an.ext->one()), HypothesisNotVerified);
  EXPECT_TRUE(is_nilpotent_poly_oracle(an, an.ext->one()).at_oracle_bound);
}

TEST(NilCriterion, AgreesWithOracleOnZ4) {
  const auto an = analyse(constant_ext(z(4), 2));
  const auto& ext = *an.ext;
  const auto polys = all_polys(ext, degree_bound(ext, 1).support);
  ASSERT_EQ(polys.size(), 64u);
  int nilpotent = 0;
  for (const auto& f : polys) {
    const auto v = is_nilpotent_poly_checked(an, f);
    bool all_even = true;
    for (const auto& [m, c] : f.terms()) all_even = all_even && ext.ring().format(c) == "2";
    EXPECT_EQ(v.nilpotent, all_even) << ext.format(f);
    nilpotent += v.nilpotent;
  }
  EXPECT_EQ(nilpotent, 8);
}

TEST(NilCriterion, NilpotentPolysHaveNilCoefficients) {
  for (const auto& ext : {constant_ext(z(8), 1), constant_ext(f2xf2(), 2), constant_ext(z(4), 2)}) {
    const auto an = analyse(ext);
    ASSERT_TRUE(an.theorem_hypotheses());
    for (const auto& f : all_polys(*ext, degree_bound(*ext, 1).support)) {
      if (!is_nilpotent_poly_oracle(an, f).nilpotent) continue;
      for (const auto& [m, c] : f.terms()) EXPECT_TRUE(an.nil[c]);
    }
  }
}

TEST(DegreeBound, SupportIsSorted) {
  const auto ext = constant_ext(z(4), 2);
  const auto b = degree_bound(*ext, 2);
  ASSERT_EQ(b.support.size(), 6u);
  for (std::size_t i = 1; i < b.support.size(); ++i) EXPECT_TRUE(ext->order().less(b.support[i - 1], b.support[i]));
}

TEST(Armendariz, Z4HoldsAtBound) {
  const auto an = analyse(constant_ext(z(4), 1));
  const auto r = check_armendariz(an, ArmendarizVariant::skew_pi, degree_bound(*an.ext, 1));
  EXPECT_EQ(r.verdict, Verdict::holds_at_bound);
  EXPECT_EQ(r.work_count, 256u);
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_EQ(r.bound->scope.kind, ScopeKind::all);
}

TEST(Armendariz, MatrixCounterexample) {
  const auto an = analyse(constant_ext(m2f2(), 1));
  const auto& ext = *an.ext;
  const auto& M = ext.ring();
  const auto r = check_armendariz(an, ArmendarizVariant::skew_pi, degree_bound(ext, 1));
  ASSERT_EQ(r.verdict, Verdict::fails);
  const auto& w = std::get<PolyWitness>(*r.witness);
  EXPECT_EQ(w.f, poly(ext, "[[1,0],[0,0]] + [[0,1],[0,0]]*x1"));
  EXPECT_EQ(w.g, poly(ext, "[[0,0],[1,0]] + [[1,0],[0,0]]*x1"));
  EXPECT_TRUE(ext.mul(w.f, w.g).is_zero());
  EXPECT_EQ(w.product, el(M, "[[1,0],[0,0]]"));
  EXPECT_FALSE(an.nil[w.product]);
  EXPECT_TRUE(armendariz_witness_reproduces(an, ArmendarizVariant::skew_pi, r));
}

TEST(Armendariz, FieldHoldsForEveryVariant) {
  const auto an = analyse(constant_ext(z(2), 1));
  for (auto v : {ArmendarizVariant::skew_pi, ArmendarizVariant::sigma_delta_skew, ArmendarizVariant::sigma_skew,
                 ArmendarizVariant::skew}) {
    EXPECT_EQ(check_armendariz(an, v, degree_bound(*an.ext, 2)).verdict, Verdict::holds_at_bound)
        << variant_name(v);
  }
}

TEST(Armendariz, VariantNames) {
  for (auto v : {ArmendarizVariant::skew_pi, ArmendarizVariant::sigma_delta_skew, ArmendarizVariant::sigma_skew,
                 ArmendarizVariant::skew}) {
    EXPECT_EQ(parse_variant(variant_name(v)), v);
  }
  EXPECT_EQ(variant_property(ArmendarizVariant::skew_pi), "skew_pi_armendariz");
  EXPECT_FALSE(parse_variant("pi").has_value());
}

TEST(Armendariz, SamplingAboveThePairLimit) {
  const auto an = analyse(constant_ext(z(4), 2));
  ArmendarizOptions opts;
  opts.max_pairs = 100;
  opts.samples = 500;
  const auto r = check_armendariz(an, ArmendarizVariant::skew_pi, degree_bound(*an.ext, 1), opts);
  EXPECT_EQ(r.verdict, Verdict::holds_at_bound);
  EXPECT_EQ(r.bound->scope.kind, ScopeKind::sampled);
  EXPECT_EQ(r.bound->scope.samples, 500u);
  EXPECT_EQ(r.work_count, 500u);
}

TEST(Armendariz, WitnessSurvivesLargerSupport) {
  const auto an = analyse(constant_ext(m2f2(), 1));
  const auto small = check_armendariz(an, ArmendarizVariant::skew_pi, degree_bound(*an.ext, 1));
  ASSERT_EQ(small.verdict, Verdict::fails);
  ArmendarizOptions opts;
  opts.max_pairs = 1;
  opts.samples = 64;
  const auto big = check_armendariz(an, ArmendarizVariant::skew_pi, degree_bound(*an.ext, 2), opts);
  PropertyReport carried = small;
  carried.bound = big.bound;
  EXPECT_TRUE(armendariz_witness_reproduces(an, ArmendarizVariant::skew_pi, carried));
}

TEST(Lemmas, Z4) {
  const auto an = analyse(constant_ext(z(4), 2));
  const auto reps = verify_lemma_nil_stability(an);
  ASSERT_EQ(reps.size(), 2u);
  for (const auto& r : reps) EXPECT_EQ(r.verdict, Verdict::holds) << r.property;
}

TEST(Lemmas, ReducedProduct) {
  const auto an = analyse(constant_ext(f2xf2(), 2));
  for (const auto& r : verify_lemma_nil_stability(an)) EXPECT_EQ(r.verdict, Verdict::holds) << r.property;
}

TEST(Lemmas, DerivativeIsNotApplicable) {
  const auto an = analyse(preset("differential_ore"));
  EXPECT_THROW(verify_lemma_nil_stability(an), HypothesisNotVerified);
}

TEST(Lemmas, NonReversibleFirstLemmaNotApplicable) {
  const auto an = analyse(constant_ext(m2f2(), 1));
  const auto reps = verify_lemma_nil_stability(an);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].verdict, Verdict::not_applicable);
  EXPECT_EQ(reps[1].verdict, Verdict::holds);
}

TEST(Suite, Z4TheoremConfirmed) {
  const auto an = analyse(constant_ext(z(4), 1));
  const auto reps = verify_implication_suite(an, degree_bound(*an.ext, 1));
  bool found = false;
  for (const auto& r : reps) {
    EXPECT_NE(r.status, ImplicationStatus::violation) << r.name;
    if (r.name == "reversible_compatible_implies_skew_pi") {
      found = true;
      EXPECT_EQ(r.status, ImplicationStatus::confirmed);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Suite, MatrixAllVacuous) {
  const auto an = analyse(constant_ext(m2f2(), 1));
  for (const auto& r : verify_implication_suite(an, degree_bound(*an.ext, 1))) {
    if (r.status == ImplicationStatus::search_only) continue;
    EXPECT_EQ(r.status, ImplicationStatus::vacuous) << r.name;
  }
}

TEST(Suite, FieldCorollaryConfirmed) {
  const auto an = analyse(constant_ext(z(2), 1));
  for (const auto& r : verify_implication_suite(an, degree_bound(*an.ext, 1))) {
    if (r.name == "rigid_implies_skew_pi" || r.name == "rigid_implies_reduced_and_compatible") {
      EXPECT_EQ(r.status, ImplicationStatus::confirmed) << r.name;
    }
  }
}

TEST(Suite, NoViolationsOnCatalogDeg1) {
  for (const auto& entry : presets::catalog()) {
    const auto ext = Extension::create(presets::build(entry.name, entry.params));
    if (ext->ring().size() * ext->nvars() > 24) continue;
    const auto an = analyse(ext);
    ArmendarizOptions opts;
    opts.max_pairs = 1u << 16;
    for (const auto& r : verify_implication_suite(an, degree_bound(*ext, 1), opts)) {
      EXPECT_NE(r.status, ImplicationStatus::violation) << entry.label << " " << r.name;
    }
  }
}
